#include "polarline/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace polarline {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateAlternative: return "DuplicateAlternative";
    case ErrorCode::DuplicateAlternativeInRanking:
      return "DuplicateAlternativeInRanking";
    case ErrorCode::RankingSizeMismatch: return "RankingSizeMismatch";
    case ErrorCode::CommitteeSizeOutOfRange: return "CommitteeSizeOutOfRange";
    case ErrorCode::EmptyElection: return "EmptyElection";
    case ErrorCode::UnknownAlternative: return "UnknownAlternative";
    case ErrorCode::MissingPosition: return "MissingPosition";
    case ErrorCode::MidpointTie: return "MidpointTie";
    case ErrorCode::NotLineRealizable: return "NotLineRealizable";
    case ErrorCode::CommitteeSizeMismatch: return "CommitteeSizeMismatch";
    case ErrorCode::CommitteeSizeTooLarge: return "CommitteeSizeTooLarge";
    case ErrorCode::InsufficientAlternatives: return "InsufficientAlternatives";
    case ErrorCode::InvalidCommittee: return "InvalidCommittee";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CountMismatch: return "CountMismatch";
  }
  return "Unknown";
}

void validate_election(std::span<const std::string> alternatives,
                       std::size_t committee_size,
                       std::span<const Ranking> profile) {
  if (alternatives.empty() || profile.empty()) {
    throw Error(ErrorCode::EmptyElection,
                "an election needs at least one voter and one alternative");
  }
  std::set<std::string_view> known;
  for (const auto& id : alternatives) {
    if (!known.insert(id).second) {
      throw Error(ErrorCode::DuplicateAlternative, "alternative '" + id +
                                                       "' listed twice");
    }
  }
  for (std::size_t v = 0; v < profile.size(); ++v) {
    const Ranking& r = profile[v];
    std::set<std::string_view> seen;
    for (const auto& id : r) {
      if (!known.contains(id)) {
        throw Error(ErrorCode::UnknownAlternative,
                    "voter " + std::to_string(v) + " ranks unknown '" + id +
                        "'");
      }
      if (!seen.insert(id).second) {
        throw Error(ErrorCode::DuplicateAlternativeInRanking,
                    "voter " + std::to_string(v) + " ranks '" + id +
                        "' twice");
      }
    }
    if (r.size() != alternatives.size()) {
      throw Error(ErrorCode::RankingSizeMismatch,
                  "voter " + std::to_string(v) + " ranks " +
                      std::to_string(r.size()) + " of " +
                      std::to_string(alternatives.size()) + " alternatives");
    }
  }
  if (committee_size < 1 || committee_size > alternatives.size()) {
    throw Error(ErrorCode::CommitteeSizeOutOfRange,
                "k=" + std::to_string(committee_size) + " with m=" +
                    std::to_string(alternatives.size()));
  }
}

Election::Election(std::vector<std::string> alternatives,
                   std::size_t committee_size, std::vector<Ranking> profile)
    : alternatives_(std::move(alternatives)),
      committee_size_(committee_size),
      profile_(std::move(profile)) {
  validate_election(alternatives_, committee_size_, profile_);
  const std::size_t m = alternatives_.size();
  for (AltIndex a = 0; a < m; ++a) index_.emplace(alternatives_[a], a);
  orders_.reserve(profile_.size());
  ranks_.assign(profile_.size() * m, 0);
  for (VoterIndex v = 0; v < profile_.size(); ++v) {
    std::vector<AltIndex> order;
    order.reserve(m);
    for (std::size_t pos = 0; pos < m; ++pos) {
      const AltIndex a = index_.find(profile_[v][pos])->second;
      order.push_back(a);
      ranks_[v * m + a] = pos;
    }
    orders_.push_back(std::move(order));
  }
}

AltIndex Election::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownAlternative,
                "'" + std::string(id) + "' is not an alternative");
  }
  return it->second;
}

bool Election::contains(std::string_view id) const {
  return index_.find(id) != index_.end();
}

Election Election::without(std::span<const std::string> removed,
                           std::size_t committee_size) const {
  std::set<std::string_view> drop(removed.begin(), removed.end());
  for (auto id : drop) index_of(id);
  std::vector<std::string> kept;
  for (const auto& id : alternatives_) {
    if (!drop.contains(id)) kept.push_back(id);
  }
  std::vector<Ranking> profile;
  profile.reserve(profile_.size());
  for (const auto& r : profile_) {
    Ranking restricted;
    restricted.reserve(kept.size());
    for (const auto& id : r) {
      if (!drop.contains(id)) restricted.push_back(id);
    }
    profile.push_back(std::move(restricted));
  }
  return Election(std::move(kept), committee_size, std::move(profile));
}

Election Election::with_committee_size(std::size_t committee_size) const {
  return Election(alternatives_, committee_size, profile_);
}

LineMetric::LineMetric(
    std::vector<Scalar> voter_positions,
    std::map<std::string, Scalar, std::less<>> alternative_positions)
    : voters_(std::move(voter_positions)),
      alternatives_(std::move(alternative_positions)) {}

const Scalar& LineMetric::voter(VoterIndex v) const {
  if (v >= voters_.size()) {
    throw Error(ErrorCode::MissingPosition,
                "no position for voter " + std::to_string(v));
  }
  return voters_[v];
}

const Scalar& LineMetric::alternative(std::string_view id) const {
  auto it = alternatives_.find(id);
  if (it == alternatives_.end()) {
    throw Error(ErrorCode::MissingPosition,
                "no position for alternative '" + std::string(id) + "'");
  }
  return it->second;
}

bool LineMetric::has_alternative(std::string_view id) const {
  return alternatives_.find(id) != alternatives_.end();
}

Scalar LineMetric::distance(VoterIndex v, std::string_view id) const {
  return abs(voter(v) - alternative(id));
}

bool LineMetric::alternatives_distinct() const {
  std::vector<Scalar> xs;
  for (const auto& [id, x] : alternatives_) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

LineMetric LineMetric::mirrored() const { return scaled(-1); }

LineMetric LineMetric::translated(const Scalar& offset) const {
  LineMetric r = *this;
  for (auto& x : r.voters_) x += offset;
  for (auto& [id, x] : r.alternatives_) x += offset;
  return r;
}

LineMetric LineMetric::scaled(const Scalar& factor) const {
  LineMetric r = *this;
  for (auto& x : r.voters_) x *= factor;
  for (auto& [id, x] : r.alternatives_) x *= factor;
  return r;
}

LineMetric LineMetric::with_voter_positions(
    std::vector<Scalar> positions) const {
  LineMetric r = *this;
  r.voters_ = std::move(positions);
  return r;
}

void LineMetric::require_covers(const Election& e) const {
  if (voters_.size() < e.voter_count()) {
    throw Error(ErrorCode::MissingPosition,
                "metric has " + std::to_string(voters_.size()) +
                    " voters, election has " +
                    std::to_string(e.voter_count()));
  }
  for (const auto& id : e.alternatives()) alternative(id);
}

Committee::Committee(std::vector<std::string> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorCode::InvalidCommittee, "duplicate committee member");
  }
}

bool Committee::contains(std::string_view id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

std::string Committee::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ", ";
    s += members_[i];
  }
  return s + "}";
}

void validate_committee(const Election& e, const Committee& s) {
  if (s.size() != e.committee_size()) {
    throw Error(ErrorCode::InvalidCommittee,
                "committee " + s.to_string() + " has size " +
                    std::to_string(s.size()) + ", expected " +
                    std::to_string(e.committee_size()));
  }
  for (const auto& id : s) {
    if (!e.contains(id)) {
      throw Error(ErrorCode::InvalidCommittee,
                  "'" + id + "' is not an alternative");
    }
  }
}

bool check_consistency(const Election& e, const LineMetric& d,
                       ConsistencyMode mode) {
  d.require_covers(e);
  const std::size_t m = e.alternative_count();
  std::vector<Scalar> dist(m);
  for (VoterIndex v = 0; v < e.voter_count(); ++v) {
    const auto& order = e.order(v);
    for (std::size_t p = 0; p < m; ++p) {
      dist[p] = abs(d.voter(v) - d.alternative(e.id(order[p])));
    }
    // Adjacent pairs suffice: the comparisons are transitive.
    for (std::size_t p = 0; p + 1 < m; ++p) {
      const int c = cmp(dist[p], dist[p + 1]);
      if (mode == ConsistencyMode::Strict ? c >= 0 : c > 0) return false;
    }
  }
  return true;
}

Election derive_profile(const LineMetric& d,
                        std::vector<std::string> alternatives,
                        std::size_t committee_size) {
  std::vector<Ranking> profile;
  profile.reserve(d.voter_count());
  for (VoterIndex v = 0; v < d.voter_count(); ++v) {
    std::vector<std::pair<Scalar, std::string>> keyed;
    keyed.reserve(alternatives.size());
    for (const auto& id : alternatives) keyed.emplace_back(d.distance(v, id), id);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t p = 0; p + 1 < keyed.size(); ++p) {
      if (keyed[p].first == keyed[p + 1].first) {
        throw Error(ErrorCode::MidpointTie,
                    "voter " + std::to_string(v) + " is equidistant from '" +
                        keyed[p].second + "' and '" + keyed[p + 1].second +
                        "'");
      }
    }
    Ranking r;
    r.reserve(keyed.size());
    for (auto& [dist, id] : keyed) r.push_back(std::move(id));
    profile.push_back(std::move(r));
  }
  return Election(std::move(alternatives), committee_size, std::move(profile));
}

std::vector<std::string> positional_order(const LineMetric& d,
                                          std::span<const std::string> ids) {
  std::vector<std::pair<Scalar, std::string>> keyed;
  for (const auto& id : ids) keyed.emplace_back(d.alternative(id), id);
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::string> out;
  for (auto& [x, id] : keyed) out.push_back(std::move(id));
  return out;
}

}  // namespace polarline
