#include "polarline/rules.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace polarline {
namespace {

constexpr std::array<std::pair<RuleId, std::string_view>, 6> kRuleNames{{
    {RuleId::PolarK2, "polar-k2"},
    {RuleId::PolarK3, "polar-k3"},
    {RuleId::PolarGeneral, "polar-general"},
    {RuleId::KExtremes, "k-extremes"},
    {RuleId::Interior, "interior"},
    {RuleId::TopOfMajority, "top-of-majority"},
}};

void require_size(const Election& e, std::size_t k) {
  if (e.committee_size() != k) {
    throw Error(ErrorCode::CommitteeSizeMismatch,
                "rule elects " + std::to_string(k) + " alternatives, election"
                " asks for " + std::to_string(e.committee_size()));
  }
}

// n / (1 + sqrt 2) = n (sqrt 2 - 1).
QuadraticSurd silver_share(std::size_t n) {
  const Scalar s(static_cast<unsigned long>(n));
  return {-s, s, 2};
}

Scalar count(std::size_t c) { return Scalar(static_cast<unsigned long>(c)); }

Phase k2_phase(std::size_t reps) {
  return {polar_k2, 2, one_plus_sqrt2(), reps};
}

Phase k3_phase(std::size_t reps) {
  return {polar_k3, 3, QuadraticSurd::of(fraction(7, 3)), reps};
}

}  // namespace

std::string_view rule_name(RuleId id) {
  for (const auto& [rule, name] : kRuleNames) {
    if (rule == id) return name;
  }
  return "unknown";
}

RuleId parse_rule(std::string_view name) {
  for (const auto& [rule, spelled] : kRuleNames) {
    if (spelled == name) return rule;
  }
  throw Error(ErrorCode::SyntaxError,
              "unknown rule '" + std::string(name) + "'");
}

bool at_most_silver_share(std::size_t c, std::size_t n) {
  return compare(count(c), silver_share(n)) <= 0;
}

bool at_least_silver_share(std::size_t c, std::size_t n) {
  return compare(count(c), silver_share(n)) >= 0;
}

bool at_least_two_fifths(std::size_t c, std::size_t n) { return 5 * c >= 2 * n; }

std::optional<std::string> flank(const Election& e, std::string_view pivot,
                                 std::string_view anchor) {
  const AltIndex p = e.index_of(pivot);
  const AltIndex a = e.index_of(anchor);
  if (e.alternative_count() < 2) return std::nullopt;
  const std::string removed[] = {e.id(p)};
  const AlternativeOrder order = order_alternatives(e.without(removed, 1));
  const auto at = order.position(anchor);
  if (!at) {
    throw Error(ErrorCode::NotLineRealizable,
                "'" + std::string(anchor) + "' is dominated once '" +
                    std::string(pivot) + "' is removed");
  }
  // x lies on the pivot's side of the anchor exactly when everyone who
  // prefers x to the anchor also prefers the pivot to it.
  auto faces_pivot = [&](AltIndex x) {
    for (VoterIndex v = 0; v < e.voter_count(); ++v) {
      if (e.prefers(v, x, a) && !e.prefers(v, p, a)) return false;
    }
    return true;
  };
  std::optional<std::string> found;
  for (std::size_t q : {*at - 1, *at + 1}) {
    if (q >= order.size()) continue;  // also catches *at - 1 wrapping
    if (!faces_pivot(e.index_of(order[q]))) continue;
    if (found) {
      throw Error(ErrorCode::NotLineRealizable,
                  "both neighbours of '" + std::string(anchor) +
                      "' face '" + std::string(pivot) + "'");
    }
    found = order[q];
  }
  return found;
}

Committee top_of_majority(const Election& e) {
  const MajorityOrder mo = majority_order(e);
  return Committee({mo.ids().begin(),
                    mo.ids().begin() +
                        static_cast<std::ptrdiff_t>(e.committee_size())});
}

Committee polar_k2(const Election& e) {
  require_size(e, 2);
  const std::size_t n = e.voter_count();
  const MajorityOrder mo = majority_order(e);
  const std::string& a = mo[0];
  const std::string& b = mo[1];
  const auto c = flank(e, a, b);
  if (!c) return Committee({a, b});
  if (at_most_silver_share(pairwise_margin(e, *c, b), n)) {
    return Committee({a, b});
  }
  if (at_least_silver_share(pairwise_margin(e, b, a), n)) {
    return Committee({a, b});
  }
  return Committee({a, *c});
}

Committee polar_k3(const Election& e) {
  require_size(e, 3);
  const MajorityOrder mo = majority_order(e);
  const std::string& a = mo[0];
  const std::string& b1 = mo[1];
  const auto c = flank(e, a, b1);
  const auto b2 = flank(e, b1, a);
  if (!c && !b2) return Committee({a, b1, mo[2]});
  if (!c) return Committee({a, b1, *b2});
  if (!b2) return Committee({a, b1, *c});
  if (at_least_two_fifths(pairwise_margin(e, *c, *b2), e.voter_count())) {
    return Committee({a, b1, *c});
  }
  return Committee({a, b1, *b2});
}

std::vector<Committee> compose_runs(const Election& e, const Phase& first,
                                    const Phase& second) {
  const std::size_t k = first.reps * first.size + second.reps * second.size;
  if (k != e.committee_size()) {
    throw Error(ErrorCode::CommitteeSizeMismatch,
                "phases elect " + std::to_string(k) + " alternatives, election"
                " asks for " + std::to_string(e.committee_size()));
  }
  if (first.reps > 0 && second.reps > 0 &&
      compare(second.bound, first.bound) > 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "the first phase must carry the larger bound");
  }
  std::vector<Committee> runs;
  std::vector<std::string> elected;
  for (const Phase* phase : {&first, &second}) {
    for (std::size_t r = 0; r < phase->reps; ++r) {
      const std::size_t left = e.alternative_count() - elected.size();
      if (left < phase->size) {
        throw Error(ErrorCode::InsufficientAlternatives,
                    "only " + std::to_string(left) + " alternatives left for "
                    "a run electing " + std::to_string(phase->size));
      }
      Committee s = phase->rule(e.without(elected, phase->size));
      elected.insert(elected.end(), s.begin(), s.end());
      runs.push_back(std::move(s));
    }
  }
  return runs;
}

Committee compose(const Election& e, const Phase& first, const Phase& second) {
  std::vector<std::string> all;
  for (const Committee& s : compose_runs(e, first, second)) {
    all.insert(all.end(), s.begin(), s.end());
  }
  return Committee(std::move(all));
}

QuadraticSurd polar_general_bound(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::ParameterOutOfRange, "k must be positive");
  if (k == 1) return QuadraticSurd::of(3);
  if (k == 2) return one_plus_sqrt2();
  const Scalar base = fraction(7, 3);
  const Scalar kk(static_cast<unsigned long>(k));
  // 7/3 + c (sqrt 2 - 4/3) / k with c = 0, 4, 2 for k = 0, 1, 2 mod 3.
  const Scalar c = k % 3 == 0 ? 0 : (k % 3 == 1 ? 4 : 2);
  return {base - c * fraction(4, 3) / kk, c / kk, 2};
}

Committee polar_general(const Election& e) {
  const std::size_t k = e.committee_size();
  if (k == 1) return top_of_majority(e);
  if (k == 2) return polar_k2(e);
  if (k == 3) return polar_k3(e);
  const std::size_t q = k / 3;
  switch (k % 3) {
    case 0: return compose(e, k2_phase(0), k3_phase(q));
    case 1: return compose(e, k2_phase(2), k3_phase(q - 1));
    default: return compose(e, k2_phase(1), k3_phase(q));
  }
}

Committee k_extremes(const AlternativeOrder& order, std::size_t k) {
  if (order.size() < k) {
    throw Error(ErrorCode::InsufficientAlternatives,
                "order has " + std::to_string(order.size()) +
                    " alternatives, k=" + std::to_string(k));
  }
  std::vector<std::string> s;
  for (std::size_t i = 0; i < k / 2; ++i) s.push_back(order[i]);
  for (std::size_t i = 0; i < k - k / 2; ++i) {
    s.push_back(order[order.size() - 1 - i]);
  }
  return Committee(std::move(s));
}

Committee interior_committee(const AlternativeOrder& order,
                             const MajorityOrder& majority, std::size_t k) {
  const std::size_t m = order.size();
  if (k + 1 >= m) {
    throw Error(ErrorCode::CommitteeSizeTooLarge,
                "k=" + std::to_string(k) + " leaves no interior committee "
                "among " + std::to_string(m) + " ordered alternatives");
  }
  std::size_t best_pos = 1;
  for (std::size_t i = 2; i + 1 < m; ++i) {
    if (majority.rank(order[i]) < majority.rank(order[best_pos])) best_pos = i;
  }
  std::size_t chosen = 0;
  bool chosen_covers = false;
  std::size_t chosen_sum = std::numeric_limits<std::size_t>::max();
  for (std::size_t start = 1; start + k <= m - 1; ++start) {
    const bool covers = start <= best_pos && best_pos < start + k;
    std::size_t sum = 0;
    for (std::size_t i = start; i < start + k; ++i) sum += majority.rank(order[i]);
    if (chosen == 0 || (covers && !chosen_covers) ||
        (covers == chosen_covers && sum < chosen_sum)) {
      chosen = start;
      chosen_covers = covers;
      chosen_sum = sum;
    }
  }
  return Committee({order.ids().begin() + static_cast<std::ptrdiff_t>(chosen),
                    order.ids().begin() +
                        static_cast<std::ptrdiff_t>(chosen + k)});
}

Committee run_rule(RuleId id, const Election& e) {
  switch (id) {
    case RuleId::PolarK2: return polar_k2(e);
    case RuleId::PolarK3: return polar_k3(e);
    case RuleId::PolarGeneral: return polar_general(e);
    case RuleId::KExtremes: return k_extremes(order_alternatives(e),
                                              e.committee_size());
    case RuleId::Interior: {
      const AlternativeOrder order = order_alternatives(e);
      return interior_committee(order, majority_order(e, order),
                                e.committee_size());
    }
    case RuleId::TopOfMajority: return top_of_majority(e);
  }
  throw Error(ErrorCode::SyntaxError, "unknown rule");
}

std::optional<QuadraticSurd> known_bound(RuleId id, std::size_t k,
                                         Objective obj) {
  if (obj == Objective::EgalitarianAdditive) {
    if (id == RuleId::Interior) return QuadraticSurd::of(2);
    return std::nullopt;
  }
  switch (id) {
    case RuleId::PolarK2:
      if (k == 2) return one_plus_sqrt2();
      break;
    case RuleId::PolarK3:
      if (k == 3) return QuadraticSurd::of(fraction(7, 3));
      break;
    case RuleId::PolarGeneral: return polar_general_bound(k);
    case RuleId::TopOfMajority:
      if (k == 1) return QuadraticSurd::of(3);
      break;
    default: break;
  }
  return std::nullopt;
}

}  // namespace polarline
