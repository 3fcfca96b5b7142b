#include "polarline/ordering.hpp"

#include <algorithm>

namespace polarline {
namespace {

std::vector<AltIndex> undominated_indices(const Election& e) {
  const std::size_t m = e.alternative_count();
  const std::size_t n = e.voter_count();
  const auto margins = margin_table(e);
  std::vector<AltIndex> alive;
  for (AltIndex b = 0; b < m; ++b) {
    bool dominated = false;
    for (AltIndex a = 0; a < m && !dominated; ++a) {
      dominated = a != b && margins[a * m + b] == n;
    }
    if (!dominated) alive.push_back(b);
  }
  return alive;
}

// Voter v's ranking restricted to `subset`, most preferred first.
std::vector<AltIndex> restricted_ranking(const Election& e, VoterIndex v,
                                         std::vector<AltIndex> subset) {
  std::sort(subset.begin(), subset.end(), [&](AltIndex x, AltIndex y) {
    return e.rank(v, x) < e.rank(v, y);
  });
  return subset;
}

std::vector<bool> voters_preferring(const Election& e, AltIndex a,
                                    AltIndex b) {
  std::vector<bool> s(e.voter_count());
  for (VoterIndex v = 0; v < e.voter_count(); ++v) s[v] = e.prefers(v, a, b);
  return s;
}

bool subset_of(const std::vector<bool>& x, const std::vector<bool>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] && !y[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> pareto_dominated(
    const Election& e, std::span<const std::string> within) {
  std::vector<AltIndex> dominators;
  for (const auto& id : within) dominators.push_back(e.index_of(id));
  const std::size_t n = e.voter_count();
  std::vector<std::string> out;
  for (AltIndex b = 0; b < e.alternative_count(); ++b) {
    for (AltIndex a : dominators) {
      if (a == b) continue;
      std::size_t count = 0;
      for (VoterIndex v = 0; v < n; ++v) count += e.prefers(v, a, b);
      if (count == n) {
        out.push_back(e.id(b));
        break;
      }
    }
  }
  return out;
}

std::vector<std::string> undominated(const Election& e) {
  std::vector<std::string> out;
  for (AltIndex a : undominated_indices(e)) out.push_back(e.id(a));
  return out;
}

AlternativeOrder::AlternativeOrder(std::vector<std::string> ids,
                                   bool canonical)
    : ids_(std::move(ids)), canonical_(canonical) {}

std::optional<std::size_t> AlternativeOrder::position(
    std::string_view id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

AlternativeOrder AlternativeOrder::reversed() const {
  return AlternativeOrder({ids_.rbegin(), ids_.rend()}, !canonical_);
}

bool single_peaked_on(const Election& e, std::span<const std::string> order) {
  std::vector<AltIndex> subset;
  std::vector<std::size_t> pos(e.alternative_count());
  for (std::size_t p = 0; p < order.size(); ++p) {
    const AltIndex a = e.index_of(order[p]);
    subset.push_back(a);
    pos[a] = p;
  }
  if (subset.size() <= 2) return true;
  for (VoterIndex v = 0; v < e.voter_count(); ++v) {
    const auto ranked = restricted_ranking(e, v, subset);
    std::size_t lo = pos[ranked[0]];
    std::size_t hi = lo;
    for (std::size_t q = 1; q < ranked.size(); ++q) {
      const std::size_t p = pos[ranked[q]];
      if (lo > 0 && p == lo - 1) {
        lo = p;
      } else if (p == hi + 1) {
        hi = p;
      } else {
        return false;
      }
    }
  }
  return true;
}

AlternativeOrder order_alternatives(const Election& e) {
  std::vector<AltIndex> alive = undominated_indices(e);
  std::sort(alive.begin(), alive.end(),
            [&](AltIndex x, AltIndex y) { return e.id(x) < e.id(y); });
  std::vector<std::string> ids;
  if (alive.size() <= 2) {
    for (AltIndex a : alive) ids.push_back(e.id(a));
  } else {
    const AltIndex a = alive[0];
    const AltIndex b = alive[1];
    const auto a_over_b = voters_preferring(e, a, b);
    std::vector<AltIndex> left;
    std::vector<AltIndex> right;
    std::vector<bool> in_right(e.alternative_count(), false);
    for (AltIndex c : alive) {
      if (c != a && subset_of(a_over_b, voters_preferring(e, a, c))) {
        right.push_back(c);
        in_right[c] = true;
      } else {
        left.push_back(c);
      }
    }
    // A voter whose favourite lies in one part sits beyond every member of
    // the other part, so its ranking sorts that other part by position.
    std::optional<VoterIndex> tops_left;
    std::optional<VoterIndex> tops_right;
    for (VoterIndex v = 0; v < e.voter_count(); ++v) {
      auto& slot = in_right[e.top(v)] ? tops_right : tops_left;
      if (!slot) slot = v;
    }
    if (!tops_left || !tops_right) {
      throw Error(ErrorCode::NotLineRealizable,
                  "no voter ranks a member of the " +
                      std::string(tops_left ? "right" : "left") +
                      " part first");
    }
    auto ordered_left = restricted_ranking(e, *tops_right, left);
    std::reverse(ordered_left.begin(), ordered_left.end());
    const auto ordered_right = restricted_ranking(e, *tops_left, right);
    for (AltIndex x : ordered_left) ids.push_back(e.id(x));
    for (AltIndex x : ordered_right) ids.push_back(e.id(x));
    if (!single_peaked_on(e, ids)) {
      throw Error(ErrorCode::NotLineRealizable,
                  "rankings are not single-peaked on any order of the "
                  "undominated alternatives");
    }
  }
  if (ids.size() >= 2 && ids.back() < ids.front()) {
    std::reverse(ids.begin(), ids.end());
  }
  return AlternativeOrder(std::move(ids), true);
}

std::size_t pairwise_margin(const Election& e, std::string_view a,
                            std::string_view b) {
  const AltIndex x = e.index_of(a);
  const AltIndex y = e.index_of(b);
  std::size_t count = 0;
  for (VoterIndex v = 0; v < e.voter_count(); ++v) count += e.prefers(v, x, y);
  return count;
}

std::vector<std::size_t> margin_table(const Election& e) {
  const std::size_t m = e.alternative_count();
  std::vector<std::size_t> t(m * m, 0);
  for (VoterIndex v = 0; v < e.voter_count(); ++v) {
    const auto& order = e.order(v);
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) ++t[order[p] * m + order[q]];
    }
  }
  return t;
}

MajorityOrder::MajorityOrder(std::vector<std::string> ids,
                             std::vector<std::string> index,
                             std::vector<std::size_t> margins)
    : ids_(std::move(ids)),
      index_(std::move(index)),
      margins_(std::move(margins)) {}

std::size_t MajorityOrder::slot(std::string_view id) const {
  auto it = std::find(index_.begin(), index_.end(), id);
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownAlternative,
                "'" + std::string(id) + "' is not an alternative");
  }
  return static_cast<std::size_t>(it - index_.begin());
}

std::size_t MajorityOrder::rank(std::string_view id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) {
    throw Error(ErrorCode::UnknownAlternative,
                "'" + std::string(id) + "' is not an alternative");
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t MajorityOrder::margin(std::string_view a,
                                  std::string_view b) const {
  return margins_[slot(a) * index_.size() + slot(b)];
}

MajorityOrder majority_order(const Election& e, const AlternativeOrder& order) {
  const std::size_t m = e.alternative_count();
  const std::size_t n = e.voter_count();
  const auto margins = margin_table(e);
  auto tied = [&](AltIndex x, AltIndex y) {
    return margins[x * m + y] == margins[y * m + x];
  };

  // On a line every tied pair splits the voters into a left and a right
  // half. Pick one tied pair, then decide which half it is by comparing with
  // the voters who prefer the first end of the order to the last.
  std::vector<bool> left_half;
  std::vector<AltIndex> by_id(m);
  for (AltIndex a = 0; a < m; ++a) by_id[a] = a;
  std::sort(by_id.begin(), by_id.end(),
            [&](AltIndex x, AltIndex y) { return e.id(x) < e.id(y); });
  for (std::size_t p = 0; p < m && left_half.empty(); ++p) {
    for (std::size_t q = p + 1; q < m; ++q) {
      if (!tied(by_id[p], by_id[q])) continue;
      left_half = voters_preferring(e, by_id[p], by_id[q]);
      break;
    }
  }
  if (!left_half.empty() && order.size() >= 2) {
    const auto first_side = voters_preferring(
        e, e.index_of(order.ids().front()), e.index_of(order.ids().back()));
    if (!subset_of(left_half, first_side) &&
        !subset_of(first_side, left_half)) {
      left_half.flip();
    }
  }

  std::vector<std::size_t> fallback(m);
  for (AltIndex a = 0; a < m; ++a) {
    auto pos = order.position(e.id(a));
    fallback[a] = pos ? *pos : m;
  }
  auto beats = [&](AltIndex x, AltIndex y) {
    const std::size_t xy = margins[x * m + y];
    const std::size_t yx = margins[y * m + x];
    if (xy != yx) return xy > yx;
    if (!left_half.empty()) {
      std::size_t for_x = 0;
      std::size_t for_y = 0;
      for (VoterIndex v = 0; v < n; ++v) {
        if (!left_half[v]) continue;
        (e.prefers(v, x, y) ? for_x : for_y) += 1;
      }
      if (for_x != for_y) return for_x > for_y;
    }
    if (fallback[x] != fallback[y]) return fallback[x] < fallback[y];
    return e.id(x) < e.id(y);
  };

  std::vector<AltIndex> path;
  for (AltIndex x = 0; x < m; ++x) {
    auto it = std::find_if(path.begin(), path.end(),
                           [&](AltIndex y) { return beats(x, y); });
    path.insert(it, x);
  }
  std::vector<std::string> ids;
  for (AltIndex a : path) ids.push_back(e.id(a));
  return MajorityOrder(std::move(ids), e.alternatives(), margins);
}

MajorityOrder majority_order(const Election& e) {
  return majority_order(e, order_alternatives(e));
}

}  // namespace polarline
