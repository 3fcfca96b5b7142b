#include "polarline/distortion.hpp"

#include <algorithm>
#include <numeric>

#include "polarline/ordering.hpp"

namespace polarline {
namespace {

struct Split {
  std::vector<std::string> common;
  std::vector<std::string> only1;
  std::vector<std::string> only2;
};

Split split(const Committee& s1, const Committee& s2) {
  Split out;
  for (const auto& id : s1) {
    (s2.contains(id) ? out.common : out.only1).push_back(id);
  }
  for (const auto& id : s2) {
    if (!s1.contains(id)) out.only2.push_back(id);
  }
  return out;
}

// Every member of `lo` at or left of every member of `hi`, positions scaled
// by `sign`.
bool weakly_left(const LineMetric& d, const std::vector<std::string>& lo,
                 const std::vector<std::string>& hi, int sign) {
  for (const auto& x : lo) {
    for (const auto& y : hi) {
      if (sign * d.alternative(x) > sign * d.alternative(y)) return false;
    }
  }
  return true;
}

bool layout(const LineMetric& d, const Split& p, int sign) {
  return weakly_left(d, p.only2, p.common, sign) &&
         weakly_left(d, p.common, p.only1, sign) &&
         weakly_left(d, p.only2, p.only1, sign);
}

void sort_by_position(const LineMetric& d, std::vector<std::string>& ids,
                      int sign, bool descending) {
  std::sort(ids.begin(), ids.end(), [&](const auto& x, const auto& y) {
    const Scalar px = sign * d.alternative(x);
    const Scalar py = sign * d.alternative(y);
    if (px != py) return descending ? px > py : px < py;
    return x < y;
  });
}

}  // namespace

FixedDistortion distortion_fixed(const Election& e, const LineMetric& d,
                                 const Committee& s, Objective obj) {
  validate_committee(e, s);
  d.require_covers(e);
  FixedDistortion out;
  out.chosen = s;
  out.objective = obj;
  out.chosen_cost = social_cost(d, s, obj);
  out.optimum = optimal(e, d, obj);
  if (out.optimum.cost == 0) {
    out.ratio = out.chosen_cost == 0 ? ExtendedScalar(Scalar(1))
                                     : ExtendedScalar::infinity();
  } else {
    out.ratio = ExtendedScalar(Scalar(out.chosen_cost / out.optimum.cost));
  }
  return out;
}

ExtendedScalar ratio_bound(const Election& e, std::string_view a,
                           std::string_view b) {
  const std::size_t margin = pairwise_margin(e, a, b);
  if (margin == 0) return ExtendedScalar::infinity();
  return ExtendedScalar(
      fraction(2 * static_cast<unsigned long>(e.voter_count()),
               static_cast<unsigned long>(margin)) -
      1);
}

bool consecutive(const LineMetric& d, const Committee& s1,
                 const Committee& s2) {
  const Split p = split(s1, s2);
  return layout(d, p, 1) || layout(d, p, -1);
}

FocalPoint focal_point(const FocalQuery& q, const LineMetric& d) {
  const std::size_t k = q.s1.size();
  if (q.s2.size() != k || k == 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "committees must be non-empty and of equal size");
  }
  if (compare(Scalar(1), q.tau) >= 0) {
    throw Error(ErrorCode::PreconditionViolated, "tau must exceed 1");
  }
  Split p = split(q.s1, q.s2);
  FocalPoint f;
  int sign = 1;
  if (!layout(d, p, 1)) {
    if (!layout(d, p, -1)) {
      throw Error(ErrorCode::PreconditionViolated,
                  q.s1.to_string() + " and " + q.s2.to_string() +
                      " are not consecutive");
    }
    sign = -1;
    f.mirrored = true;
  }
  sort_by_position(d, p.common, sign, false);
  sort_by_position(d, p.only2, sign, false);
  sort_by_position(d, p.only1, sign, true);

  const long kk = static_cast<long>(k);
  const long t = static_cast<long>(p.common.size());
  // t = ceil(k/2) + r. Moving a voter right by delta inside the shared block
  // changes SC(S2) by (k - 2t + 2j) delta and SC(S1) by (2j - k) delta, which
  // fixes tau-hat and the shared index below; both use this r for odd k too.
  f.r = t - (kk + 1) / 2;
  const QuadraticSurd& tau = q.tau;
  f.j_star = ceil_of((tau + Scalar(-1)) * reciprocal(tau) * fraction(kk, 2));
  if (f.r < 0) {
    f.from_right = true;
  } else {
    const QuadraticSurd half_gap = reciprocal((tau + Scalar(-1)) * Scalar(2));
    if (kk % 2 == 0) {
      f.i_star = ceil_of(half_gap * Scalar(kk - 2 * f.r));
      f.tau_hat = f.r == 0 ? ExtendedScalar::infinity()
                           : ExtendedScalar(fraction(kk, 2 * f.r));
    } else {
      f.i_star = ceil_of((-tau + Scalar(kk - 2 * f.r)) * half_gap);
      f.tau_hat = ExtendedScalar(fraction(kk, 2 * f.r + 1));
    }
    f.from_right = f.tau_hat.is_infinite() ||
                   compare(f.tau_hat.value(), tau) >= 0;
  }
  if (f.from_right) {
    if (f.j_star < 1 || f.j_star > static_cast<long>(p.only1.size())) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "j*=" + f.j_star.get_str() + " but only " +
                      std::to_string(p.only1.size()) +
                      " members are outside the intersection");
    }
    f.at = p.only1[f.j_star.get_ui() - 1];
  } else {
    const Integer index = Integer((kk + 1) / 2) + f.i_star;
    if (index < 1 || index > t) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "index " + index.get_str() + " outside the " +
                      std::to_string(t) + " shared members");
    }
    f.at = p.common[index.get_ui() - 1];
  }
  f.position = d.alternative(f.at);
  f.common = std::move(p.common);
  f.left = std::move(p.only2);
  f.right = std::move(p.only1);
  return f;
}

LineMetric move_voters(const Election& e, const LineMetric& d,
                       const Committee& s1, const Committee& s2,
                       const QuadraticSurd& tau,
                       std::span<const MoveConstraint> constraints) {
  d.require_covers(e);
  const Scalar sc1 = social_cost(d, s1, Objective::UtilitarianAdditive);
  const Scalar sc2 = social_cost(d, s2, Objective::UtilitarianAdditive);
  const bool above = sc1 == 0 ? sc2 > 0 : compare(Scalar(sc2 / sc1), tau) > 0;
  if (!above) {
    throw Error(ErrorCode::PreconditionViolated,
                "SC(S2)/SC(S1) does not exceed tau");
  }
  const FocalPoint f = focal_point({s1, s2, tau}, d);
  const int sign = f.mirrored ? -1 : 1;
  const Scalar target = sign * f.position;

  const std::size_t n = d.voter_count();
  std::vector<Scalar> pos(n);
  for (VoterIndex v = 0; v < n; ++v) pos[v] = sign * d.voter(v);
  std::vector<VoterIndex> by_pos(n);
  std::iota(by_pos.begin(), by_pos.end(), VoterIndex{0});
  std::stable_sort(by_pos.begin(), by_pos.end(),
                   [&](VoterIndex x, VoterIndex y) { return pos[x] < pos[y]; });

  std::vector<Scalar> moved(n, target);
  std::size_t placed = 0;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const MoveConstraint& c = constraints[i];
    const bool ordered =
        i == 0 || (constraints[i - 1].x <= c.x &&
                   constraints[i - 1].count <= c.count);
    if (!ordered || c.x > target || c.count > n) {
      throw Error(ErrorCode::PreconditionViolated,
                  "constraint " + std::to_string(i) + " is out of order or "
                  "beyond the focal point");
    }
    const auto reach = static_cast<std::size_t>(
        std::count_if(pos.begin(), pos.end(),
                      [&](const Scalar& x) { return x <= c.x; }));
    if (reach < c.count) {
      throw Error(ErrorCode::PreconditionViolated,
                  "only " + std::to_string(reach) + " voters at or left of " +
                      to_exact_string(sign * c.x) + ", constraint needs " +
                      std::to_string(c.count));
    }
    for (; placed < c.count; ++placed) moved[by_pos[placed]] = c.x;
  }
  for (auto& x : moved) x *= sign;
  return d.with_voter_positions(std::move(moved));
}

}  // namespace polarline
