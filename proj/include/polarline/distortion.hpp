#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polarline/costs.hpp"
#include "polarline/model.hpp"
#include "polarline/optimal.hpp"
#include "polarline/scalar.hpp"

namespace polarline {

struct FixedDistortion {
  ExtendedScalar ratio;  // infinite when only the optimum costs nothing
  Committee chosen;
  Scalar chosen_cost;
  OptResult optimum;
  Objective objective = Objective::UtilitarianAdditive;
};

FixedDistortion distortion_fixed(const Election& e, const LineMetric& d,
                                 const Committee& s, Objective obj);

// 2n/|V_{a>b}| - 1, or infinity when nobody prefers a to b.
ExtendedScalar ratio_bound(const Election& e, std::string_view a,
                           std::string_view b);

// True when the members of s1 and s2 outside their intersection lie on
// opposite sides of it (either way round).
bool consecutive(const LineMetric& d, const Committee& s1,
                 const Committee& s2);

struct FocalQuery {
  Committee s1;
  Committee s2;
  QuadraticSurd tau;
};

struct FocalPoint {
  Scalar position;
  // c's ascending, a's (s2 only) ascending, b's (s1 only) descending, all in
  // the frame where the a's lie left of the c's.
  std::vector<std::string> common;
  std::vector<std::string> left;
  std::vector<std::string> right;
  bool mirrored = false;  // the a's were right of the c's in d
  long r = 0;  // |C| - ceil(k/2)
  Integer j_star;
  Integer i_star;
  ExtendedScalar tau_hat;
  bool from_right = true;  // answer is x_{b_{j*}} rather than a c
  std::string at;          // id of the alternative at the answer
};

// Throws PreconditionViolated (sizes differ, tau <= 1, not consecutive) and
// IndexOutOfRange (formula index outside the available alternatives).
FocalPoint focal_point(const FocalQuery& q, const LineMetric& d);

struct MoveConstraint {
  Scalar x;
  std::size_t count = 0;  // cumulative r_i
};

// Places count_i - count_{i-1} voters at x_i, taking the leftmost voters not
// yet placed, and every other voter at the focal point. For a mirrored pair
// the constraints describe the mirror image. Throws PreconditionViolated
// unless SC(s2)/SC(s1) > tau and the constraints are satisfiable.
LineMetric move_voters(const Election& e, const LineMetric& d,
                       const Committee& s1, const Committee& s2,
                       const QuadraticSurd& tau,
                       std::span<const MoveConstraint> constraints);

enum class AdversaryMode { Exact, Sample };

struct AdversaryOptions {
  AdversaryMode mode = AdversaryMode::Exact;
  // Exact: maximum number of linear programs. Sample: number of candidate
  // metrics evaluated.
  std::size_t budget = 200000;
  std::uint64_t seed = 1;
  std::size_t max_voters = 5;
  std::size_t max_alternatives = 6;
  unsigned threads = 1;
};

struct AdversarialResult {
  ExtendedScalar ratio;
  LineMetric witness;
  AdversaryMode mode = AdversaryMode::Exact;
  std::size_t patterns = 0;  // feasible voter placements examined
  std::size_t programs = 0;  // linear programs solved (Exact)
};

// Supremum of dist(S) over consistent line metrics (Exact), or the best
// ratio a seeded random search finds (Sample). Exact mode needs the
// utilitarian objective and no dominated alternatives.
AdversarialResult adversarial_distortion(const Election& e, const Committee& s,
                                         Objective obj,
                                         const AdversaryOptions& options);

}  // namespace polarline
