#pragma once

// Instance families: the two-metric lower-bound constructions and seeded
// random line instances.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>

#include "polarline/model.hpp"
#include "polarline/scalar.hpp"

namespace polarline {

struct TwoMetricInstance {
  Election election;
  LineMetric d1;
  LineMetric d2;
};

struct GeneratedInstance {
  Election election;
  LineMetric metric;
};

enum class Family { K2Tight, SmallK, LargeK, KExtremesEgal, Random };

std::string_view family_name(Family f);  // k2, small-k, large-k, k-extremes, random
Family parse_family(std::string_view name);  // throws SyntaxError

// Continued-fraction convergent p/q of x >= 1; depth 0 is floor(x)/1.
// For sqrt 2: 1/1, 3/2, 7/5, ..., depth 6 = 239/169, depth 8 = 1393/985.
std::pair<Integer, Integer> convergent(const QuadraticSurd& x,
                                       std::size_t depth);

// Four alternatives: a, b at +1 and a', b' at -1. The n1 voters of X rank
// a' b' a b, the n2 voters of Y rank a b a' b'. d1 puts X at -1 and Y at 0;
// d2 puts X at 0 and Y at +1. Throws ParameterOutOfRange unless n1, n2 >= 1.
TwoMetricInstance gen_lb_k2(std::size_t n1, std::size_t n2);

// floor(m/2) alternatives at -1 (ids a...), the rest at +1 (ids b...). n1
// voters prefer the -1 block, n2 the +1 block; within a block everyone uses
// id order. d1: first group at -1, second at 0; d2: first at 0, second at +1.
// Requires k <= floor(m/2) and n1, n2 >= 1.
TwoMetricInstance gen_lb_small_k(std::size_t k, std::size_t m, std::size_t n1,
                                 std::size_t n2);

// Group sizes from n: n1 = ceil(n/(1+alpha)), n2 = n - n1, with alpha = 1
// for odd k (n must be even) and sqrt(k/(k+2)) for even k.
std::pair<std::size_t, std::size_t> small_k_counts(std::size_t k,
                                                   std::size_t n);
TwoMetricInstance gen_lb_small_k(std::size_t k, std::size_t m, std::size_t n);

// Group sizes n1 : n2 approximating 1 : alpha with the given convergent of
// 1/alpha. Requires even k.
std::pair<std::size_t, std::size_t> small_k_convergent_counts(
    std::size_t k, std::size_t depth);

// m/2 alternatives at each of -1 and +1 and n/2 voters per block, placed as
// in gen_lb_small_k. Requires m and n even and m/2 <= k <= m.
TwoMetricInstance gen_lb_large_k(std::size_t k, std::size_t m, std::size_t n);

// ceil(k/2) alternatives at each of -1, 0 and +1, one voter at 0 and one at
// +1. For k = 2 the ids are a, b, c; otherwise a1.., b1.., c1...
GeneratedInstance gen_lb_k_extremes(std::size_t k);

// Alternatives at distinct integers, voters at odd multiples of 1/4 (so no
// voter is ever equidistant from two alternatives), profile derived.
// Requires 1 <= k <= m and n >= 1.
GeneratedInstance gen_random(std::size_t n, std::size_t m, std::size_t k,
                             std::uint64_t seed);

}  // namespace polarline
