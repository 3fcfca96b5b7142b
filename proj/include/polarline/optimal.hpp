#pragma once

#include <cstddef>

#include "polarline/costs.hpp"
#include "polarline/model.hpp"

namespace polarline {

enum class OptMethod { Fast, BruteForce };

struct OptResult {
  Committee committee;
  Scalar cost;
  OptMethod method = OptMethod::Fast;
};

// The k alternatives with the smallest alternative_cost, ties to the smaller
// id. Utilitarian cost is additive, so this is an optimum.
OptResult optimal_utilitarian(const Election& e, const LineMetric& d);

// Exhaustive search over all size-k committees. Among optimal committees the
// lexicographically smallest (as sorted id lists) wins. Throws BudgetExceeded
// when m exceeds `max_alternatives`.
OptResult optimal_bruteforce(const Election& e, const LineMetric& d,
                             Objective obj, std::size_t max_alternatives = 20);

// optimal_utilitarian for the utilitarian objective, brute force otherwise.
OptResult optimal(const Election& e, const LineMetric& d, Objective obj);

}  // namespace polarline
