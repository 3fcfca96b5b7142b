#pragma once

#include <string_view>

#include "polarline/model.hpp"

namespace polarline {

enum class Objective { UtilitarianAdditive, EgalitarianAdditive };

std::string_view objective_name(Objective obj);  // "utilitarian" / "egalitarian"
Objective parse_objective(std::string_view name);  // throws SyntaxError

// Sum of the voter's distances to the committee members.
Scalar voter_cost(const LineMetric& d, const Committee& s, VoterIndex i);

// Sum (utilitarian) or maximum (egalitarian) of voter_cost over all voters
// of `d`.
Scalar social_cost(const LineMetric& d, const Committee& s, Objective obj);

// Total distance from every voter to `a`.
Scalar alternative_cost(const LineMetric& d, std::string_view a);

}  // namespace polarline
