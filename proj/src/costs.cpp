#include "polarline/costs.hpp"

#include <string>

namespace polarline {

std::string_view objective_name(Objective obj) {
  return obj == Objective::UtilitarianAdditive ? "utilitarian" : "egalitarian";
}

Objective parse_objective(std::string_view name) {
  if (name == "utilitarian" || name == "util") {
    return Objective::UtilitarianAdditive;
  }
  if (name == "egalitarian" || name == "egal") {
    return Objective::EgalitarianAdditive;
  }
  throw Error(ErrorCode::SyntaxError,
              "unknown objective '" + std::string(name) + "'");
}

Scalar voter_cost(const LineMetric& d, const Committee& s, VoterIndex i) {
  const Scalar& x = d.voter(i);
  Scalar total = 0;
  for (const auto& id : s) total += abs(x - d.alternative(id));
  return total;
}

Scalar social_cost(const LineMetric& d, const Committee& s, Objective obj) {
  Scalar result = 0;
  for (VoterIndex i = 0; i < d.voter_count(); ++i) {
    Scalar c = voter_cost(d, s, i);
    if (obj == Objective::UtilitarianAdditive) {
      result += c;
    } else if (c > result) {
      result = std::move(c);
    }
  }
  return result;
}

Scalar alternative_cost(const LineMetric& d, std::string_view a) {
  const Scalar& x = d.alternative(a);
  Scalar total = 0;
  for (const auto& v : d.voter_positions()) total += abs(v - x);
  return total;
}

}  // namespace polarline
