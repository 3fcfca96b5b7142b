#pragma once

// Ordinal committee rules. Every rule reads only the rankings.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarline/costs.hpp"
#include "polarline/model.hpp"
#include "polarline/ordering.hpp"
#include "polarline/scalar.hpp"

namespace polarline {

enum class RuleId {
  PolarK2,
  PolarK3,
  PolarGeneral,
  KExtremes,
  Interior,
  TopOfMajority,
};

// CLI spellings: polar-k2, polar-k3, polar-general, k-extremes, interior,
// top-of-majority.
std::string_view rule_name(RuleId id);
RuleId parse_rule(std::string_view name);  // throws SyntaxError

// Threshold tests of the polar comparison rules, decided exactly.
bool at_most_silver_share(std::size_t count, std::size_t n);   // count <= n/(1+sqrt 2)
bool at_least_silver_share(std::size_t count, std::size_t n);  // count >= n/(1+sqrt 2)
bool at_least_two_fifths(std::size_t count, std::size_t n);    // count >= 2n/5

// The undominated neighbour of `anchor`, on the side facing `pivot`, in the
// order of A minus `pivot` after removing what that set dominates. Returns
// nullopt when there is none.
std::optional<std::string> flank(const Election& e, std::string_view pivot,
                                 std::string_view anchor);

// The first k entries of the majority order.
Committee top_of_majority(const Election& e);

// Require k = 2 and k = 3 respectively (CommitteeSizeMismatch).
Committee polar_k2(const Election& e);
Committee polar_k3(const Election& e);

using Rule = std::function<Committee(const Election&)>;

struct Phase {
  Rule rule;
  std::size_t size = 0;   // committee size the rule elects per run
  QuadraticSurd bound;    // its distortion guarantee
  std::size_t reps = 0;
};

// Runs `first` reps times and then `second` reps times, each run on the
// election without the alternatives elected so far. Returns the committee of
// each run in order.
std::vector<Committee> compose_runs(const Election& e, const Phase& first,
                                    const Phase& second);
Committee compose(const Election& e, const Phase& first, const Phase& second);

// Distortion guarantee of polar_general for committee size k.
QuadraticSurd polar_general_bound(std::size_t k);

Committee polar_general(const Election& e);

// The first floor(k/2) and last ceil(k/2) members of `order`.
Committee k_extremes(const AlternativeOrder& order, std::size_t k);

// A contiguous window of k alternatives that avoids both ends of `order`.
// Throws CommitteeSizeTooLarge when k >= |order| - 1.
Committee interior_committee(const AlternativeOrder& order,
                             const MajorityOrder& majority, std::size_t k);

Committee run_rule(RuleId id, const Election& e);

// The proven distortion guarantee of a rule for committee size k under the
// given objective, when there is one.
std::optional<QuadraticSurd> known_bound(RuleId id, std::size_t k,
                                         Objective obj);

}  // namespace polarline
