#include <doctest.h>

#include "../support/oracle.hpp"
#include "polarline/costs.hpp"
#include "polarline/generators.hpp"
#include "polarline/optimal.hpp"

using namespace polarline;

namespace {

LineMetric three_and_two() {
  std::vector<Scalar> voters(3, oracle::rational(1, 10));
  voters.insert(voters.end(), 2, oracle::rational(-9, 10));
  return LineMetric(voters, {{"a", 0}, {"b", 1}, {"c", -1}});
}

}  // namespace

TEST_CASE("voter and social cost") {
  const LineMetric d({0, 1}, {{"a", 0}, {"b", 2}});
  CHECK(voter_cost(LineMetric({0}, {{"a", 0}}), Committee({"a"}), 0) == 0);
  CHECK(voter_cost(d, Committee({"a", "b"}), 0) == 2);
  CHECK(voter_cost(d, Committee({"a", "b"}), 1) == 2);
  CHECK(social_cost(d, Committee({"a", "b"}), Objective::UtilitarianAdditive) ==
        4);
  CHECK(social_cost(d, Committee({"a", "b"}), Objective::EgalitarianAdditive) ==
        2);
  CHECK_THROWS_AS(voter_cost(d, Committee({"z"}), 0), Error);
}

TEST_CASE("k-extremes instance costs") {
  const auto g = gen_lb_k_extremes(2);
  CHECK(social_cost(g.metric, Committee({"a", "c"}),
                    Objective::EgalitarianAdditive) == 2);
  CHECK(social_cost(g.metric, Committee({"b", "c"}),
                    Objective::EgalitarianAdditive) == 1);
}

TEST_CASE("alternative cost") {
  const LineMetric d = three_and_two();
  CHECK(alternative_cost(d, "a") == oracle::rational(21, 10));
  CHECK(alternative_cost(d, "b") == oracle::rational(13, 2));
  CHECK(alternative_cost(LineMetric({5}, {{"a", 5}}), "a") == 0);
}

TEST_CASE("objective names") {
  CHECK(objective_name(Objective::UtilitarianAdditive) == "utilitarian");
  CHECK(parse_objective("egalitarian") == Objective::EgalitarianAdditive);
  CHECK_THROWS_AS(parse_objective("median"), Error);
}

TEST_CASE("cost properties on random instances") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto g = gen_random(1 + seed % 11, 2 + seed % 6, 2, seed);
    const LineMetric& d = g.metric;
    const auto& ids = g.election.alternatives();
    const Committee s({ids[0], ids[1]});
    // Additivity.
    CHECK(social_cost(d, s, Objective::UtilitarianAdditive) ==
          alternative_cost(d, ids[0]) + alternative_cost(d, ids[1]));
    CHECK(social_cost(d, s, Objective::UtilitarianAdditive) ==
          oracle::cost(d, s.members(), false));
    CHECK(social_cost(d, s, Objective::EgalitarianAdditive) ==
          oracle::cost(d, s.members(), true));
    // Translation invariance.
    const LineMetric t = d.translated(oracle::rational(17, 3));
    for (auto obj : {Objective::UtilitarianAdditive,
                     Objective::EgalitarianAdditive}) {
      CHECK(social_cost(t, s, obj) == social_cost(d, s, obj));
    }
    // Any committee costs the extreme voters at least half their total.
    std::vector<Scalar> xs = d.voter_positions();
    std::sort(xs.begin(), xs.end());
    const Scalar lo = oracle::cost_at(xs.front(), d, s.members());
    const Scalar hi = oracle::cost_at(xs.back(), d, s.members());
    CHECK(2 * social_cost(d, s, Objective::EgalitarianAdditive) >= lo + hi);
  }
}

TEST_CASE("closer to the median means cheaper") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto g = gen_random(1 + 2 * (seed % 8), 2 + seed % 6, 1, seed);
    std::vector<Scalar> xs = g.metric.voter_positions();
    std::sort(xs.begin(), xs.end());
    const Scalar median = xs[xs.size() / 2];  // n is odd here
    const auto& alts = g.metric.alternative_positions();
    for (const auto& [a, xa] : alts) {
      for (const auto& [b, xb] : alts) {
        const bool same_side =
            (xa >= median && xb >= median) || (xa <= median && xb <= median);
        if (same_side && abs(xa - median) < abs(xb - median)) {
          CHECK(alternative_cost(g.metric, a) <= alternative_cost(g.metric, b));
        }
      }
    }
  }
}

TEST_CASE("optimal committees") {
  const LineMetric d = three_and_two();
  const Election e = derive_profile(d, {"a", "b", "c"}, 2);
  const OptResult fast = optimal_utilitarian(e, d);
  CHECK(fast.committee == Committee({"a", "c"}));
  CHECK(fast.cost == oracle::rational(28, 5));
  CHECK(fast.cost == oracle::optimum(d, e.alternatives(), 2, false));
  const OptResult brute = optimal_bruteforce(e, d, Objective::UtilitarianAdditive);
  CHECK(brute.committee == fast.committee);
  CHECK(brute.cost == fast.cost);
  CHECK(brute.method == OptMethod::BruteForce);

  const OptResult all = optimal_utilitarian(e.with_committee_size(3), d);
  CHECK(all.committee == Committee({"a", "b", "c"}));
  for (auto obj : {Objective::UtilitarianAdditive,
                   Objective::EgalitarianAdditive}) {
    CHECK(optimal_bruteforce(e.with_committee_size(3), d, obj).committee ==
          Committee({"a", "b", "c"}));
  }

  const auto g = gen_lb_k_extremes(2);
  const OptResult egal =
      optimal_bruteforce(g.election, g.metric, Objective::EgalitarianAdditive);
  CHECK(egal.committee == Committee({"b", "c"}));
  CHECK(egal.cost == 1);

  // Co-located voters pick the nearest alternatives.
  const LineMetric point({2, 2, 2}, {{"a", 0}, {"b", 1}, {"c", 5}, {"d", 3}});
  const Election pe = derive_profile(LineMetric({oracle::rational(9, 4)},
                                                point.alternative_positions()),
                                     {"a", "b", "c", "d"}, 2);
  CHECK(optimal_utilitarian(pe, point).committee == Committee({"b", "d"}));

  CHECK_THROWS_AS(optimal_bruteforce(e, d, Objective::UtilitarianAdditive, 2),
                  Error);
}

TEST_CASE("fast and brute-force optima agree") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const std::size_t m = 1 + seed % 10;
    const auto g = gen_random(1 + seed % 9, m, 1 + seed % m, seed);
    const OptResult fast = optimal_utilitarian(g.election, g.metric);
    const OptResult brute =
        optimal_bruteforce(g.election, g.metric, Objective::UtilitarianAdditive);
    CHECK(fast.cost == brute.cost);
    CHECK(fast.committee == brute.committee);
    CHECK(brute.cost == oracle::optimum(g.metric, g.election.alternatives(),
                                        g.election.committee_size(), false));
    const OptResult egal =
        optimal_bruteforce(g.election, g.metric, Objective::EgalitarianAdditive);
    CHECK(egal.cost == oracle::optimum(g.metric, g.election.alternatives(),
                                       g.election.committee_size(), true));
  }
}

TEST_CASE("utilitarian optimum contains a neighbour of the median") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const std::size_t m = 2 + seed % 7;
    const auto g = gen_random(1 + 2 * (seed % 7), m, 1 + seed % m, seed);
    std::vector<Scalar> xs = g.metric.voter_positions();
    std::sort(xs.begin(), xs.end());
    const Scalar median = xs[xs.size() / 2];
    std::optional<std::string> left, right;
    for (const auto& [id, x] : g.metric.alternative_positions()) {
      if (x <= median &&
          (!left || x > g.metric.alternative(*left))) {
        left = id;
      }
      if (x >= median &&
          (!right || x < g.metric.alternative(*right))) {
        right = id;
      }
    }
    const Committee opt = optimal_utilitarian(g.election, g.metric).committee;
    CHECK(((left && opt.contains(*left)) || (right && opt.contains(*right))));
  }
}
