#include "polarline/optimal.hpp"

#include <algorithm>
#include <optional>

namespace polarline {

OptResult optimal_utilitarian(const Election& e, const LineMetric& d) {
  d.require_covers(e);
  std::vector<std::pair<Scalar, std::string>> costs;
  for (const auto& id : e.alternatives()) {
    costs.emplace_back(alternative_cost(d, id), id);
  }
  std::sort(costs.begin(), costs.end());
  std::vector<std::string> members;
  Scalar total = 0;
  for (std::size_t i = 0; i < e.committee_size(); ++i) {
    total += costs[i].first;
    members.push_back(costs[i].second);
  }
  return {Committee(std::move(members)), total, OptMethod::Fast};
}

OptResult optimal_bruteforce(const Election& e, const LineMetric& d,
                             Objective obj, std::size_t max_alternatives) {
  d.require_covers(e);
  const std::size_t m = e.alternative_count();
  const std::size_t k = e.committee_size();
  if (m > max_alternatives) {
    throw Error(ErrorCode::BudgetExceeded,
                "brute force limited to " + std::to_string(max_alternatives) +
                    " alternatives, got " + std::to_string(m));
  }
  std::vector<std::string> ids = e.alternatives();
  std::sort(ids.begin(), ids.end());
  const std::size_t n = e.voter_count();
  std::vector<Scalar> dist(n * m);
  for (VoterIndex v = 0; v < n; ++v) {
    for (std::size_t a = 0; a < m; ++a) dist[v * m + a] = d.distance(v, ids[a]);
  }

  // Combinations in lexicographic order, so the first strict minimum found is
  // also the lexicographically smallest optimal committee.
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::optional<Scalar> best;
  std::vector<std::size_t> best_pick;
  std::vector<Scalar> per_voter(n);
  while (true) {
    Scalar value = 0;
    for (VoterIndex v = 0; v < n; ++v) {
      Scalar c = 0;
      for (std::size_t a : pick) c += dist[v * m + a];
      if (obj == Objective::UtilitarianAdditive) {
        value += c;
      } else if (c > value) {
        value = c;
      }
    }
    if (!best || value < *best) {
      best = value;
      best_pick = pick;
    }
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::vector<std::string> members;
  for (std::size_t a : best_pick) members.push_back(ids[a]);
  return {Committee(std::move(members)), *best, OptMethod::BruteForce};
}

OptResult optimal(const Election& e, const LineMetric& d, Objective obj) {
  return obj == Objective::UtilitarianAdditive
             ? optimal_utilitarian(e, d)
             : optimal_bruteforce(e, d, obj);
}

}  // namespace polarline
