#include "polarline/bench.hpp"

#include <algorithm>
#include <sstream>

#include "polarline/distortion.hpp"
#include "polarline/error.hpp"
#include "polarline/parallel.hpp"
#include "polarline/rules.hpp"

namespace polarline {
namespace {

constexpr std::string_view kTable1 = "table1-v1";

// Random instance sizes for the sampled rows: n in 2..40, m in k..k+3.
GeneratedInstance sampled_instance(std::size_t k, std::size_t seed) {
  const std::size_t n = 2 + seed % 39;
  const std::size_t m = k + (seed / 39) % 4;
  return gen_random(n, m, k, seed);
}

BenchRow upper_row(std::size_t k, std::size_t seeds, unsigned threads) {
  std::vector<ExtendedScalar> ratios(seeds);
  parallel_for(
      seeds,
      [&](std::size_t i) {
        const auto inst = sampled_instance(k, i + 1);
        const Committee s = polar_general(inst.election);
        ratios[i] = distortion_fixed(inst.election, inst.metric, s,
                                     Objective::UtilitarianAdditive)
                        .ratio;
      },
      threads);
  // m is the largest alternative count among the sampled instances.
  const std::size_t m_max = k + std::min<std::size_t>(3, (seeds - 1) / 39);
  BenchRow row{std::string(kTable1), k, "upper", m_max, polar_general_bound(k),
               seeds, ExtendedScalar(Scalar(1)), true};
  for (const auto& r : ratios) row.observed = std::max(row.observed, r);
  row.pass = compare(row.observed, row.bound) <= 0;
  return row;
}

ExtendedScalar worse(const std::pair<ExtendedScalar, ExtendedScalar>& p) {
  return std::max(p.first, p.second);
}

// Depth of the group-size convergent for even k. Depth 5 keeps k = 8 under
// 6,000 voters and its rows well inside the 1/100 slack.
constexpr std::size_t kDepth = 5;

BenchRow small_k_row(std::size_t k) {
  const std::size_t m = 2 * k;
  TwoMetricInstance inst = k % 2 == 1
                               ? gen_lb_small_k(k, m, 2)
                               : [&] {
                                   const auto [n1, n2] =
                                       small_k_convergent_counts(k, kDepth);
                                   return gen_lb_small_k(k, m, n1, n2);
                                 }();
  const Scalar kk(static_cast<unsigned long>(k));
  const QuadraticSurd bound =
      k % 2 == 1 ? QuadraticSurd::of(2 + 1 / kk)
                 : QuadraticSurd{1, 1, (kk + 2) / kk};
  BenchRow row{std::string(kTable1), k, "lower-small-k", m, bound, 1,
               ExtendedScalar::infinity(), false};
  for (std::size_t r = 0; r <= k; ++r) {
    row.observed =
        std::min(row.observed, worse(distortion_pair(inst, block_committee(
                                                               inst, k, r))));
  }
  // Odd k is exact; even k approximates an irrational group ratio.
  row.pass = k % 2 == 1
                 ? compare(row.observed, bound) >= 0
                 : compare(row.observed, bound + fraction(-1, 100)) >= 0;
  return row;
}

BenchRow large_k_row(std::size_t k) {
  const std::size_t m = k % 2 == 1 ? k + 1 : k + 2;
  const auto inst = gen_lb_large_k(k, m, 2);
  const long mk = static_cast<long>(m) - static_cast<long>(k);
  const long denom = 3 * static_cast<long>(k) - static_cast<long>(m);
  const QuadraticSurd bound = QuadraticSurd::of(1 + fraction(mk, denom));
  BenchRow row{std::string(kTable1), k, "lower-large-k", m, bound, 1,
               ExtendedScalar::infinity(), false};
  const std::size_t half = m / 2;
  for (std::size_t r = k > half ? k - half : 0; r <= std::min(k, half); ++r) {
    const auto [d1, d2] = distortion_pair(inst, block_committee(inst, k, r));
    if (d1.is_infinite() || d2.is_infinite()) continue;
    row.observed = std::min(row.observed,
                            ExtendedScalar(Scalar((d1.value() + d2.value()) / 2)));
  }
  row.pass = compare(row.observed, bound) >= 0;
  return row;
}

std::string csv_field(const ExtendedScalar& x) { return x.to_exact_string(); }

}  // namespace

std::string canonical_suite(std::string_view name) {
  if (name == kTable1 || name == "table1") return std::string(kTable1);
  throw Error(ErrorCode::SyntaxError,
              "unknown suite '" + std::string(name) + "'");
}

Committee block_committee(const TwoMetricInstance& inst, std::size_t k,
                          std::size_t r) {
  const auto order = positional_order(inst.d1, inst.election.alternatives());
  const Scalar& left = inst.d1.alternative(order.front());
  std::vector<std::string> first, second;
  for (const auto& id : order) {
    (inst.d1.alternative(id) == left ? first : second).push_back(id);
  }
  if (r > first.size() || k - r > second.size() || r > k) {
    throw Error(ErrorCode::ParameterOutOfRange, "block split out of range");
  }
  std::vector<std::string> members(first.begin(),
                                   first.begin() + static_cast<long>(r));
  members.insert(members.end(), second.begin(),
                 second.begin() + static_cast<long>(k - r));
  return Committee(std::move(members));
}

std::pair<ExtendedScalar, ExtendedScalar> distortion_pair(
    const TwoMetricInstance& inst, const Committee& s) {
  const Election& e = inst.election;
  return {distortion_fixed(e, inst.d1, s, Objective::UtilitarianAdditive).ratio,
          distortion_fixed(e, inst.d2, s, Objective::UtilitarianAdditive).ratio};
}

std::vector<BenchRow> run_table1(std::size_t seeds, unsigned threads) {
  std::vector<BenchRow> rows;
  for (std::size_t k = 2; k <= 9; ++k) {
    rows.push_back(upper_row(k, seeds, threads));
    rows.push_back(small_k_row(k));
    rows.push_back(large_k_row(k));
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "suite,k,kind,m,bound,bound_decimal,instances,observed,"
         "observed_decimal,pass\n";
  for (const auto& r : rows) {
    out << r.suite << ',' << r.k << ',' << r.kind << ',' << r.m << ','
        << r.bound.to_string() << ',' << to_decimal_string(r.bound) << ','
        << r.instances << ',' << csv_field(r.observed) << ','
        << r.observed.to_decimal_string() << ',' << (r.pass ? "true" : "false")
        << '\n';
  }
  return out.str();
}

}  // namespace polarline
