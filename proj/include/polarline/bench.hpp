#pragma once

// Benchmark suites. "table1-v1" re-derives every entry of the bound table for
// the polar comparison rules: sampled worst cases against the upper bounds
// and the lower-bound constructions evaluated exactly.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polarline/generators.hpp"
#include "polarline/scalar.hpp"

namespace polarline {

struct BenchRow {
  std::string suite;
  std::size_t k = 0;
  std::string kind;  // upper, lower-small-k, lower-large-k
  std::size_t m = 0;  // 0 for sampled rows, whose m varies per instance
  QuadraticSurd bound;
  std::size_t instances = 0;
  // Largest sampled ratio (upper rows) or the smallest worst-of-two-metrics
  // ratio over committees (lower rows).
  ExtendedScalar observed;
  bool pass = false;
};

// Canonical suite id for a requested name; throws SyntaxError if unknown.
std::string canonical_suite(std::string_view name);

// Rows for k = 2..9 in a fixed order. `seeds` random instances per upper row.
std::vector<BenchRow> run_table1(std::size_t seeds, unsigned threads = 0);

std::string bench_csv(const std::vector<BenchRow>& rows);

// Committee of size k with r members from the first block of a two-block
// instance and k - r from the second; blocks are told apart by position.
Committee block_committee(const TwoMetricInstance& inst, std::size_t k,
                          std::size_t r);

// The distortion of one committee under each metric of the instance.
std::pair<ExtendedScalar, ExtendedScalar> distortion_pair(
    const TwoMetricInstance& inst, const Committee& s);

}  // namespace polarline
