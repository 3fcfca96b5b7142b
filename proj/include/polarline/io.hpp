#pragma once

// Text formats.
//
// Profile file:
//   n m k
//   id_1 ... id_m
//   count: id id ... id      (one or more lines, counts summing to n)
//
// Metric file, one record per line:
//   voter <index> <position>
//   alt <id> <position>
//
// Positions are "p/q", integers or finite decimals. Blank lines and lines
// starting with '#' are ignored in both formats.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polarline/distortion.hpp"
#include "polarline/model.hpp"

namespace polarline {

struct ProfileGroup {
  std::size_t count = 0;
  Ranking ranking;
};

struct ProfileFile {
  std::size_t voters = 0;
  std::size_t committee_size = 0;
  std::vector<std::string> alternatives;
  std::vector<ProfileGroup> groups;

  Election election() const;
};

// Errors: SyntaxError (with line and column), CountMismatch,
// UnknownAlternative, and the Election validation errors.
ProfileFile parse_profile_file(std::string_view text);
Election parse_profile(std::string_view text);

// Consecutive voters with identical rankings share one group.
ProfileFile profile_file_of(const Election& e);
std::string serialize_profile(const ProfileFile& f);
std::string serialize_profile(const Election& e);

// Errors: SyntaxError, MissingPosition (a voter index in 0..n-1 absent).
LineMetric parse_metric(std::string_view text);
std::string serialize_metric(const LineMetric& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// {"exact": "p/q", "decimal": "..."}; infinity renders as "inf" in both.
nlohmann::json scalar_json(const Scalar& x);
nlohmann::json scalar_json(const ExtendedScalar& x);
nlohmann::json surd_json(const QuadraticSurd& x);
nlohmann::json committee_json(const Committee& s);

// The ratio is recomputed from the committee and metric before the report
// is built; a mismatch throws PreconditionViolated.
nlohmann::json fixed_report(std::string_view rule, const Election& e,
                            const LineMetric& d, const FixedDistortion& fd,
                            const QuadraticSurd* bound);

nlohmann::json adversarial_report(std::string_view rule, const Election& e,
                                  const AdversarialResult& r,
                                  const Committee& s, Objective obj,
                                  const QuadraticSurd* bound,
                                  const std::string& witness_path);

}  // namespace polarline
