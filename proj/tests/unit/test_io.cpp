#include <doctest.h>

#include "../support/oracle.hpp"
#include "polarline/error.hpp"
#include "polarline/generators.hpp"
#include "polarline/io.hpp"
#include "polarline/rules.hpp"

using namespace polarline;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::PreconditionViolated;
}

}  // namespace

TEST_CASE("profile parsing") {
  const Election e = parse_profile("2 2 1\na b\n1: a b\n1: b a\n");
  CHECK(e.voter_count() == 2);
  CHECK(e.ranking(1) == Ranking{"b", "a"});
  CHECK(code_of([] { parse_profile("3 2 1\na b\n1: a b\n1: b a\n"); }) ==
        ErrorCode::CountMismatch);
  CHECK(code_of([] { parse_profile("1 2 1\na b\n1: a c\n"); }) ==
        ErrorCode::UnknownAlternative);
  CHECK(code_of([] { parse_profile("1 2 1\na b\nx: a b\n"); }) ==
        ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_profile("1 2\na b\n1: a b\n"); }) ==
        ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_profile("1 2 3\na b\n1: a b\n"); }) ==
        ErrorCode::CommitteeSizeOutOfRange);
  try {
    parse_profile("2 2 1\na b\n\n1: a b\n1 b a\n");
    FAIL("expected a syntax error");
  } catch (const Error& err) {
    CHECK(std::string(err.what()).find("line 5, column 1") != std::string::npos);
  }
}

TEST_CASE("profile round trip") {
  const std::string text = "12 4 2\na b a' b'\n5: a' b' a b\n7: a b a' b'\n";
  CHECK(serialize_profile(parse_profile_file(text)) == text);
  const std::string messy =
      "# comment\n12   4 2\n\na  b a' b'\n5:   a' b' a b\n7: a b a' b'  \n";
  CHECK(serialize_profile(parse_profile(messy)) == text);
  const auto g = gen_random(13, 7, 3, 99);
  CHECK(parse_profile(serialize_profile(g.election)).profile() ==
        g.election.profile());
}

TEST_CASE("metric round trip") {
  const std::string text = "voter 0 -1/2\nvoter 1 3\nalt a 0\nalt b 7/3\n";
  const LineMetric d = parse_metric(text);
  CHECK(d.voter(0) == oracle::rational(-1, 2));
  CHECK(d.alternative("b") == oracle::rational(7, 3));
  CHECK(serialize_metric(d) == text);
  CHECK(parse_metric("voter 0 0.25\nalt a 1\n").voter(0) ==
        oracle::rational(1, 4));
  CHECK(code_of([] { parse_metric("voter 1 0\nalt a 1\n"); }) ==
        ErrorCode::MissingPosition);
  CHECK(code_of([] { parse_metric("alt a 1\nalt a 2\n"); }) ==
        ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_metric("voter 0 x\n"); }) == ErrorCode::SyntaxError);
  const auto g = gen_random(6, 4, 2, 5);
  CHECK(parse_metric(serialize_metric(g.metric)) == g.metric);
}

TEST_CASE("reports carry exact and decimal values") {
  const auto inst = gen_lb_k2(5, 7);
  const Committee s = polar_k2(inst.election);
  const auto fd = distortion_fixed(inst.election, inst.d2, s,
                                   Objective::UtilitarianAdditive);
  const QuadraticSurd bound = one_plus_sqrt2();
  const auto j = fixed_report("polar-k2", inst.election, inst.d2, fd, &bound);
  CHECK(j["ratio"]["exact"] == "12/5");
  CHECK(j["ratio"]["decimal"] == "2.4");
  CHECK(j["committee"] == nlohmann::json::array({"a", "a'"}));
  CHECK(j["pass"] == true);
  CHECK(j["bound"]["exact"] == "1+sqrt(2)");

  FixedDistortion forged = fd;
  forged.ratio = ExtendedScalar(Scalar(1));
  CHECK(code_of([&] {
          fixed_report("polar-k2", inst.election, inst.d2, forged, &bound);
        }) == ErrorCode::PreconditionViolated);
  CHECK(scalar_json(ExtendedScalar::infinity())["exact"] == "inf");
}
