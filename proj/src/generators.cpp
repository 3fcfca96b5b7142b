#include "polarline/generators.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "polarline/random.hpp"

namespace polarline {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 5> kFamilyNames{{
    {Family::K2Tight, "k2"},
    {Family::SmallK, "small-k"},
    {Family::LargeK, "large-k"},
    {Family::KExtremesEgal, "k-extremes"},
    {Family::Random, "random"},
}};

Error out_of_range(const std::string& what) {
  return Error(ErrorCode::ParameterOutOfRange, what);
}

std::vector<std::string> numbered(char prefix, std::size_t count) {
  const std::size_t width = std::to_string(count).size();
  std::vector<std::string> ids;
  for (std::size_t i = 1; i <= count; ++i) {
    std::string digits = std::to_string(i);
    ids.push_back(prefix + std::string(width - digits.size(), '0') + digits);
  }
  return ids;
}

// Two blocks of co-located alternatives at -1 and +1 and two voter groups,
// each preferring one block.
TwoMetricInstance two_blocks(std::vector<std::string> left,
                             std::vector<std::string> right, std::size_t k,
                             std::size_t n1, std::size_t n2) {
  std::vector<std::string> ids = left;
  ids.insert(ids.end(), right.begin(), right.end());
  Ranking prefers_left = ids;
  Ranking prefers_right = right;
  prefers_right.insert(prefers_right.end(), left.begin(), left.end());

  std::vector<Ranking> profile(n1, prefers_left);
  profile.insert(profile.end(), n2, prefers_right);

  std::map<std::string, Scalar, std::less<>> alts;
  for (const auto& id : left) alts[id] = -1;
  for (const auto& id : right) alts[id] = 1;
  std::vector<Scalar> v1(n1, Scalar(-1));
  v1.insert(v1.end(), n2, Scalar(0));
  std::vector<Scalar> v2(n1, Scalar(0));
  v2.insert(v2.end(), n2, Scalar(1));
  return {Election(std::move(ids), k, std::move(profile)),
          LineMetric(std::move(v1), alts), LineMetric(std::move(v2), alts)};
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [family, spelled] : kFamilyNames) {
    if (spelled == name) return family;
  }
  throw Error(ErrorCode::SyntaxError,
              "unknown family '" + std::string(name) + "'");
}

std::pair<Integer, Integer> convergent(const QuadraticSurd& x,
                                       std::size_t depth) {
  Integer p_prev = 1, p = floor_of(x);
  Integer q_prev = 0, q = 1;
  QuadraticSurd rest = x + Scalar(-Integer(p));
  for (std::size_t i = 0; i < depth; ++i) {
    if (compare(Scalar(0), rest) == 0) break;  // x is rational
    const QuadraticSurd next = reciprocal(rest);
    const Integer a = floor_of(next);
    rest = next + Scalar(-a);
    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    p_prev = std::exchange(p, std::move(p_next));
    q_prev = std::exchange(q, std::move(q_next));
  }
  return {p, q};
}

TwoMetricInstance gen_lb_k2(std::size_t n1, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw out_of_range("n1 and n2 must be positive");
  const std::vector<std::string> ids{"a", "b", "a'", "b'"};
  std::vector<Ranking> profile(n1, Ranking{"a'", "b'", "a", "b"});
  profile.insert(profile.end(), n2, Ranking{"a", "b", "a'", "b'"});
  const std::map<std::string, Scalar, std::less<>> alts{
      {"a", 1}, {"b", 1}, {"a'", -1}, {"b'", -1}};
  std::vector<Scalar> v1(n1, Scalar(-1));
  v1.insert(v1.end(), n2, Scalar(0));
  std::vector<Scalar> v2(n1, Scalar(0));
  v2.insert(v2.end(), n2, Scalar(1));
  return {Election(ids, 2, std::move(profile)), LineMetric(std::move(v1), alts),
          LineMetric(std::move(v2), alts)};
}

TwoMetricInstance gen_lb_small_k(std::size_t k, std::size_t m, std::size_t n1,
                                 std::size_t n2) {
  if (k == 0 || k > m / 2) {
    throw out_of_range("small-k family needs 1 <= k <= m/2");
  }
  if (n1 == 0 || n2 == 0) throw out_of_range("both groups must be non-empty");
  return two_blocks(numbered('a', m / 2), numbered('b', m - m / 2), k, n1, n2);
}

std::pair<std::size_t, std::size_t> small_k_counts(std::size_t k,
                                                   std::size_t n) {
  if (k == 0) throw out_of_range("k must be positive");
  std::size_t n1;
  if (k % 2 == 1) {
    if (n % 2 != 0) throw out_of_range("odd k needs an even number of voters");
    n1 = n / 2;
  } else {
    // n/(1+alpha) = n(k+2)/2 - (n/2) sqrt(k(k+2)).
    const Scalar nn(static_cast<unsigned long>(n));
    const Scalar kk(static_cast<unsigned long>(k));
    const QuadraticSurd share{nn * (kk + 2) / 2, -nn / 2, kk * (kk + 2)};
    n1 = ceil_of(share).get_ui();
  }
  if (n1 == 0 || n1 >= n) throw out_of_range("too few voters for two groups");
  return {n1, n - n1};
}

TwoMetricInstance gen_lb_small_k(std::size_t k, std::size_t m, std::size_t n) {
  const auto [n1, n2] = small_k_counts(k, n);
  return gen_lb_small_k(k, m, n1, n2);
}

std::pair<std::size_t, std::size_t> small_k_convergent_counts(
    std::size_t k, std::size_t depth) {
  if (k == 0 || k % 2 != 0) throw out_of_range("convergent counts need even k");
  const Scalar kk(static_cast<unsigned long>(k));
  const auto [p, q] = convergent(QuadraticSurd{0, 1, (kk + 2) / kk}, depth);
  return {p.get_ui(), q.get_ui()};
}

TwoMetricInstance gen_lb_large_k(std::size_t k, std::size_t m, std::size_t n) {
  if (m % 2 != 0 || n % 2 != 0 || n == 0) {
    throw out_of_range("large-k family needs even m and even positive n");
  }
  if (2 * k < m || k > m) throw out_of_range("large-k family needs m/2 <= k <= m");
  return two_blocks(numbered('a', m / 2), numbered('b', m / 2), k, n / 2,
                    n / 2);
}

GeneratedInstance gen_lb_k_extremes(std::size_t k) {
  if (k < 2) throw out_of_range("k must be at least 2");
  const std::size_t copies = (k + 1) / 2;
  std::vector<std::string> left, mid, right;
  if (k == 2) {
    left = {"a"};
    mid = {"b"};
    right = {"c"};
  } else {
    left = numbered('a', copies);
    mid = numbered('b', copies);
    right = numbered('c', copies);
  }
  std::map<std::string, Scalar, std::less<>> alts;
  for (const auto& id : left) alts[id] = -1;
  for (const auto& id : mid) alts[id] = 0;
  for (const auto& id : right) alts[id] = 1;

  std::vector<std::string> ids = left;
  ids.insert(ids.end(), mid.begin(), mid.end());
  ids.insert(ids.end(), right.begin(), right.end());
  // The voter at 0 is equidistant from both outer blocks; the one at +1 from
  // nothing. Co-located alternatives keep id order.
  Ranking at_zero = mid;
  at_zero.insert(at_zero.end(), left.begin(), left.end());
  at_zero.insert(at_zero.end(), right.begin(), right.end());
  Ranking at_one = right;
  at_one.insert(at_one.end(), mid.begin(), mid.end());
  at_one.insert(at_one.end(), left.begin(), left.end());
  return {Election(std::move(ids), k, {at_zero, at_one}),
          LineMetric({Scalar(0), Scalar(1)}, std::move(alts))};
}

GeneratedInstance gen_random(std::size_t n, std::size_t m, std::size_t k,
                             std::uint64_t seed) {
  if (n == 0 || m == 0 || k == 0 || k > m) {
    throw out_of_range("random family needs n, m >= 1 and 1 <= k <= m");
  }
  Rng rng(seed);
  const long reach = 2 * static_cast<long>(m) + 5;
  std::set<long> taken;
  std::vector<std::string> ids;
  if (m <= 26) {
    for (std::size_t i = 0; i < m; ++i) ids.emplace_back(1, char('a' + i));
  } else {
    ids = numbered('a', m);
  }
  std::map<std::string, Scalar, std::less<>> alts;
  for (const auto& id : ids) {
    long x;
    do {
      x = uniform_int(rng, -reach, reach);
    } while (!taken.insert(x).second);
    alts[id] = x;
  }

  // Voters sit at (2j+1)/4. Alternative midpoints are multiples of 1/2, so
  // no voter is ever equidistant from two alternatives.
  const long quarter_reach = 4 * reach;
  const long style = uniform_int(rng, 0, 2);
  const long c1 = uniform_int(rng, -quarter_reach, quarter_reach);
  const long c2 = uniform_int(rng, -quarter_reach, quarter_reach);
  const long spread = uniform_int(rng, 2, quarter_reach);
  std::vector<Scalar> voters;
  for (std::size_t v = 0; v < n; ++v) {
    long j;
    if (style == 0) {
      j = uniform_int(rng, -quarter_reach, quarter_reach);
    } else {
      const long centre = style == 1 || uniform_int(rng, 0, 1) == 0 ? c1 : c2;
      j = centre + uniform_int(rng, -spread, spread);
    }
    voters.push_back(fraction(2 * j + 1, 4));
  }
  LineMetric d(std::move(voters), std::move(alts));
  Election e = derive_profile(d, std::move(ids), k);
  return {std::move(e), std::move(d)};
}

}  // namespace polarline
