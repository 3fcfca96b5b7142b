// Acceptance checks. Each criterion prints one PASS/FAIL line; the exit
// status is nonzero when any of them fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracle.hpp"
#include "polarline/distortion.hpp"
#include "polarline/error.hpp"
#include "polarline/generators.hpp"
#include "polarline/parallel.hpp"
#include "polarline/rules.hpp"

using namespace polarline;
using oracle::rational;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few failures from parallel workers.
class Failures {
 public:
  void add(const std::string& what) {
    std::lock_guard lock(mu_);
    if (count_++ < 3) samples_.push_back(what);
  }
  std::size_t count() const { return count_; }
  std::string summary() const {
    std::string s = std::to_string(count_) + " violations";
    for (const auto& x : samples_) s += "; " + x;
    return s;
  }

 private:
  std::mutex mu_;
  std::size_t count_ = 0;
  std::vector<std::string> samples_;
};

std::string str(const Scalar& x) {
  return to_exact_string(x) + " (" + to_decimal_string(x) + ")";
}

Rng sizes(std::uint64_t seed) { return Rng(seed * 0x9E3779B97F4A7C15ull + 17); }

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(
      uniform_int(rng, static_cast<long>(lo), static_cast<long>(hi)));
}

// Exact utilitarian ratio from the oracle; nullopt when the optimum is zero
// and the committee is not.
std::optional<Scalar> oracle_ratio(const LineMetric& d, const Election& e,
                                   const Committee& s, bool egalitarian) {
  const Scalar chosen = oracle::cost(d, s.members(), egalitarian);
  const Scalar best = oracle::optimum(d, e.alternatives(),
                                      e.committee_size(), egalitarian);
  if (best == 0) {
    if (chosen == 0) return Scalar(1);
    return std::nullopt;
  }
  return chosen / best;
}

std::vector<Committee> all_committees(const std::vector<std::string>& ids,
                                      std::size_t k) {
  std::vector<Committee> out;
  for (unsigned long mask = 0; mask < (1ul << ids.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) != k) continue;
    std::vector<std::string> s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (mask >> i & 1ul) s.push_back(ids[i]);
    }
    out.emplace_back(std::move(s));
  }
  return out;
}

// Smallest over committees of the larger of the two distortions.
Scalar min_max_ratio(const TwoMetricInstance& inst) {
  const Election& e = inst.election;
  const std::size_t k = e.committee_size();
  const auto g1 = oracle::voter_groups(inst.d1);
  const auto g2 = oracle::voter_groups(inst.d2);
  const Scalar opt1 = oracle::optimum(inst.d1, e.alternatives(), k, false);
  const Scalar opt2 = oracle::optimum(inst.d2, e.alternatives(), k, false);
  std::optional<Scalar> best;
  for (const auto& s : all_committees(e.alternatives(), k)) {
    const Scalar r =
        std::max(oracle::cost(g1, inst.d1, s.members(), false) / opt1,
                 oracle::cost(g2, inst.d2, s.members(), false) / opt2);
    if (!best || r < *best) best = r;
  }
  return *best;
}

// Runs `body` for `count` seeds in parallel and reports the violations.
Outcome sweep(std::size_t count, const std::function<void(std::uint64_t,
                                                          Failures&)>& body) {
  Failures failures;
  parallel_for(count, [&](std::size_t i) {
    try {
      body(i + 1, failures);
    } catch (const std::exception& ex) {
      failures.add("seed " + std::to_string(i + 1) + ": " + ex.what());
    }
  });
  return {failures.count() == 0, failures.summary()};
}

// ---------------------------------------------------------------------------

Outcome k2_tight_lower_bound() {
  const auto inst = gen_lb_k2(169, 239);
  const Scalar v = min_max_ratio(inst);
  return {v >= rational(2404, 1000), "min over committees = " + str(v)};
}

Outcome bound_sweep(std::size_t count, std::size_t k_fixed,
                    const Scalar& p, const Scalar& q, std::size_t m_max,
                    Committee (*rule)(const Election&) = polar_general) {
  return sweep(count, [&](std::uint64_t seed, Failures& f) {
    Rng rng = sizes(seed);
    const std::size_t n = draw(rng, 1, 40);
    const std::size_t m = draw(rng, std::max<std::size_t>(k_fixed, 2), m_max);
    const auto g = gen_random(n, m, k_fixed, seed);
    const Committee s = rule(g.election);
    const auto expect = oracle_ratio(g.metric, g.election, s, false);
    const auto got = distortion_fixed(g.election, g.metric, s,
                                      Objective::UtilitarianAdditive);
    if (!expect || !oracle::at_most(*expect, p, q, 2)) {
      f.add("seed " + std::to_string(seed) + " ratio " +
            (expect ? str(*expect) : "inf"));
    } else if (got.ratio != ExtendedScalar(*expect)) {
      f.add("seed " + std::to_string(seed) + " library ratio disagrees");
    }
  });
}

Outcome k2_upper_bound() { return bound_sweep(10000, 2, 1, 1, 8, polar_k2); }

Outcome k3_upper_bound() { return bound_sweep(10000, 3, rational(7, 3), 0, 9, polar_k3); }

Outcome general_k_bounds() {
  // bound(k) = p + q sqrt 2, written out per k.
  const std::vector<std::tuple<std::size_t, Scalar, Scalar>> bounds{
      {4, 1, 1},
      {5, rational(7, 3) - rational(8, 15), rational(2, 5)},
      {6, rational(7, 3), 0},
      {7, rational(7, 3) - rational(16, 21), rational(4, 7)},
      {8, 2, rational(1, 4)},
      {9, rational(7, 3), 0},
  };
  Outcome all;
  std::ostringstream detail;
  for (const auto& [k, p, q] : bounds) {
    const Outcome o = bound_sweep(2000, k, p, q, 12);
    all.ok = all.ok && o.ok;
    detail << "k=" << k << ": " << o.detail << "  ";
  }
  all.detail = detail.str();
  return all;
}

Outcome k2_adversarial() {
  // Profiles with n <= 3, m <= 4 and no dominated alternatives, taken in seed
  // order after restricting random instances to their undominated part.
  std::vector<Election> profiles;
  for (std::uint64_t seed = 1; profiles.size() < 200; ++seed) {
    Rng rng = sizes(seed);
    const auto g = gen_random(draw(rng, 2, 3), draw(rng, 2, 4), 1, seed);
    const auto keep = undominated(g.election);
    if (keep.size() < 2) continue;
    std::vector<std::string> drop;
    for (const auto& id : g.election.alternatives()) {
      if (std::find(keep.begin(), keep.end(), id) == keep.end()) {
        drop.push_back(id);
      }
    }
    profiles.push_back(g.election.without(drop, 2));
  }
  std::atomic<std::size_t> programs{0};
  Scalar worst = 0;
  std::mutex mu;
  Outcome o = sweep(profiles.size(), [&](std::uint64_t i, Failures& f) {
    const Election& e = profiles[i - 1];
    const Committee s = polar_k2(e);
    AdversaryOptions opts;
    opts.threads = 1;
    const AdversarialResult r =
        adversarial_distortion(e, s, Objective::UtilitarianAdditive, opts);
    programs += r.programs;
    if (r.ratio.is_infinite() || !oracle::at_most(r.ratio.value(), 1, 1, 2)) {
      f.add("profile " + std::to_string(i) + " ratio " +
            r.ratio.to_exact_string());
      return;
    }
    // The witness must be consistent and reproduce the supremum.
    const auto check = oracle_ratio(r.witness, e, s, false);
    if (!check_consistency(e, r.witness, ConsistencyMode::Weak) || !check ||
        *check != r.ratio.value()) {
      f.add("profile " + std::to_string(i) + " witness does not reproduce");
    }
    std::lock_guard lock(mu);
    worst = std::max(worst, r.ratio.value());
  });
  o.detail += ", largest supremum " + str(worst) + ", " +
              std::to_string(programs.load()) + " linear programs";
  return o;
}

// Each part has its own one-second budget.
Outcome small_k_lower_bounds() {
  Outcome o;
  auto part = [&](const std::string& label, auto&& run) {
    const auto start = std::chrono::steady_clock::now();
    const auto [ok, value] = run();
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    o.ok = o.ok && ok && secs < 1;
    char buf[32];
    std::snprintf(buf, sizeof buf, " in %.2f s", secs);
    o.detail += (o.detail.empty() ? "" : ", ") + label + ": " + str(value) + buf;
  };
  part("k=3", [] {
    const Scalar v = min_max_ratio(gen_lb_small_k(3, 6, 2));
    return std::pair{v == rational(7, 3), v};
  });
  const auto [p2, q2] = small_k_convergent_counts(2, 8);
  part("k=2 (" + std::to_string(p2) + ":" + std::to_string(q2) + ")", [&] {
    const Scalar v = min_max_ratio(gen_lb_small_k(2, 4, p2, q2));
    return std::pair{v >= rational(2404, 1000), v};
  });
  const auto [p4, q4] = small_k_convergent_counts(4, 8);
  part("k=4 (" + std::to_string(p4) + ":" + std::to_string(q4) + ")", [&] {
    const Scalar v = min_max_ratio(gen_lb_small_k(4, 8, p4, q4));
    return std::pair{
        oracle::at_least(v, rational(99, 100), 1, rational(3, 2)), v};
  });
  return o;
}

Outcome large_k_lower_bound() {
  const auto inst = gen_lb_large_k(3, 4, 2);
  const Election& e = inst.election;
  std::optional<Scalar> low;
  for (const auto& s : all_committees(e.alternatives(), 3)) {
    const Scalar avg = (*oracle_ratio(inst.d1, e, s, false) +
                        *oracle_ratio(inst.d2, e, s, false)) /
                       2;
    if (!low || avg < *low) low = avg;
  }
  return {*low >= rational(6, 5), "smallest average = " + str(*low)};
}

Outcome egalitarian() {
  std::atomic<std::size_t> draws{0};
  Outcome a = sweep(10000, [&](std::uint64_t seed, Failures& f) {
    // Redraw until the undominated order leaves room for k + 2 alternatives.
    for (std::uint64_t attempt = 0;; ++attempt) {
      ++draws;
      const std::uint64_t s = seed * 1000 + attempt;
      Rng rng = sizes(s);
      const std::size_t m = draw(rng, 3, 8);
      const std::size_t k = draw(rng, 1, m - 2);
      const auto g = gen_random(draw(rng, 1, 30), m, k, s);
      const AlternativeOrder order = order_alternatives(g.election);
      if (order.size() < k + 2) continue;
      const Committee c =
          interior_committee(order, majority_order(g.election, order), k);
      const auto r = oracle_ratio(g.metric, g.election, c, true);
      const auto lib = distortion_fixed(g.election, g.metric, c,
                                        Objective::EgalitarianAdditive);
      if (!r || *r > 2) {
        f.add("seed " + std::to_string(s) + " ratio " + (r ? str(*r) : "inf"));
      } else if (lib.ratio != ExtendedScalar(*r)) {
        f.add("seed " + std::to_string(s) + " library ratio disagrees");
      }
      return;
    }
  });

  bool extremes = true;
  std::string ratios;
  for (std::size_t k : {2, 4, 6}) {
    const auto g = gen_lb_k_extremes(k);
    const AlternativeOrder order(
        positional_order(g.metric, g.election.alternatives()), true);
    const Committee s = k_extremes(order, k);
    const auto r = oracle_ratio(g.metric, g.election, s, true);
    extremes = extremes && r && *r == 2;
    ratios += " " + (r ? to_exact_string(*r) : std::string("inf"));
  }
  return {a.ok && extremes,
          "interior: " + a.detail + " over " + std::to_string(draws.load()) +
              " draws; k-extremes ratios" + ratios};
}

Outcome move_voters_property() {
  std::atomic<std::size_t> skipped{0};
  std::atomic<std::size_t> shared{0};
  Outcome o = sweep(1000, [&](std::uint64_t seed, Failures& f) {
    // Retry with derived seeds until the triple meets the preconditions.
    for (std::uint64_t attempt = 0;; ++attempt) {
      const std::uint64_t s = seed * 1000 + attempt;
      Rng rng = sizes(s);
      // Odd seeds draw freely. Even seeds favour large intersections and put
      // the voters right of the S2-only block, which gives the large ratios
      // needed to reach the shared-member branch of the focal point.
      const bool skewed = seed % 2 == 0;
      const std::size_t m = draw(rng, skewed ? 4 : 2, 8);
      const std::size_t k = draw(rng, skewed ? 3 : 1, m - 1);
      const std::size_t t_lo = std::max<std::size_t>(
          2 * k > m ? 2 * k - m : 0, skewed ? (k + 1) / 2 : 0);
      const std::size_t t = draw(rng, std::min(t_lo, k - 1), k - 1);
      const auto g = gen_random(draw(rng, 1, 20), m, k, s);
      LineMetric d = g.metric;
      Election election = g.election;
      const auto order = positional_order(d, g.election.alternatives());
      // Choose 2(k-t)+t positions: a's, then c's, then b's.
      std::vector<std::size_t> picks(m);
      std::iota(picks.begin(), picks.end(), 0);
      for (std::size_t i = m - 1; i > 0; --i) {
        std::swap(picks[i], picks[draw(rng, 0, i)]);
      }
      picks.resize(2 * (k - t) + t);
      std::sort(picks.begin(), picks.end());
      std::vector<std::string> as, cs, bs;
      for (std::size_t i = 0; i < picks.size(); ++i) {
        const std::string& id = order[picks[i]];
        (i < k - t ? as : i < k ? cs : bs).push_back(id);
      }
      if (skewed) {
        // Voters at odd quarters between the last shared member and just
        // past b_1, so nobody is equidistant from two (integer) alternatives.
        const long lo =
            d.alternative(cs.empty() ? as.back() : cs.back()).get_num().get_si();
        const long hi = d.alternative(bs.back()).get_num().get_si() + 1;
        std::vector<Scalar> voters(d.voter_count());
        for (auto& x : voters) {
          x = lo + rational(2 * uniform_int(rng, 0, 4 * (hi - lo) - 1) + 1, 4);
        }
        // Push the S2-only block and everything left of it further out.
        const Scalar edge = d.alternative(as.back());
        const long push = uniform_int(rng, 0, 40);
        auto alts = d.alternative_positions();
        for (auto& [id, x] : alts) {
          if (x <= edge) x -= push;
        }
        d = LineMetric(std::move(voters), std::move(alts));
        election = derive_profile(d, g.election.alternatives(), k);
      }
      std::vector<std::string> s1m = cs, s2m = cs;
      s1m.insert(s1m.end(), bs.begin(), bs.end());
      s2m.insert(s2m.end(), as.begin(), as.end());
      Committee s1(s1m), s2(s2m);
      Scalar c1 = oracle::cost(d, s1.members(), false);
      Scalar c2 = oracle::cost(d, s2.members(), false);
      if (c2 <= c1) {
        // Look at the mirror image, where the roles swap.
        d = d.mirrored();
        std::swap(s1, s2);
        std::swap(as, bs);
        std::swap(c1, c2);
      }
      if (c2 <= c1 || c1 == 0) {
        ++skipped;
        continue;
      }
      const Scalar ratio = c2 / c1;
      const long den = 16;
      const Scalar tau =
          1 + (ratio - 1) *
                  rational(uniform_int(rng, skewed ? den / 2 : 1, den - 1), den);
      const FocalPoint fp = focal_point({s1, s2, QuadraticSurd::of(tau)}, d);
      if (!fp.from_right) ++shared;
      if (fp.mirrored ||
          std::find(as.begin(), as.end(), fp.at) != as.end()) {
        f.add("seed " + std::to_string(s) + " focal point on the wrong side");
        return;
      }
      const Scalar target = fp.position;
      // Obstacles at voter positions left of x*, with feasible counts.
      std::vector<Scalar> left;
      for (const auto& x : d.voter_positions()) {
        if (x <= target) left.push_back(x);
      }
      std::sort(left.begin(), left.end());
      std::vector<MoveConstraint> cons;
      std::size_t prev = 0;
      const std::size_t obstacles = draw(rng, 0, 3);
      for (std::size_t i = 0; i < obstacles && !left.empty(); ++i) {
        const Scalar x = std::max(
            left[draw(rng, 0, left.size() - 1)],
            cons.empty() ? left.front() : cons.back().x);
        const std::size_t reach = static_cast<std::size_t>(
            std::count_if(left.begin(), left.end(),
                          [&](const Scalar& y) { return y <= x; }));
        prev = draw(rng, prev, std::max(prev, reach));
        cons.push_back({x, prev});
      }
      const LineMetric moved = move_voters(election, d, s1, s2,
                                           QuadraticSurd::of(tau), cons);
      // Placement: count_i - count_{i-1} at each x_i, the rest at x*.
      std::map<Scalar, std::size_t> want;
      std::size_t before = 0;
      for (const auto& c : cons) {
        want[c.x] += c.count - before;
        before = c.count;
      }
      want[target] += d.voter_count() - before;
      std::erase_if(want, [](const auto& kv) { return kv.second == 0; });
      if (oracle::voter_groups(moved) != want ||
          moved.alternative_positions() != d.alternative_positions()) {
        f.add("seed " + std::to_string(s) + " wrong placement");
        return;
      }
      const Scalar m1 = oracle::cost(moved, s1.members(), false);
      const Scalar m2 = oracle::cost(moved, s2.members(), false);
      if (!(m2 > tau * m1)) {
        f.add("seed " + std::to_string(s) + " ratio fell to " +
              (m1 == 0 ? std::string("inf") : str(m2 / m1)) + " <= tau " +
              str(tau));
      }
      return;
    }
  });
  o.detail += ", focal point on a shared member in " +
              std::to_string(shared.load()) + ", " +
              std::to_string(skipped.load()) + " draws with ratio 1 redrawn";
  return o;
}

Outcome oracle_equivalence() {
  return sweep(5000, [&](std::uint64_t seed, Failures& f) {
    Rng rng = sizes(seed);
    const std::size_t m = draw(rng, 1, 12);
    const std::size_t k = draw(rng, 1, m);
    const auto g = gen_random(draw(rng, 1, 20), m, k, seed);
    const OptResult fast = optimal_utilitarian(g.election, g.metric);
    const OptResult brute = optimal_bruteforce(g.election, g.metric,
                                               Objective::UtilitarianAdditive);
    if (fast.cost != brute.cost || fast.committee != brute.committee ||
        fast.cost != oracle::cost(g.metric, fast.committee.members(), false)) {
      f.add("seed " + std::to_string(seed));
    }
  });
}

Outcome structure_recovery() {
  return sweep(10000, [&](std::uint64_t seed, Failures& f) {
    Rng rng = sizes(seed);
    const auto g = gen_random(draw(rng, 1, 40), draw(rng, 1, 10), 1, seed);
    const Election& e = g.election;
    const auto keep = undominated(e);
    const auto truth = positional_order(g.metric, keep);
    const auto got = order_alternatives(e).ids();
    if (got != truth &&
        !std::equal(got.begin(), got.end(), truth.rbegin(), truth.rend())) {
      f.add("seed " + std::to_string(seed) + " order");
      return;
    }
    // Left median in the frame of the recovered order.
    std::vector<Scalar> xs = g.metric.voter_positions();
    std::sort(xs.begin(), xs.end());
    const bool flipped = got.size() >= 2 && got != truth;
    const Scalar median = xs[flipped ? xs.size() / 2 : (xs.size() - 1) / 2];
    const std::string head = majority_order(e).top();
    const Scalar dh = abs(median - g.metric.alternative(head));
    for (const auto& [id, x] : g.metric.alternative_positions()) {
      if (abs(median - x) < dh) {
        f.add("seed " + std::to_string(seed) + " head " + head);
        return;
      }
    }
  });
}

Outcome egalitarian_extremes() {
  std::atomic<std::size_t> draws{0};
  Outcome o = sweep(10000, [&](std::uint64_t seed, Failures& f) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      ++draws;
      const std::uint64_t s = seed * 1000 + attempt;
      Rng rng = sizes(s);
      const auto g = gen_random(draw(rng, 1, 25), draw(rng, 1, 9), 1, s);
      const auto& xs = g.metric.voter_positions();
      const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
      std::vector<std::string> inside;
      for (const auto& [id, x] : g.metric.alternative_positions()) {
        if (*lo <= x && x <= *hi) inside.push_back(id);
      }
      if (inside.empty()) continue;
      std::vector<std::string> members;
      for (const auto& id : inside) {
        if (uniform_int(rng, 0, 1) == 1) members.push_back(id);
      }
      if (members.empty()) members.push_back(inside.front());
      const Committee c(members);
      const Scalar sc =
          social_cost(g.metric, c, Objective::EgalitarianAdditive);
      const Scalar ends = std::max(oracle::cost_at(*lo, g.metric, members),
                                   oracle::cost_at(*hi, g.metric, members));
      if (sc != ends || sc != oracle::cost(g.metric, members, true)) {
        f.add("seed " + std::to_string(s));
      }
      return;
    }
  });
  o.detail += " over " + std::to_string(draws.load()) + " draws";
  return o;
}

Outcome ratio_bound_lemma() {
  std::atomic<std::size_t> pairs{0};
  Outcome o = sweep(5000, [&](std::uint64_t seed, Failures& f) {
    Rng rng = sizes(seed);
    const auto g = gen_random(draw(rng, 1, 30), draw(rng, 2, 8), 1, seed);
    const Election& e = g.election;
    const long n = static_cast<long>(e.voter_count());
    for (const auto& a : e.alternatives()) {
      for (const auto& b : e.alternatives()) {
        if (a == b) continue;
        const long margin = static_cast<long>(oracle::prefer_count(e, a, b));
        if (margin == 0) continue;
        ++pairs;
        const Scalar sa = oracle::cost(g.metric, {a}, false);
        const Scalar sb = oracle::cost(g.metric, {b}, false);
        const Scalar bound = rational(2 * n, margin) - 1;
        if (sa > bound * sb || ratio_bound(e, a, b) != ExtendedScalar(bound)) {
          f.add("seed " + std::to_string(seed) + " pair " + a + "," + b);
        }
      }
    }
  });
  o.detail += " over " + std::to_string(pairs.load()) + " pairs";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  Outcome (*run)();
};

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments select criteria by number.
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const std::vector<Criterion> criteria{
      {1, "k=2 tight lower bound", 1, k2_tight_lower_bound},
      {2, "polar_k2 upper bound on 10000 instances", 120, k2_upper_bound},
      {3, "polar_k2 exact adversarial on 200 profiles", 600, k2_adversarial},
      {4, "polar_k3 upper bound on 10000 instances", 120, k3_upper_bound},
      {5, "general-k parity bounds for k=4..9", 600, general_k_bounds},
      {6, "small-k lower bounds", 3, small_k_lower_bounds},  // 1 s per part
      {7, "large-k lower bound", 1, large_k_lower_bound},
      {8, "egalitarian interior and k-extremes", 120, egalitarian},
      {9, "move-voters property on 1000 triples", 120, move_voters_property},
      {10, "fast and brute-force optima agree", 60, oracle_equivalence},
      {11, "structure recovery", 120, structure_recovery},
      {12, "egalitarian extremes property", 60, egalitarian_extremes},
      {13, "ratio-bound lemma", 60, ratio_bound_lemma},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.contains(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("[%s] %2d %s: %s (%.2f s, limit %.0f s%s)\n",
                pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                c.limit_seconds, in_time ? "" : ", too slow");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
