#include <algorithm>
#include <optional>

#include "polarline/distortion.hpp"
#include "polarline/ordering.hpp"
#include "polarline/parallel.hpp"
#include "polarline/random.hpp"
#include "polarline/simplex.hpp"

namespace polarline {
namespace {

using Form = std::vector<Scalar>;

Form operator-(const Form& x, const Form& y) {
  Form r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

void add_to(Form& x, const Form& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
}

Scalar evaluate(const Form& f, const std::vector<Scalar>& x) {
  Scalar v = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0) v += f[i] * x[i];
  }
  return v;
}

std::vector<std::vector<std::string>> committees_of_size(
    std::vector<std::string> ids, std::size_t k) {
  std::sort(ids.begin(), ids.end());
  std::vector<std::vector<std::string>> out;
  const std::size_t m = ids.size();
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<std::string> c;
    for (std::size_t a : pick) c.push_back(ids[a]);
    out.push_back(std::move(c));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// One orientation of the alternative order together with one gap (slot)
// per voter. Variables: m-1 gaps between consecutive alternatives, then one
// offset per voter measured from the left end of its gap (or outward from
// the extreme alternative).
class Pattern {
 public:
  Pattern(const Election& e, const std::vector<std::string>& order,
          const std::vector<std::size_t>& slots)
      : e_(e), order_(order), slots_(slots) {
    const std::size_t m = order.size();
    const std::size_t n = slots.size();
    vars_ = (m - 1) + n;
    for (std::size_t j = 0; j < m; ++j) {
      Form p(vars_, 0);
      for (std::size_t l = 0; l < j; ++l) p[l] = 1;
      alt_.push_back(std::move(p));
      slot_of_.emplace(order[j], j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      Form x = slots[i] == 0 ? Form(vars_, 0) : alt_[slots[i] - 1];
      x[m - 1 + i] += slots[i] == 0 ? -1 : 1;
      voter_.push_back(std::move(x));
    }
  }

  std::size_t variables() const { return vars_; }

  Form distance(VoterIndex i, std::string_view id) const {
    const std::size_t j = slot_of_.find(std::string(id))->second;
    return j < slots_[i] ? voter_[i] - alt_[j] : alt_[j] - voter_[i];
  }

  Form social_cost(const std::vector<std::string>& committee) const {
    Form f(vars_, 0);
    for (VoterIndex i = 0; i < slots_.size(); ++i) {
      for (const auto& id : committee) add_to(f, distance(i, id));
    }
    return f;
  }

  // Forms that must be <= 0: ranking consistency (adjacent pairs suffice),
  // then the offsets of voters inside a gap.
  std::vector<Form> consistency() const {
    std::vector<Form> out;
    for (VoterIndex i = 0; i < slots_.size(); ++i) {
      const Ranking& r = e_.ranking(i);
      for (std::size_t q = 0; q + 1 < r.size(); ++q) {
        out.push_back(distance(i, r[q]) - distance(i, r[q + 1]));
      }
    }
    return out;
  }

  std::vector<Form> bounds() const {
    std::vector<Form> out;
    const std::size_t m = order_.size();
    for (VoterIndex i = 0; i < slots_.size(); ++i) {
      if (slots_[i] == 0 || slots_[i] == m) continue;
      Form f(vars_, 0);
      f[m - 1 + i] = 1;
      f[slots_[i] - 1] -= 1;
      out.push_back(std::move(f));
    }
    return out;
  }

  LineMetric metric(const std::vector<Scalar>& x) const {
    std::map<std::string, Scalar, std::less<>> alts;
    for (std::size_t j = 0; j < order_.size(); ++j) {
      alts.emplace(order_[j], evaluate(alt_[j], x));
    }
    std::vector<Scalar> voters;
    for (const auto& f : voter_) voters.push_back(evaluate(f, x));
    return LineMetric(std::move(voters), std::move(alts));
  }

 private:
  const Election& e_;
  std::vector<std::string> order_;
  std::vector<std::size_t> slots_;
  std::size_t vars_ = 0;
  std::vector<Form> alt_;
  std::vector<Form> voter_;
  std::map<std::string, std::size_t> slot_of_;
};

// Largest slack by which every consistency constraint can hold strictly,
// positions normalized to sum at most 1. Returns the point when positive.
std::optional<std::vector<Scalar>> strictly_feasible(const Pattern& p) {
  const std::size_t v = p.variables();
  lp::Problem prob;
  prob.variables = v + 1;
  prob.objective.assign(v + 1, 0);
  prob.objective[v] = 1;
  for (Form f : p.consistency()) {
    f.push_back(1);
    prob.add(std::move(f), lp::Relation::LessEqual, 0);
  }
  for (Form f : p.bounds()) {
    f.push_back(0);
    prob.add(std::move(f), lp::Relation::LessEqual, 0);
  }
  Form total(v + 1, 1);
  total[v] = 0;
  prob.add(std::move(total), lp::Relation::LessEqual, 1);
  Form slack(v + 1, 0);
  slack[v] = 1;
  prob.add(std::move(slack), lp::Relation::LessEqual, 1);
  const lp::Solution s = lp::solve(prob);
  if (s.status != lp::Status::Optimal || s.value <= 0) return std::nullopt;
  return std::vector<Scalar>(s.x.begin(), s.x.begin() + static_cast<std::ptrdiff_t>(v));
}

struct PatternOutcome {
  bool feasible = false;
  ExtendedScalar ratio{Scalar(1)};
  std::optional<LineMetric> witness;
  std::size_t programs = 0;
};

PatternOutcome examine(const Pattern& p, const std::vector<std::string>& chosen,
                       const std::vector<std::vector<std::string>>& others) {
  PatternOutcome out;
  auto interior = strictly_feasible(p);
  out.programs = 1;
  if (!interior) return out;
  out.feasible = true;
  out.witness = p.metric(*interior);

  const Form objective = p.social_cost(chosen);
  std::vector<Form> constraints = p.consistency();
  for (Form f : p.bounds()) constraints.push_back(std::move(f));
  for (const auto& other : others) {
    lp::Problem prob;
    prob.variables = p.variables();
    prob.objective = objective;
    for (const Form& f : constraints) prob.add(f, lp::Relation::LessEqual, 0);
    prob.add(p.social_cost(other), lp::Relation::Equal, 1);
    const lp::Solution s = lp::solve(prob);
    ++out.programs;
    if (s.status == lp::Status::Infeasible) continue;
    if (s.status == lp::Status::Unbounded) {
      out.ratio = ExtendedScalar::infinity();
      return out;  // the interior point stays the witness
    }
    if (ExtendedScalar(s.value) > out.ratio) {
      out.ratio = ExtendedScalar(s.value);
      out.witness = p.metric(s.x);
    }
  }
  return out;
}

AdversarialResult exact_search(const Election& e, const Committee& s,
                               const AdversaryOptions& options) {
  const std::size_t n = e.voter_count();
  const std::size_t m = e.alternative_count();
  if (n > options.max_voters || m > options.max_alternatives) {
    throw Error(ErrorCode::BudgetExceeded,
                "exact search is capped at n<=" +
                    std::to_string(options.max_voters) + ", m<=" +
                    std::to_string(options.max_alternatives));
  }
  const AlternativeOrder order = order_alternatives(e);
  if (order.size() != m) {
    throw Error(ErrorCode::PreconditionViolated,
                "exact search needs an election without dominated "
                "alternatives");
  }
  std::vector<std::vector<std::string>> others;
  for (auto& c : committees_of_size(e.alternatives(), s.size())) {
    if (c != s.members()) others.push_back(std::move(c));
  }

  // A voter's favourite is always an end of the gap holding it.
  struct Job {
    std::vector<std::string> order;
    std::vector<std::size_t> slots;
  };
  std::vector<Job> jobs;
  for (const auto& ids : {order.ids(), order.reversed().ids()}) {
    std::vector<std::vector<std::size_t>> choices(n);
    for (VoterIndex v = 0; v < n; ++v) {
      const auto at = static_cast<std::size_t>(
          std::find(ids.begin(), ids.end(), e.ranking(v).front()) -
          ids.begin());
      choices[v] = {at, at + 1};
    }
    std::vector<std::size_t> digit(n, 0);
    while (true) {
      Job job{ids, std::vector<std::size_t>(n)};
      for (VoterIndex v = 0; v < n; ++v) job.slots[v] = choices[v][digit[v]];
      jobs.push_back(std::move(job));
      std::size_t v = 0;
      while (v < n && ++digit[v] == choices[v].size()) digit[v++] = 0;
      if (v == n) break;
    }
    if (m == 1) break;  // both orientations coincide
  }
  const std::size_t programs = jobs.size() * (others.size() + 1);
  if (programs > options.budget) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(programs) + " linear programs needed, budget " +
                    std::to_string(options.budget));
  }

  std::vector<PatternOutcome> outcomes(jobs.size());
  parallel_for(
      jobs.size(),
      [&](std::size_t j) {
        outcomes[j] = examine(Pattern(e, jobs[j].order, jobs[j].slots),
                              s.members(), others);
      },
      options.threads);

  AdversarialResult result;
  result.mode = AdversaryMode::Exact;
  result.ratio = ExtendedScalar(Scalar(1));
  bool any = false;
  for (auto& o : outcomes) {
    result.programs += o.programs;
    if (!o.feasible) continue;
    ++result.patterns;
    if (!any || o.ratio > result.ratio) {
      result.ratio = o.ratio;
      result.witness = std::move(*o.witness);
      any = true;
    }
  }
  if (!any) {
    throw Error(ErrorCode::NotLineRealizable,
                "no line metric is consistent with the rankings");
  }
  return result;
}

// Interval of voter positions consistent with `ranking` given alternative
// positions; nullopt when empty. Unbounded sides are capped at `reach`
// beyond the outermost alternative.
std::optional<std::pair<Scalar, Scalar>> voter_interval(
    const Ranking& ranking, const std::map<std::string, Scalar, std::less<>>& x,
    const Scalar& reach) {
  Scalar lo = x.begin()->second;
  Scalar hi = lo;
  for (const auto& [id, p] : x) {
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  lo -= reach;
  hi += reach;
  for (std::size_t q = 0; q + 1 < ranking.size(); ++q) {
    const Scalar& a = x.find(ranking[q])->second;
    const Scalar& b = x.find(ranking[q + 1])->second;
    if (a == b) continue;
    const Scalar mid = (a + b) / 2;
    if (a < b) {
      hi = std::min(hi, mid);
    } else {
      lo = std::max(lo, mid);
    }
  }
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

AdversarialResult sample_search(const Election& e, const Committee& s,
                                Objective obj,
                                const AdversaryOptions& options) {
  constexpr long kGrid = 64;  // positions are multiples of 1/kGrid
  constexpr long kSpan = 16 * kGrid;
  const AlternativeOrder order = order_alternatives(e);
  Rng rng(options.seed);
  const std::size_t n = e.voter_count();
  const Scalar reach = fraction(kSpan, kGrid);

  auto place_voters = [&](const std::map<std::string, Scalar, std::less<>>& x,
                          const std::vector<Scalar>* near)
      -> std::optional<std::vector<Scalar>> {
    std::vector<Scalar> voters(n);
    for (VoterIndex v = 0; v < n; ++v) {
      auto range = voter_interval(e.ranking(v), x, reach);
      if (!range) return std::nullopt;
      const auto& [lo, hi] = *range;
      const long mode = uniform_int(rng, 0, 4);
      if (mode == 0) {
        voters[v] = lo;
      } else if (mode == 1) {
        voters[v] = hi;
      } else if (mode == 3) {
        // On top of the favourite alternative.
        voters[v] = std::clamp(x.find(e.ranking(v).front())->second, lo, hi);
      } else if (mode == 2 && near) {
        const Scalar jitter =
            fraction(uniform_int(rng, -kGrid, kGrid), 4 * kGrid);
        Scalar y = (*near)[v] + jitter;
        voters[v] = std::clamp(y, lo, hi);
      } else {
        voters[v] =
            lo + (hi - lo) * fraction(uniform_int(rng, 0, kGrid), kGrid);
      }
    }
    return voters;
  };

  AdversarialResult best;
  best.mode = AdversaryMode::Sample;
  bool found = false;
  for (std::size_t iter = 0; iter < options.budget; ++iter) {
    std::map<std::string, Scalar, std::less<>> x;
    const bool refine = found && uniform_int(rng, 0, 1) == 1;
    if (refine) {
      x = best.witness.alternative_positions();
      auto it = x.begin();
      std::advance(it, uniform_int(rng, 0, static_cast<long>(x.size()) - 1));
      it->second += fraction(uniform_int(rng, -kGrid, kGrid), kGrid);
    } else {
      for (const auto& id : e.alternatives()) {
        x[id] = fraction(uniform_int(rng, -kSpan, kSpan), kGrid);
      }
      // Keep the undominated alternatives in their forced order.
      std::vector<Scalar> ordered;
      for (const auto& id : order.ids()) ordered.push_back(x[id]);
      std::sort(ordered.begin(), ordered.end());
      for (std::size_t j = 0; j < order.size(); ++j) x[order[j]] = ordered[j];
    }
    auto voters =
        place_voters(x, refine ? &best.witness.voter_positions() : nullptr);
    if (!voters) continue;
    LineMetric d(std::move(*voters), std::move(x));
    if (!check_consistency(e, d, ConsistencyMode::Weak)) continue;
    ++best.patterns;
    const ExtendedScalar r = distortion_fixed(e, d, s, obj).ratio;
    if (!found || r > best.ratio) {
      best.ratio = r;
      best.witness = std::move(d);
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorCode::BudgetExceeded,
                "no consistent metric found within the sample budget");
  }
  return best;
}

}  // namespace

AdversarialResult adversarial_distortion(const Election& e, const Committee& s,
                                         Objective obj,
                                         const AdversaryOptions& options) {
  validate_committee(e, s);
  if (options.mode == AdversaryMode::Sample) {
    return sample_search(e, s, obj, options);
  }
  if (obj != Objective::UtilitarianAdditive) {
    throw Error(ErrorCode::PreconditionViolated,
                "exact search supports the utilitarian objective only");
  }
  return exact_search(e, s, options);
}

}  // namespace polarline
