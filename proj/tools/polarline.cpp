#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polarline/bench.hpp"
#include "polarline/distortion.hpp"
#include "polarline/error.hpp"
#include "polarline/generators.hpp"
#include "polarline/io.hpp"
#include "polarline/ordering.hpp"
#include "polarline/parallel.hpp"
#include "polarline/rules.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace polarline;

namespace {

constexpr int kUsage = 2;
constexpr int kDataError = 3;
constexpr int kBudget = 4;

const std::vector<std::string> kRules{"polar-k2",   "polar-k3", "polar-general",
                                      "k-extremes", "interior", "top-of-majority"};
const std::vector<std::string> kObjectives{"utilitarian", "egalitarian"};
const std::vector<std::string> kFamilies{"k2", "small-k", "large-k",
                                         "k-extremes", "random"};

struct Options {
  std::string profile;
  std::string metric;
  std::string rule = "polar-general";
  std::string committee;
  std::string objective = "utilitarian";
  std::string mode = "exact";
  std::string out;
  std::string family;
  std::string suite = "table1-v1";
  std::optional<std::size_t> k;
  std::size_t budget = 200000;
  std::uint64_t seed = 1;
  std::size_t seeds = 200;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t depth = 0;
  std::size_t max_voters = 5;
  std::size_t max_alternatives = 6;
};

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

Election load_election(const Options& o) {
  Election e = parse_profile(read_file(o.profile));
  return o.k ? e.with_committee_size(*o.k) : e;
}

// The committee named by --committee, or the output of --rule.
std::pair<std::string, Committee> chosen_committee(const Options& o,
                                                   const Election& e) {
  if (!o.committee.empty()) {
    std::vector<std::string> ids;
    std::stringstream in(o.committee);
    for (std::string id; std::getline(in, id, ',');) ids.push_back(id);
    Committee s(std::move(ids));
    validate_committee(e, s);
    return {"given", s};
  }
  return {o.rule, run_rule(parse_rule(o.rule), e)};
}

std::optional<QuadraticSurd> bound_for(const Options& o, const Election& e,
                                       Objective obj) {
  if (!o.committee.empty()) return std::nullopt;
  return known_bound(parse_rule(o.rule), e.committee_size(), obj);
}

int cmd_order(const Options& o) {
  const Election e = load_election(o);
  const AlternativeOrder order = order_alternatives(e);
  const MajorityOrder majority = majority_order(e, order);
  std::vector<std::string> dominated = pareto_dominated(e, e.alternatives());
  print({{"order", order.ids()},
         {"majority_order", majority.ids()},
         {"dominated", dominated}});
  return 0;
}

int cmd_elect(const Options& o) {
  const Election e = load_election(o);
  const Committee s = run_rule(parse_rule(o.rule), e);
  print({{"rule", o.rule},
         {"k", e.committee_size()},
         {"committee", committee_json(s)}});
  return 0;
}

int cmd_eval(const Options& o) {
  const Election e = load_election(o);
  const LineMetric d = parse_metric(read_file(o.metric));
  const Objective obj = parse_objective(o.objective);
  const auto [rule, s] = chosen_committee(o, e);
  const FixedDistortion fd = distortion_fixed(e, d, s, obj);
  const auto bound = bound_for(o, e, obj);
  json j = fixed_report(rule, e, d, fd, bound ? &*bound : nullptr);
  j["consistency"] = check_consistency(e, d, ConsistencyMode::Strict) ? "strict"
                     : check_consistency(e, d, ConsistencyMode::Weak)
                         ? "weak"
                         : "none";
  print(j);
  return 0;
}

int cmd_adversary(const Options& o) {
  const Election e = load_election(o);
  const Objective obj = parse_objective(o.objective);
  const auto [rule, s] = chosen_committee(o, e);
  AdversaryOptions opts;
  opts.mode = o.mode == "sample" ? AdversaryMode::Sample : AdversaryMode::Exact;
  opts.budget = o.budget;
  opts.seed = o.seed;
  opts.max_voters = o.max_voters;
  opts.max_alternatives = o.max_alternatives;
  opts.threads = worker_count();
  const AdversarialResult r = adversarial_distortion(e, s, obj, opts);
  const auto bound = bound_for(o, e, obj);
  if (!o.out.empty()) write_file(o.out, serialize_metric(r.witness));
  json j = adversarial_report(rule, e, r, s, obj, bound ? &*bound : nullptr,
                              o.out);
  j["witness_metric"] = serialize_metric(r.witness);
  print(j);
  return 0;
}

int cmd_gen(const Options& o) {
  const Family family = parse_family(o.family);
  fs::create_directories(o.out);
  const auto path = [&](const char* name) { return (fs::path(o.out) / name).string(); };
  auto need = [](std::size_t v, const char* flag) {
    if (v == 0) {
      throw Error(ErrorCode::ParameterOutOfRange,
                  std::string(flag) + " must be given and positive");
    }
    return v;
  };
  std::vector<std::string> files;
  auto write_two = [&](const TwoMetricInstance& inst) {
    write_file(path("profile.txt"), serialize_profile(inst.election));
    write_file(path("metric1.txt"), serialize_metric(inst.d1));
    write_file(path("metric2.txt"), serialize_metric(inst.d2));
    files = {path("profile.txt"), path("metric1.txt"), path("metric2.txt")};
  };
  auto write_one = [&](const GeneratedInstance& inst) {
    write_file(path("profile.txt"), serialize_profile(inst.election));
    write_file(path("metric.txt"), serialize_metric(inst.metric));
    files = {path("profile.txt"), path("metric.txt")};
  };
  const std::size_t k = o.k.value_or(0);
  switch (family) {
    case Family::K2Tight: {
      std::size_t n1 = o.n1, n2 = o.n2;
      if (o.depth > 0) {
        std::tie(n1, n2) = small_k_convergent_counts(2, o.depth);
      }
      write_two(gen_lb_k2(need(n1, "--n1"), need(n2, "--n2")));
      break;
    }
    case Family::SmallK:
      if (o.n1 > 0 || o.n2 > 0) {
        write_two(gen_lb_small_k(need(k, "--k"), need(o.m, "--m"),
                                 need(o.n1, "--n1"), need(o.n2, "--n2")));
      } else if (o.depth > 0) {
        const auto [n1, n2] = small_k_convergent_counts(need(k, "--k"), o.depth);
        write_two(gen_lb_small_k(k, need(o.m, "--m"), n1, n2));
      } else {
        write_two(gen_lb_small_k(need(k, "--k"), need(o.m, "--m"),
                                 need(o.n, "--n")));
      }
      break;
    case Family::LargeK:
      write_two(gen_lb_large_k(need(k, "--k"), need(o.m, "--m"),
                               need(o.n, "--n")));
      break;
    case Family::KExtremesEgal:
      write_one(gen_lb_k_extremes(need(k, "--k")));
      break;
    case Family::Random:
      write_one(gen_random(need(o.n, "--n"), need(o.m, "--m"), need(k, "--k"),
                           o.seed));
      break;
  }
  print({{"family", family_name(family)}, {"files", files}});
  return 0;
}

int cmd_bench(const Options& o) {
  const std::string suite = canonical_suite(o.suite);
  const auto rows = run_table1(o.seeds, worker_count());
  const std::string csv = bench_csv(rows);
  if (o.out.empty()) {
    std::cout << csv;
  } else {
    write_file(o.out, csv);
  }
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.pass;
  std::cerr << suite << ": " << rows.size() << " rows, "
            << (ok ? "all pass" : "FAILURES") << '\n';
  return ok ? 0 : kDataError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Committee elections on the line: rules, distortion and bounds"};
  app.require_subcommand(1);
  Options o;

  auto profile = [&](CLI::App* sub) {
    sub->add_option("--profile", o.profile, "Profile file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--k", o.k, "Override the committee size");
  };
  auto rule = [&](CLI::App* sub) {
    sub->add_option("--rule", o.rule, "Voting rule")
        ->check(CLI::IsMember(kRules));
  };
  auto committee = [&](CLI::App* sub) {
    sub->add_option("--committee", o.committee,
                    "Comma-separated committee instead of a rule");
  };
  auto objective = [&](CLI::App* sub) {
    sub->add_option("--objective", o.objective, "Social cost objective")
        ->check(CLI::IsMember(kObjectives));
  };

  auto* order = app.add_subcommand("order", "Positional and majority orders");
  profile(order);

  auto* elect = app.add_subcommand("elect", "Run a rule on a profile");
  profile(elect);
  rule(elect);

  auto* eval = app.add_subcommand("eval", "Distortion under a fixed metric");
  profile(eval);
  rule(eval);
  committee(eval);
  objective(eval);
  eval->add_option("--metric", o.metric, "Metric file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* adversary =
      app.add_subcommand("adversary", "Worst case over consistent metrics");
  profile(adversary);
  rule(adversary);
  committee(adversary);
  objective(adversary);
  adversary->add_option("--mode", o.mode, "exact or sample")
      ->check(CLI::IsMember({"exact", "sample"}));
  adversary->add_option("--budget", o.budget,
                        "Linear programs (exact) or candidates (sample)");
  adversary->add_option("--seed", o.seed, "Seed for sample mode");
  adversary->add_option("--max-voters", o.max_voters, "Exact-mode voter cap");
  adversary->add_option("--max-alternatives", o.max_alternatives,
                        "Exact-mode alternative cap");
  adversary->add_option("--out", o.out, "Write the witness metric here");

  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("--family", o.family, "Instance family")
      ->required()
      ->check(CLI::IsMember(kFamilies));
  gen->add_option("--k", o.k, "Committee size");
  gen->add_option("--m", o.m, "Number of alternatives");
  gen->add_option("--n", o.n, "Number of voters");
  gen->add_option("--n1", o.n1, "First voter group");
  gen->add_option("--n2", o.n2, "Second voter group");
  gen->add_option("--depth", o.depth, "Continued-fraction depth for group sizes");
  gen->add_option("--seed", o.seed, "Seed for the random family");
  gen->add_option("--out", o.out, "Output directory")->required();

  auto* bench = app.add_subcommand("bench", "Reproduce the bound table");
  bench->add_option("--suite", o.suite, "Suite id (table1-v1)");
  bench->add_option("--seeds", o.seeds, "Random instances per upper bound");
  bench->add_option("--out", o.out, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*order) return cmd_order(o);
    if (*elect) return cmd_elect(o);
    if (*eval) return cmd_eval(o);
    if (*adversary) return cmd_adversary(o);
    if (*gen) return cmd_gen(o);
    if (*bench) return cmd_bench(o);
  } catch (const Error& e) {
    std::cerr << json{{"error", error_name(e.code())}, {"message", e.what()}}
                     .dump()
              << '\n';
    return e.code() == ErrorCode::BudgetExceeded ? kBudget : kDataError;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "IOError"}, {"message", e.what()}}.dump()
              << '\n';
    return kDataError;
  }
  return kUsage;
}
