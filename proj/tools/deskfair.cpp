// deskfair command-line driver.
//
// Exit codes: 0 ok, 1 input error, 2 infeasible, 3 solver failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "deskfair/error.hpp"
#include "deskfair/exact.hpp"
#include "deskfair/generators.hpp"
#include "deskfair/io.hpp"
#include "deskfair/lp.hpp"
#include "deskfair/metrics.hpp"
#include "deskfair/policies.hpp"

using namespace deskfair;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitSolver = 3;

const std::vector<std::string> kAllPolicies = {"conventional", "roulette",         "group-lp",
                                               "group-exact",  "individual-exact", "ideal"};

constexpr std::size_t kRouletteExpectationBudget = 200'000;

struct Options {
  std::string input;
  std::string output;
  std::string csv;
  std::string lp_dump;
  std::vector<std::string> policies;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> limit;
  std::string family = "random";
  std::size_t n = 4;
  std::size_t m = 8;
  double density = 0.5;
  std::size_t budget = 1;
  std::string name = "cvpr26";
  std::size_t count = 200;
};

ExactOptions exact_options() {
  ExactOptions opts;
  if (const char* env = std::getenv("DESKFAIR_NODE_LIMIT")) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(env, &pos);
      if (pos != std::string(env).size() || v <= 0) throw std::invalid_argument(env);
      opts.node_limit = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParameter, std::string("DESKFAIR_NODE_LIMIT must be a positive integer, got '") +
                                               env + "'");
    }
  }
  return opts;
}

Instance load(const Options& o) {
  if (o.input.empty()) throw Error(ErrorCode::BadParameter, "--input is required");
  Instance inst = read_instance(o.input);
  return o.limit ? inst.with_cap(*o.limit) : inst;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
  } else {
    write_text_file(o.output, text);
  }
}

void emit(const Options& o, const Json& doc) { emit(o, doc.dump(2) + "\n"); }

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void check_policy(const std::string& name) {
  for (const auto& p : kAllPolicies)
    if (p == name) return;
  throw Error(ErrorCode::UnknownPolicy, "unknown policy '" + name + "'");
}

// LP relaxation first; exact search only when the vertex is fractional.
SolveResult solve_group_lp(const Instance& inst, const ExactOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const LpSolution sol = solve_lp(build_group_relaxation(inst));
  if (sol.status == LpStatus::Optimal && integrality_check(sol)) {
    std::vector<bool> bits(sol.values.size());
    for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = sol.values[j] > 0.5;
    KeepVector keep = KeepVector::binary(bits);
    SolveResult result{"group-lp", keep, evaluate(inst, keep), {}};
    result.diagnostics.method = "lp-integral";
    result.diagnostics.node_count = 1;
    result.diagnostics.lp_calls = 1;
    result.diagnostics.lp_iterations = sol.iteration_count;
    result.diagnostics.root_lp_objective = sol.objective_value;
    result.diagnostics.root_lp_integral = true;
    result.diagnostics.wall_time_ms = ms_since(start);
    return result;
  }
  SolveResult result = solve_group_exact(inst, opts);
  result.policy = "group-lp";
  result.diagnostics.fallback = true;
  result.diagnostics.lp_calls += 1;
  result.diagnostics.lp_iterations += sol.iteration_count;
  result.diagnostics.wall_time_ms = ms_since(start);
  return result;
}

std::optional<SolveResult> solve_ideal(const Instance& inst, const ExactOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<KeepVector> keep;
  std::string method;
  if (inst.num_authors() <= 2) {
    keep = ideal_construct_small(inst);
    method = "constructive (two-author case analysis)";
  } else {
    keep = solve_ideal_feasibility(inst, opts);
    method = "ideal-feasibility";
  }
  if (!keep) return std::nullopt;
  SolveResult result{"ideal", *keep, evaluate(inst, *keep), {}};
  result.diagnostics.method = method;
  result.diagnostics.wall_time_ms = ms_since(start);
  return result;
}

Json roulette_note(const Instance& inst) {
  try {
    const auto e = roulette_expectation(inst, kRouletteExpectationBudget);
    return Json{{"expected_zeta_ind", to_fraction_string(e.expected_zeta_ind)},
                {"expected_zeta_group", to_fraction_string(e.expected_zeta_group)},
                {"outcomes", e.outcomes}};
  } catch (const Error& err) {
    if (err.code() != ErrorCode::OutcomeSpaceTooLarge) throw;
    return Json();
  }
}

int cmd_solve(const Options& o) {
  if (o.policies.size() != 1) throw Error(ErrorCode::BadParameter, "solve takes exactly one --policy");
  const std::string& policy = o.policies.front();
  check_policy(policy);
  const Instance inst = load(o);
  const ExactOptions opts = exact_options();

  if (!o.lp_dump.empty()) {
    std::ofstream dump(o.lp_dump);
    if (!dump) throw Error(ErrorCode::IoError, "cannot write '" + o.lp_dump + "'");
    write_mps(build_group_relaxation(inst), dump);
  }

  if (policy == "conventional" || policy == "roulette") {
    const PolicyOutcome out = policy == "conventional" ? conventional_desk_reject(inst) : roulette_reject(inst, o.seed);
    Json doc = policy_outcome_to_json(inst, out);
    if (policy == "roulette") {
      doc["seed"] = o.seed;
      if (Json e = roulette_note(inst); !e.is_null()) doc["expectation"] = e;
    }
    emit(o, doc);
    return kExitOk;
  }
  if (policy == "ideal") {
    const auto result = solve_ideal(inst, opts);
    if (!result) {
      emit(o, Json{{"policy", "ideal"}, {"status", "infeasible"}});
      std::cerr << "Infeasible: no ideal desk-rejection exists for this instance\n";
      return kExitInfeasible;
    }
    emit(o, solve_result_to_json(inst, *result));
    return kExitOk;
  }
  const SolveResult result = policy == "group-lp"      ? solve_group_lp(inst, opts)
                             : policy == "group-exact" ? solve_group_exact(inst, opts)
                                                       : solve_individual_exact(inst, opts);
  emit(o, solve_result_to_json(inst, result));
  return kExitOk;
}

int cmd_compare(const Options& o) {
  const std::vector<std::string> policies = o.policies.empty() ? kAllPolicies : o.policies;
  for (const auto& p : policies) check_policy(p);
  const Instance inst = load(o);
  const ExactOptions opts = exact_options();

  ComparisonTable table;
  for (const auto& policy : policies) {
    ComparisonRow row;
    row.policy = policy;
    row.status = "ok";
    const auto start = std::chrono::steady_clock::now();
    if (policy == "conventional" || policy == "roulette") {
      const PolicyOutcome out =
          policy == "conventional" ? conventional_desk_reject(inst) : roulette_reject(inst, o.seed);
      row.runtime_ms = ms_since(start);
      row.keep = out.keep;
      row.report = out.report;
      if (policy == "roulette") {
        row.note = "seed=" + std::to_string(o.seed);
        if (Json e = roulette_note(inst); !e.is_null()) {
          row.note += " E[zeta_ind]=" + e["expected_zeta_ind"].get<std::string>() +
                      " E[zeta_group]=" + e["expected_zeta_group"].get<std::string>();
        }
      }
    } else {
      std::optional<SolveResult> result;
      if (policy == "ideal") {
        result = solve_ideal(inst, opts);
      } else if (policy == "group-lp") {
        result = solve_group_lp(inst, opts);
      } else if (policy == "group-exact") {
        result = solve_group_exact(inst, opts);
      } else {
        result = solve_individual_exact(inst, opts);
      }
      row.runtime_ms = ms_since(start);
      if (!result) {
        row.status = "infeasible";
        row.note = "no ideal desk-rejection exists";
      } else {
        row.keep = result->keep;
        row.report = result->report;
        row.node_count = result->diagnostics.node_count;
        row.lp_calls = result->diagnostics.lp_calls;
        row.note = result->diagnostics.method;
        if (result->diagnostics.fallback) row.note += " (fallback from fractional LP)";
      }
    }
    table.rows.push_back(std::move(row));
  }
  if (!o.csv.empty()) write_text_file(o.csv, comparison_to_csv(inst, table));
  emit(o, comparison_to_json(inst, table));
  return kExitOk;
}

int cmd_check_ideal(const Options& o) {
  const Instance inst = load(o);
  const auto result = solve_ideal(inst, exact_options());
  if (!result) {
    std::cout << "INFEASIBLE\n";
    return kExitInfeasible;
  }
  Json witness = Json::array();
  for (auto j : result->keep.kept_indices()) witness.push_back(inst.paper(j).id);
  Json rejected = Json::array();
  for (auto j : result->keep.rejected_indices()) rejected.push_back(inst.paper(j).id);
  emit(o, Json{{"status", "ideal"}, {"method", result->diagnostics.method}, {"kept", witness}, {"rejected", rejected}});
  return kExitOk;
}

GenSpec gen_spec(const Options& o) {
  GenSpec spec;
  spec.family = parse_family(o.family);
  spec.n = o.n;
  spec.m = o.m;
  spec.x = o.limit.value_or(spec.x);
  spec.density = o.density;
  spec.seed = o.seed;
  spec.case_name = o.name;
  spec.budget = o.budget;
  spec.validate();
  return spec;
}

int cmd_audit(const Options& o, bool sweep_requested) {
  const ExactOptions opts = exact_options();
  if (!sweep_requested) {
    const Instance inst = load(o);
    emit(o, audit_to_json(integrality_audit(inst, opts)));
    return kExitOk;
  }
  GenSpec spec = gen_spec(o);
  Json runs = Json::array();
  std::size_t counterexamples = 0;
  double max_gap = 0.0;
  for (std::size_t k = 0; k < o.count; ++k) {
    spec.seed = o.seed + k;
    const Instance inst = generate(spec);
    const IntegralityAudit audit = integrality_audit(inst, opts);
    if (audit.counterexample) ++counterexamples;
    max_gap = std::max(max_gap, audit.gap);
    Json entry = audit_to_json(audit);
    entry.erase("lp_solution");
    runs.push_back(Json{{"seed", spec.seed}, {"audit", entry}});
  }
  const double rate = o.count ? static_cast<double>(counterexamples) / static_cast<double>(o.count) : 0.0;
  emit(o, Json{{"family", std::string(to_string(spec.family))},
               {"instances", o.count},
               {"counterexamples", counterexamples},
               {"counterexample_rate", rate},
               {"max_gap", max_gap},
               {"runs", runs}});
  return kExitOk;
}

int cmd_gen(const Options& o) {
  const GenSpec spec = gen_spec(o);
  emit(o, instance_to_json(generate(spec)));
  return kExitOk;
}

int cmd_reduce(const Options& o) {
  if (o.input.empty()) throw Error(ErrorCode::BadParameter, "--input is required");
  Json doc;
  try {
    doc = Json::parse(read_text_file(o.input));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  const BudgetedInstance reduced = reduce_set_cover(parse_set_cover(doc));
  emit(o, Json{{"budget", reduced.budget}, {"instance", instance_to_json(reduced.instance)}});
  return kExitOk;
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SolverStalled:
    case ErrorCode::NumericalBreakdown:
    case ErrorCode::NotOptimal:
    case ErrorCode::NodeLimitExceeded:
    case ErrorCode::OutcomeSpaceTooLarge:
      return false;
    default:
      return true;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deskfair: fairness-aware desk-rejection under submission limits"};
  app.require_subcommand(1);
  Options o;

  const auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "Instance JSON file");
    sub->add_option("--output,-o", o.output, "Output file (default stdout)");
    sub->add_option("--limit", o.limit, "Override the submission cap x");
    sub->add_option("--seed", o.seed, "RNG seed (default 0)");
  };

  auto* solve = app.add_subcommand("solve", "Run one policy and write a report");
  add_io(solve);
  solve->add_option("--policy,-p", o.policies, "conventional|roulette|group-lp|group-exact|individual-exact|ideal")
      ->required()
      ->expected(1);
  solve->add_option("--lp-dump", o.lp_dump, "Write the group LP relaxation in free MPS format");

  auto* compare = app.add_subcommand("compare", "Run several policies on one instance");
  add_io(compare);
  compare->add_option("--policy,-p", o.policies, "Policies to compare (repeatable; default all)")->delimiter(',');
  compare->add_option("--csv", o.csv, "Also write the table as CSV");

  auto* check = app.add_subcommand("check-ideal", "Decide whether an ideal desk-rejection exists");
  add_io(check);

  auto* audit = app.add_subcommand("audit-integrality", "Compare the LP relaxation with the integer optimum");
  add_io(audit);
  const auto add_gen_flags = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "triangle|leave_one_out|case_study|random|from_set_cover");
    sub->add_option("--n", o.n, "Authors (random) or universe size (from_set_cover)");
    sub->add_option("--m", o.m, "Papers (random) or number of sets (from_set_cover)");
    sub->add_option("--density", o.density, "Incidence density in (0, 1]");
    sub->add_option("--budget", o.budget, "Set-cover budget K");
    sub->add_option("--name", o.name, "Case study name");
  };
  add_gen_flags(audit);
  auto* sweep_flag = audit->add_option("--count", o.count, "Sweep size; enables sweep mode with --family");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--output,-o", o.output, "Output file (default stdout)");
  gen->add_option("--limit,-x", o.limit, "Submission cap x");
  gen->add_option("--seed", o.seed, "RNG seed (default 0)");
  add_gen_flags(gen);

  auto* reduce = app.add_subcommand("reduce-setcover", "Reduce a set-cover instance to a budgeted instance");
  reduce->add_option("--input,-i", o.input, "Set-cover JSON file")->required();
  reduce->add_option("--output,-o", o.output, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(o);
    if (compare->parsed()) return cmd_compare(o);
    if (check->parsed()) return cmd_check_ideal(o);
    if (audit->parsed()) return cmd_audit(o, sweep_flag->count() > 0 || o.input.empty());
    if (gen->parsed()) return cmd_gen(o);
    if (reduce->parsed()) return cmd_reduce(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kExitInput : kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
