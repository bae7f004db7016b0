// capmatch: solve, generate, verify and benchmark line matching instances.
//
// Exit codes: 0 ok, 1 input error, 2 infeasible, 3 verification failure.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "capmatch/baseline.hpp"
#include "capmatch/capdp.hpp"
#include "capmatch/generate.hpp"
#include "capmatch/json_io.hpp"
#include "capmatch/oracle.hpp"

namespace {

using nlohmann::json;
using namespace capmatch;

enum Exit { kOk = 0, kInputError = 1, kInfeasible = 2, kVerifyFailed = 3 };

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string algo = "capdp";
  bool ignore_caps = false;
  std::size_t mem_limit_mb = 0;
  int threads = 1;

  std::string matching;
  bool optimal = false;

  gen::Config gen;

  std::vector<std::size_t> sizes{5000, 10000};
  std::int64_t k = 4;
  std::vector<std::int64_t> k_sweep;
  std::size_t sweep_n = 5000;
  int reps = 3;
  std::vector<std::string> algos{"capdp"};
  std::uint64_t bench_seed = 20240601;
};

capdp::SolveOptions solve_options(const Options& o) {
  capdp::SolveOptions so;
  so.threads = std::max(1, o.threads);
  so.memory_limit_bytes = o.mem_limit_mb << 20;
  return so;
}

json read_doc(const std::string& path) {
  if (path == "-") {
    try {
      return json::parse(std::cin);
    } catch (const json::parse_error& e) {
      throw io::InputError(std::string("stdin: ") + e.what());
    }
  }
  return io::read_json_file(path);
}

void emit(const Options& o, const std::string& text) {
  if (o.output == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw io::InputError("cannot write " + o.output);
  out << text << '\n';
}

bool caps_unlimited(const RawInstance& raw) {
  const auto ns = static_cast<std::int64_t>(raw.s.size()), nt = static_cast<std::int64_t>(raw.t.size());
  return std::all_of(raw.alpha.begin(), raw.alpha.end(), [&](std::int64_t a) { return a >= nt; }) &&
         std::all_of(raw.beta.begin(), raw.beta.end(), [&](std::int64_t b) { return b >= ns; });
}

int cmd_solve(const Options& o) {
  const RawInstance raw = io::parse_instance(read_doc(o.input));
  const Instance inst = validate_instance(raw);

  if (o.algo == "baseline") {
    if (!o.ignore_caps && !caps_unlimited(raw)) {
      std::cerr << "baseline solves the unlimited problem; capacities below the opposite set size "
                   "need --ignore-caps\n";
      return kInputError;
    }
    const auto res = baseline::solve_unlimited(inst);
    emit(o, io::matching_to_json(inst, res.matching).dump());
    return kOk;
  }
  if (o.algo == "cases") {
    const auto res = capdp::solve_capacitated_cases(inst);
    if (!res.cost.reachable()) {
      if (feasible(inst)) std::cerr << "case recurrences produced no value for a feasible instance\n";
      emit(o, io::infeasible_json().dump());
      return kInfeasible;
    }
    emit(o, json{{"cost", res.cost.value()}, {"feasible", true}}.dump());
    return kOk;
  }

  std::optional<Matching> m;
  if (o.algo == "capdp") {
    if (auto sol = capdp::solve_capacitated(inst, solve_options(o))) m = sol->matching;
  } else if (o.algo == "oracle") {
    if (auto sol = oracle::solve_flow(inst)) m = sol->matching;
  } else {
    std::cerr << "unknown algorithm " << o.algo << '\n';
    return kInputError;
  }
  if (!m) {
    emit(o, io::infeasible_json().dump());
    return kInfeasible;
  }
  emit(o, io::matching_to_json(inst, *m).dump());
  return kOk;
}

int cmd_gen(const Options& o) {
  emit(o, io::instance_to_json(gen::random_instance(o.gen)).dump());
  return kOk;
}

int cmd_verify(const Options& o) {
  const Instance inst = validate_instance(io::parse_instance(read_doc(o.input)));
  const Matching m = io::read_matching_file(inst, o.matching);
  const VerifyReport rep = verify_matching(inst, m);

  json out{{"ok", rep.ok}, {"recomputed_cost", rep.recomputed_cost}, {"reported_cost", m.cost}};
  json violations = json::array();
  for (const auto& v : rep.violations) violations.push_back(v.message);
  bool ok = rep.ok;
  if (o.optimal) {
    const auto best = oracle::solve_flow(inst);
    if (!best) {
      violations.push_back("instance is infeasible");
      ok = false;
    } else {
      out["optimal_cost"] = best->cost;
      if (rep.recomputed_cost != best->cost) {
        std::ostringstream os;
        os << "cost " << rep.recomputed_cost << " is not optimal (" << best->cost << ")";
        violations.push_back(os.str());
        ok = false;
      }
    }
  }
  out["ok"] = ok;
  out["violations"] = violations;
  emit(o, out.dump());
  if (!ok) {
    for (const auto& v : violations) std::cerr << "verify: " << v.get<std::string>() << '\n';
  }
  return ok ? kOk : kVerifyFailed;
}

std::int64_t time_once(const std::string& algo, const Instance& inst, const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::int64_t cost = -1;
  if (algo == "capdp") {
    cost = capdp::solve_capacitated(inst, solve_options(o))->cost;
  } else if (algo == "capdp-cost") {
    cost = capdp::solve_cost(inst, solve_options(o)).value();
  } else if (algo == "baseline") {
    cost = baseline::solve_unlimited(inst).cost;
  } else if (algo == "cases") {
    const Cost c = capdp::solve_capacitated_cases(inst).cost;
    cost = c.reachable() ? c.value() : -1;
  } else if (algo == "oracle") {
    cost = oracle::solve_flow(inst, inst.total())->cost;
  } else {
    throw io::InputError("unknown bench algorithm " + algo);
  }
  const auto t1 = std::chrono::steady_clock::now();
  if (cost < -1) std::cerr << "unexpected cost\n";
  return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

int cmd_bench(const Options& o) {
  std::ostringstream csv;
  csv << "n,k,algo,median_ns\n";
  auto row = [&](std::size_t n, std::int64_t k) {
    const Instance inst = validate_instance(gen::bench_instance(n, k, o.bench_seed));
    for (const auto& algo : o.algos) {
      std::vector<std::int64_t> ns;
      for (int r = 0; r < std::max(1, o.reps); ++r) ns.push_back(time_once(algo, inst, o));
      std::sort(ns.begin(), ns.end());
      csv << n << ',' << k << ',' << algo << ',' << ns[ns.size() / 2] << '\n';
    }
  };
  if (o.k_sweep.empty()) {
    for (std::size_t n : o.sizes) row(n, o.k);
  } else {
    for (std::int64_t k : o.k_sweep) row(o.sweep_n, k);
  }
  std::string text = csv.str();
  text.pop_back();
  emit(o, text);
  return kOk;
}

int cmd_partition(const Options& o) {
  const Instance inst = validate_instance(io::parse_instance(read_doc(o.input)));
  json blocks = json::array();
  for (const Block& b : partition_blocks(inst).blocks) {
    blocks.push_back({{"side", side_name(b.side)}, {"coords", b.coords}});
  }
  emit(o, json{{"blocks", blocks}}.dump());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-cost capacitated many-to-many matching on the line"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Output file (default stdout)");
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--mem-limit-mb", o.mem_limit_mb, "DP memory ceiling in MiB (default: CAPMATCH_MEM_LIMIT_MB or 2048)");
    sub->add_option("--threads", o.threads, "OpenMP threads for the window-min kernels")->check(CLI::PositiveNumber);
  };

  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("input", o.input, "Instance JSON (default stdin)");
  solve->add_option("--algo", o.algo, "capdp | baseline | oracle | cases")
      ->check(CLI::IsMember({"capdp", "baseline", "oracle", "cases"}));
  solve->add_flag("--ignore-caps", o.ignore_caps, "Let baseline run on capacitated input");
  add_common(solve);
  add_solver(solve);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--ns", o.gen.ns, "Number of S points")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--nt", o.gen.nt, "Number of T points")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", o.gen.seed, "Random seed");
  gen_cmd->add_option("--coord-max", o.gen.coord_max, "Largest coordinate")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--cap-max", o.gen.cap_max, "Largest capacity")->check(CLI::PositiveNumber);
  gen_cmd->add_flag("--feasible-only", o.gen.feasible_only, "Redraw capacities until feasible");
  add_common(gen_cmd);

  auto* verify = app.add_subcommand("verify", "Check a matching against an instance");
  verify->add_option("instance", o.input, "Instance JSON")->required();
  verify->add_option("matching", o.matching, "Matching JSON")->required();
  verify->add_flag("--optimal", o.optimal, "Also compare the cost with the flow oracle");
  add_common(verify);

  auto* bench = app.add_subcommand("bench", "Time solvers on the seeded benchmark family (CSV)");
  bench->add_option("--sizes", o.sizes, "Instance sizes n")->delimiter(',');
  bench->add_option("--k", o.k, "Capacity bound")->check(CLI::PositiveNumber);
  bench->add_option("--k-sweep", o.k_sweep, "Capacity bounds to sweep at fixed --n")->delimiter(',');
  bench->add_option("--n", o.sweep_n, "Size for --k-sweep");
  bench->add_option("--reps", o.reps, "Repetitions per row")->check(CLI::PositiveNumber);
  bench->add_option("--algos", o.algos, "capdp, capdp-cost, baseline, cases, oracle")->delimiter(',');
  bench->add_option("--seed", o.bench_seed, "Family seed");
  add_common(bench);
  add_solver(bench);

  auto* partition = app.add_subcommand("partition", "Print the block partition of an instance");
  partition->add_option("input", o.input, "Instance JSON (default stdin)");
  add_common(partition);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*solve) return cmd_solve(o);
    if (*gen_cmd) return cmd_gen(o);
    if (*verify) return cmd_verify(o);
    if (*bench) return cmd_bench(o);
    if (*partition) return cmd_partition(o);
  } catch (const ValidationError& e) {
    std::cerr << "invalid instance (" << to_string(e.code()) << "): " << e.what() << '\n';
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const capdp::MemoryLimitExceeded& e) {
    std::cerr << e.what() << '\n';
  } catch (const oracle::TooLarge& e) {
    std::cerr << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
  }
  return kInputError;
}
