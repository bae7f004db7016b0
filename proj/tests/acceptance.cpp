// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "capmatch/baseline.hpp"
#include "capmatch/capdp.hpp"
#include "capmatch/checks.hpp"
#include "capmatch/generate.hpp"
#include "capmatch/oracle.hpp"
#include "support.hpp"

using namespace capmatch;

namespace {

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

struct Witness {
  long checked = 0;
  long bad = 0;
  std::string first;

  void check(const Instance& inst, const Matching& m, std::int64_t reported, const char* who) {
    ++checked;
    const VerifyReport rep = verify_matching(inst, m);
    if (rep.ok && rep.recomputed_cost == reported && m.cost == reported) return;
    if (bad++ == 0) first = who;
  }
};

struct Structure {
  long matchings = 0;
  long violations = 0;

  void add(std::vector<std::string> v) {
    ++matchings;
    violations += static_cast<long>(v.size());
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double median_solve_seconds(std::size_t n, std::int64_t k, int reps) {
  const Instance inst = validate_instance(gen::bench_instance(n, k, 20240601));
  std::vector<double> t;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto sol = capdp::solve_capacitated(inst);
    t.push_back(seconds_since(t0));
    if (!sol) return -1;
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

}  // namespace

int main() {
  Witness witness;
  Structure structure;

  // 1. Capacitated solver against the flow oracle and exhaustive search.
  {
    const auto t0 = std::chrono::steady_clock::now();
    long total = 0, agree = 0, brute_total = 0, brute_agree = 0, cases_agree = 0;
    for (std::uint64_t seed = 1; total < 10000; ++seed) {
      const Instance inst = validate_instance(testing::random_raw(seed, 6, 100, 4));
      ++total;
      const auto dp = capdp::solve_capacitated(inst);
      const auto flow = oracle::solve_flow(inst);
      bool ok = dp && flow && dp->cost == flow->cost;
      if (dp) {
        witness.check(inst, dp->matching, dp->cost, "capdp");
        structure.add(checks::spanning_pair_violations(inst, dp->matching));
        structure.add(checks::fork_violations(inst, dp->matching));
        structure.add(checks::split_point_violations(inst, dp->matching));
      }
      if (flow) witness.check(inst, flow->matching, flow->cost, "flow oracle");
      if (inst.size(Side::S) * inst.size(Side::T) <= 20) {
        ++brute_total;
        const auto brute = oracle::brute_force_tiny(inst);
        if (brute) witness.check(inst, brute->matching, brute->cost, "brute force");
        const bool b_ok = brute && dp && brute->cost == dp->cost;
        brute_agree += b_ok;
        ok = ok && b_ok;
      }
      agree += ok;
      if (flow && capdp::solve_capacitated_cases(inst).cost == Cost(flow->cost)) ++cases_agree;
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << agree << "/" << total << " equal to the flow oracle (" << brute_agree << "/" << brute_total
       << " also checked by enumeration), " << fmt("%.1f s", secs);
    report(1, "oracle equivalence, capacitated", agree == total && secs < 120, os.str());
    std::ostringstream info;
    info << cases_agree << "/" << total;
    std::printf("INFO block-case recurrences agree with the oracle on %s of the same instances\n",
                info.str().c_str());
  }

  // 2. Unlimited solver against exhaustive search.
  {
    long total = 0, agree = 0;
    for (std::uint64_t seed = 1; total < 2000; ++seed) {
      const RawInstance r = testing::random_raw(100000 + seed, 7, 100, 1, false);
      const Instance inst = make_unlimited(r.s, r.t);
      ++total;
      const auto res = baseline::solve_unlimited(inst);
      witness.check(inst, res.matching, res.cost, "baseline");
      structure.add(checks::long_pair_violations(inst, res.matching));
      structure.add(checks::split_point_violations(inst, res.matching));
      agree += res.cost == oracle::exhaustive_unlimited(inst);
    }
    report(2, "oracle equivalence, unlimited", agree == total,
           std::to_string(agree) + "/" + std::to_string(total) + " equal to exhaustive search (n <= 14)");
  }

  // 3. Capacities equal to n reduce to the unlimited problem.
  {
    long total = 0, agree = 0;
    for (std::uint64_t seed = 1; total < 2000; ++seed) {
      RawInstance r = testing::random_raw(200000 + seed, 12, 1000, 1, false);
      const auto n = static_cast<std::int64_t>(r.s.size() + r.t.size());
      r.alpha.assign(r.s.size(), n);
      r.beta.assign(r.t.size(), n);
      const Instance inst = validate_instance(r);
      ++total;
      const auto dp = capdp::solve_capacitated(inst);
      const auto base = baseline::solve_unlimited(inst);
      witness.check(inst, base.matching, base.cost, "baseline");
      if (dp) {
        witness.check(inst, dp->matching, dp->cost, "capdp");
        structure.add(checks::spanning_pair_violations(inst, dp->matching));
        structure.add(checks::fork_violations(inst, dp->matching));
        structure.add(checks::split_point_violations(inst, dp->matching));
      }
      agree += dp && dp->cost == base.cost;
    }
    report(3, "reduction consistency", agree == total,
           std::to_string(agree) + "/" + std::to_string(total) + " with capdp cost equal to the unlimited cost");
  }

  report(4, "witness validity", witness.bad == 0,
         std::to_string(witness.checked - witness.bad) + "/" + std::to_string(witness.checked) +
             " matchings verified with matching cost" + (witness.bad ? ", first failure from " + witness.first : ""));

  report(5, "structural properties", structure.violations == 0,
         std::to_string(structure.violations) + " violations over " + std::to_string(structure.matchings) +
             " matching checks");

  // 6. feasible() against enumeration over a whole finite family.
  {
    long total = 0, agree = 0;
    std::vector<std::int64_t> s, t, alpha, beta;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t ns, std::size_t nt) {
      const std::size_t pos = s.size() + t.size();
      if (pos == ns + nt) {
        const Instance inst = testing::make(s, t, alpha, beta);
        ++total;
        agree += feasible(inst) == oracle::has_matching(inst);
        return;
      }
      const bool side_s = pos < ns;
      for (std::int64_t c = 0; c <= 3; ++c) {
        for (std::int64_t cap = 1; cap <= 2; ++cap) {
          (side_s ? s : t).push_back(c);
          (side_s ? alpha : beta).push_back(cap);
          fill(ns, nt);
          (side_s ? s : t).pop_back();
          (side_s ? alpha : beta).pop_back();
        }
      }
    };
    for (std::size_t ns = 1; ns <= 5; ++ns) {
      for (std::size_t nt = 1; ns + nt <= 6; ++nt) fill(ns, nt);
    }
    report(6, "feasibility exactness", agree == total,
           std::to_string(agree) + "/" + std::to_string(total) + " instances agree with enumeration");
  }

  // 7. Quadratic scaling.
  {
    const double t5 = median_solve_seconds(5000, 4, 3);
    const double t10 = median_solve_seconds(10000, 4, 3);
    const double t20 = median_solve_seconds(20000, 4, 1);
    const double ratio = t10 / t5;
    report(7, "quadratic scaling", t5 > 0 && ratio >= 3.0 && ratio <= 6.0 && t20 > 0 && t20 < 10.0,
           fmt("T(5000)=%.3f s, T(10000)=%.3f s, ratio %.2f, T(20000)=%.2f s", t5, t10, ratio, t20));
  }

  // 8. Runtime does not depend on the capacity bound.
  {
    std::ostringstream os;
    double lo = 1e30, hi = 0;
    for (std::int64_t k : {2, 8, 32, 64}) {
      const double t = median_solve_seconds(5000, k, 3);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
      os << "k=" << k << " " << fmt("%.3f s", t) << ", ";
    }
    os << fmt("spread %.2fx", hi / lo);
    report(8, "capacity independence", lo > 0 && hi / lo < 2.0, os.str());
  }

  // 9. Regression instances for the corrected recurrences.
  {
    struct Case {
      const char* what;
      Instance inst;
      capdp::Readings literal;
      bool has_literal;
    };
    capdp::Readings y_lit, count_lit, step_lit;
    y_lit.printed_y_bounds = true;
    count_lit.printed_sprime_count = true;
    step_lit.printed_sprime_step = true;
    const std::vector<Case> cases{
        {"Y summation bounds",
         testing::make({24, 14, 18, 1, 16}, {1, 26, 1, 23}, {3, 3, 2, 2, 2}, {3, 3, 2, 1}), y_lit, true},
        {"S' counting inequality",
         testing::make({4, 21, 7, 17, 17}, {24, 8, 30}, {1, 2, 1, 3, 1}, {3, 3, 3}), count_lit, true},
        {"S' incremental step",
         testing::make({4, 21, 7, 17, 17}, {24, 8, 30}, {1, 2, 1, 3, 1}, {3, 3, 3}), step_lit, true},
        {"backward search combination",
         testing::make({8, 7, 20, 6}, {20, 10, 25, 21}, {3, 1, 2, 2}, {3, 1, 2, 2}), {}, false},
    };
    bool all = true;
    std::ostringstream os;
    for (const Case& c : cases) {
      const auto opt = oracle::solve_flow(c.inst);
      const Cost fixed = capdp::solve_capacitated_cases(c.inst).cost;
      const bool ok = opt && fixed == Cost(opt->cost);
      all = all && ok;
      os << "\n    " << c.what << ": oracle " << (opt ? std::to_string(opt->cost) : "infeasible") << ", corrected "
         << fixed;
      if (c.has_literal) {
        const Cost lit = capdp::solve_capacitated_cases(c.inst, c.literal).cost;
        os << ", literal " << lit << (opt && lit == Cost(opt->cost) ? " (matches)" : " (diverges)");
      } else {
        const BlockPartition part = partition_blocks(c.inst);
        const auto res = capdp::solve_capacitated_cases(c.inst);
        const std::size_t w = part.blocks.size() - 2;
        const Cost back = capdp::case_b(c.inst, part, w, res.table, part.blocks[w + 1].size);
        const bool used = static_cast<std::int64_t>(part.blocks[w + 1].size) >
                          capdp::make_pair_view(c.inst, part, res.table, w).offsets().sum_alpha(1, part.blocks[w].size);
        os << ", literal form is the one implemented; backward search " << (used ? "reached" : "not reached")
           << " for the last point with value " << back
           << (opt && back == Cost(opt->cost) ? " (matches)" : " (diverges)");
        all = all && used;
      }
    }
    report(9, "corrected recurrences", all, os.str());
  }

  return failures == 0 ? 0 : 1;
}
