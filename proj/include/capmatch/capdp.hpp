#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "capmatch/core.hpp"

namespace capmatch::capdp {

class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class MemoryLimitExceeded : public std::runtime_error {
 public:
  MemoryLimitExceeded(std::size_t needed, std::size_t limit);
  std::size_t needed_bytes() const noexcept { return needed_; }
  std::size_t limit_bytes() const noexcept { return limit_; }

 private:
  std::size_t needed_, limit_;
};

// C(q, k): minimum cost of a capacitated matching of every point up to and
// including q (merged order) in which q has at most k partners. One
// contiguous row of Cap(q) entries per point; everything starts unreachable.
class CapCostTable {
 public:
  CapCostTable() = default;
  explicit CapCostTable(const Instance& inst);

  std::size_t points() const { return offset_.size() - 1; }
  Capacity cap(std::size_t q) const { return static_cast<Capacity>(offset_[q + 1] - offset_[q]); }

  // k outside [1, Cap(q)] reads as unreachable.
  Cost at(std::size_t q, std::int64_t k) const {
    if (k < 1 || k > cap(q)) return Cost::unreachable();
    return cells_[offset_[q] + static_cast<std::size_t>(k) - 1];
  }
  Cost full(std::size_t q) const { return at(q, cap(q)); }
  std::span<const Cost> row(std::size_t q) const {
    return std::span<const Cost>(cells_).subspan(offset_[q], cap(q));
  }
  std::span<Cost> row(std::size_t q) { return std::span<Cost>(cells_).subspan(offset_[q], cap(q)); }

  // cell = min(cell, c)
  void relax(std::size_t q, std::int64_t k, Cost c) {
    if (k < 1 || k > cap(q)) return;
    Cost& cell = cells_[offset_[q] + static_cast<std::size_t>(k) - 1];
    cell = min(cell, c);
  }

  std::size_t cells() const { return cells_.size(); }

 private:
  std::vector<std::size_t> offset_;  // indexed by merged position
  std::vector<Cost> cells_;
};

// ---------------------------------------------------------------------------
// Exact solver

enum class KernelBackend { Reference, Fast };

struct SolveOptions {
  KernelBackend backend = KernelBackend::Fast;
  int threads = 1;
  // 0 means "use CAPMATCH_MEM_LIMIT_MB or the built-in default".
  std::size_t memory_limit_bytes = 0;
};

std::size_t default_memory_limit_bytes();

// What each point does in the optimal solution, read off the DP by walking
// the stored states backwards.
struct PointDecision {
  std::int32_t absorbed = 0;  // pending edges from the left that end here
  std::int32_t emitted = 0;   // new edges opened toward the right
};

struct FlowTrace {
  Cost cost = Cost::unreachable();
  std::vector<PointDecision> decisions;  // indexed by merged position
};

struct Solution {
  std::int64_t cost = 0;
  Matching matching;
};

// Runs the DP and the backward walk. Empty trace cost when the last state is
// unreachable.
FlowTrace solve_trace(const Instance& inst, const SolveOptions& opts = {});

// Optimal cost only (forward pass, no reconstruction state).
Cost solve_cost(const Instance& inst, const SolveOptions& opts = {});

// nullopt when the instance is infeasible.
std::optional<Solution> solve_capacitated(const Instance& inst, const SolveOptions& opts = {});

// Turns decisions into concrete pairs. Throws InternalInconsistency when the
// decisions do not describe a valid matching of cost trace.cost.
Matching reconstruct_capacitated(const Instance& inst, const FlowTrace& trace);

// The full C(q, k) table, derived from the same forward pass.
CapCostTable prefix_table(const Instance& inst, const SolveOptions& opts = {});

// Upper bound on pending edges across the gap left of merged position g
// (g = 0..n), for edges from `from`-side points on the left.
std::vector<std::size_t> flow_bounds(const Instance& inst, Side from);

// ---------------------------------------------------------------------------
// Building blocks of the block-by-block recurrences

// Greedy one-sided alignment of a point group A against a group B that lies
// entirely to one side of it.
struct GreedyAlignment {
  enum class Orientation { BRightOfA, BLeftOfA };
  Orientation orientation;
  std::size_t saturated = 0;  // k: saturated points of A next to B
  std::int64_t boundary_degree = 0;  // m: degree of the first unsaturated A point next to them
  std::int64_t cost = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (index in A, index in B), 0-based
};

GreedyAlignment greedy_one_sided(std::span<const Coord> a, std::span<const Capacity> alpha,
                                 std::span<const Coord> b, std::span<const Capacity> beta);

// A block pair as seen by the recurrences: left group a_1..a_s with prefix
// costs, right group b_1..b_t. The right group may be a merged set (Case B).
struct PairView {
  std::vector<Coord> a, b;
  std::vector<Capacity> alpha, beta;
  bool first_pair = false;  // w == 0: nothing lies left of a_1
  Cost before = Cost::unreachable();  // C(a_0, Cap(a_0)); 0 for the first pair
  std::vector<std::vector<Cost>> prefix;  // prefix[h-1][k-1] = C(a_h, k)

  std::size_t s() const { return a.size(); }
  std::size_t t() const { return b.size(); }
  // C(a_h, k); h = 0 means a_0 at full capacity.
  Cost c(std::size_t h, std::int64_t k) const;
  Cost c_full(std::size_t h) const;
  BlockOffsets offsets() const { return BlockOffsets(a, alpha, b, beta); }
};

// Literal variants of three recurrences, kept so regression tests can show
// where they diverge. All false is the corrected form.
struct Readings {
  bool printed_y_bounds = false;       // sum_{j=s}^{s-i+1} e_j taken as an empty sum
  bool printed_sprime_count = false;   // beta_l f_l inside the count comparison
  bool printed_sprime_step = false;    // S'_{h-1} built from S'_h + e_h instead of e_{h-1}
};

// Results per usable capacity k = 1..beta_i (index k-1).
std::vector<Cost> case_a0(const PairView& v, std::size_t i);
Cost case_a1(const PairView& v);
Cost case_a2(const PairView& v, std::size_t i);
std::vector<Cost> case_a3(const PairView& v);
std::vector<Cost> case_a4(const PairView& v, std::size_t i, const Readings& r = {});

// Scratch values of the general block-pair case for one target b_i.
struct CaseA4Workspace {
  std::vector<Cost> s_prime;             // S'_h, h = 1..s (index h-1)
  Cost y = Cost::unreachable();          // Y(b_i)
  Cost z = Cost::unreachable();          // Z(b_i)
  std::vector<Cost> r;                   // R_ih, h = 1..s (index h-1)
  std::vector<Cost> x;                   // X(b_i, k), k = 1..beta_i
  std::size_t boundary_j = 0;            // smallest a_j absorbable (per k = beta_i)
};
CaseA4Workspace case_a4_workspace(const PairView& v, std::size_t i, const Readings& r = {});

// Dispatches the right Case A variant for (v, i) and returns per-k values.
std::vector<Cost> case_a(const PairView& v, std::size_t i, const Readings& r = {});

// Table-driven recurrences over the whole instance.
struct CasesResult {
  Cost cost = Cost::unreachable();
  CapCostTable table;
};

PairView make_pair_view(const Instance& inst, const BlockPartition& part, const CapCostTable& table,
                        std::size_t w);

// Forward search for spare capacity when a suffix of A_w cannot be absorbed by
// A_{w+1}; relaxes entries of later blocks. Returns the number of chains run.
std::size_t primary_step(const Instance& inst, const BlockPartition& part, std::size_t w,
                         CapCostTable& table, const Readings& r = {});

// Backward search for b_i when i exceeds the capacity of A_w.
Cost case_b(const Instance& inst, const BlockPartition& part, std::size_t w, const CapCostTable& table,
            std::size_t i, const Readings& r = {});

CasesResult solve_capacitated_cases(const Instance& inst, const Readings& r = {});

}  // namespace capmatch::capdp
