#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "capmatch/core.hpp"

// Minimum-cost many-to-many matching on the line without capacity limits,
// one pass over the block partition. Capacities of the instance are ignored.
namespace capmatch::baseline {

// Which formula produced C(b_i), plus the split index needed to rebuild it.
struct Choice {
  enum class Kind { None, Case0, Case1, Case2, Case3, X, Y, Z, Extend };
  Kind kind = Kind::None;
  std::size_t split = 0;    // Case3/X: first a_h sent to b_1; Z: i' whose Y(b_i') is extended
  bool from_prev = false;   // Case1/Case2: C(a_0) won over C(a_1)
};

// C(q) and the winning choice for every merged position.
struct CostTable {
  std::vector<Cost> c;
  std::vector<Choice> choice;
};

// Scratch values of the general case for one block pair, all 1-based in the
// formulas and stored at index - 1.
struct Case4Workspace {
  std::vector<Cost> s_val;           // S_h = sum_{j=h..s} e_j + C(a_{h-1})
  std::vector<Cost> m_val;           // M_h = min(S_1..S_h)
  std::vector<std::size_t> m_arg;    // smallest h attaining M_h
  std::vector<Cost> x, y, z;         // X(b_i), Y(b_i), Z(b_i)
  std::vector<std::size_t> z_from;   // i' with Z(b_i) = Y(b_i') extended by b_{i'+1..i}
  std::vector<Cost> c;               // C(b_i)
  std::vector<Choice> choice;
};

// `prefix` holds C(a_0), C(a_1), ..., C(a_s).
Cost case0(const BlockOffsets& off, std::size_t i);
Cost case1(const BlockOffsets& off, Cost c_a0, Cost c_a1);
Cost case2(const BlockOffsets& off, std::size_t i, Cost c_a0, Cost c_a1);
Cost case3(const BlockOffsets& off, std::span<const Cost> prefix, std::size_t* arg = nullptr);
Case4Workspace case4(const BlockOffsets& off, std::span<const Cost> prefix);

CostTable cost_table(const Instance& inst);

struct Result {
  std::int64_t cost = 0;
  Matching matching;
};

Result solve_unlimited(const Instance& inst);

// Rebuilds pairs from the stored choices. Throws std::logic_error when the
// choices do not form a valid cover.
Matching reconstruct(const Instance& inst, const CostTable& table);

}  // namespace capmatch::baseline
