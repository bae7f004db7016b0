#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "capmatch/core.hpp"

// Independent exact solvers used to certify the line DPs.
namespace capmatch::oracle {

class TooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct Result {
  std::int64_t cost = 0;
  Matching matching;
};

constexpr std::size_t kDefaultFlowLimit = 500;

// Min-cost flow with degree lower bounds (successive shortest paths with
// potentials). nullopt when no capacitated matching exists. Throws TooLarge
// when |S| + |T| exceeds `size_limit`.
std::optional<Result> solve_flow(const Instance& inst, std::size_t size_limit = kDefaultFlowLimit);

// Enumerates pair subsets. Among optimal subsets the lexicographically
// smallest sorted pair list is returned. Needs |S| * |T| <= 20.
std::optional<Result> brute_force_tiny(const Instance& inst);

// Whether any capacitated matching exists, by enumeration (same size limit).
bool has_matching(const Instance& inst);

// Minimum-cost edge cover of the complete bipartite graph (capacities
// ignored), by a covered-set DP over the smaller side. Needs min(|S|, |T|) <= 10.
std::int64_t exhaustive_unlimited(const Instance& inst);

}  // namespace capmatch::oracle
