#pragma once

#include <string>
#include <vector>

#include "capmatch/core.hpp"

// Exchange-argument properties every optimal matching must have. Each check
// returns one message per violation; empty means the matching passes.
namespace capmatch::checks {

// Pair (a, d) spanning an opposite-side point b and a same-side point c with
// a <= b < c <= d, where neither b nor c is saturated.
std::vector<std::string> spanning_pair_violations(const Instance& inst, const Matching& m);

// Point b with partners on both sides, and a same-side point c strictly
// between b and one of those partners that is not saturated.
std::vector<std::string> fork_violations(const Instance& inst, const Matching& m);

// Two points p < p' of one block where p reaches past p' and p' reaches
// below p (no split point exists).
std::vector<std::string> split_point_violations(const Instance& inst, const Matching& m);

// Without capacity limits: any pair (a, d) with such b and c at all.
std::vector<std::string> long_pair_violations(const Instance& inst, const Matching& m);

}  // namespace capmatch::checks
