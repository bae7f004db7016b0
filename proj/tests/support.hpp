#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "capmatch/core.hpp"
#include "capmatch/generate.hpp"

namespace testing {

using capmatch::Instance;
using capmatch::RawInstance;

inline RawInstance raw(std::vector<std::int64_t> s, std::vector<std::int64_t> t, std::vector<std::int64_t> alpha,
                       std::vector<std::int64_t> beta) {
  return RawInstance{std::move(s), std::move(t), std::move(alpha), std::move(beta)};
}

inline Instance make(std::vector<std::int64_t> s, std::vector<std::int64_t> t, std::vector<std::int64_t> alpha,
                     std::vector<std::int64_t> beta) {
  return capmatch::validate_instance(raw(std::move(s), std::move(t), std::move(alpha), std::move(beta)));
}

// Seeded random instance with sides in [1, max_side]; retries sizes that can
// never be feasible when feasible_only is set.
inline RawInstance random_raw(std::uint64_t seed, std::size_t max_side, capmatch::Coord coord_max,
                              std::int64_t cap_max, bool feasible_only = true) {
  std::mt19937_64 rng(seed);
  capmatch::gen::Config cfg;
  for (;;) {
    cfg.ns = 1 + rng() % max_side;
    cfg.nt = 1 + rng() % max_side;
    const auto ns = static_cast<std::int64_t>(cfg.ns), nt = static_cast<std::int64_t>(cfg.nt);
    if (!feasible_only || (ns <= nt * cap_max && nt <= ns * cap_max)) break;
  }
  cfg.seed = seed;
  cfg.coord_max = coord_max;
  cfg.cap_max = cap_max;
  cfg.feasible_only = feasible_only;
  return capmatch::gen::random_instance(cfg);
}

inline std::int64_t pair_sum(const Instance& inst, const capmatch::Matching& m) {
  std::int64_t total = 0;
  for (const auto& [i, j] : m.pairs) {
    const auto d = inst.coords(capmatch::Side::S)[i] - inst.coords(capmatch::Side::T)[j];
    total += d < 0 ? -d : d;
  }
  return total;
}

}  // namespace testing
