#pragma once

#include <cstddef>
#include <cstdint>

#include "capmatch/core.hpp"

namespace capmatch::gen {

struct Config {
  std::size_t ns = 5;
  std::size_t nt = 5;
  std::uint64_t seed = 1;
  Coord coord_max = 100;
  std::int64_t cap_max = 3;
  bool feasible_only = false;
};

// Coordinates uniform in [0, coord_max], capacities uniform in [1, cap_max].
// With feasible_only, redraws capacities until |S| <= sum(beta) and
// |T| <= sum(alpha); throws std::invalid_argument when that is impossible.
RawInstance random_instance(const Config& cfg);

// Benchmark family: n/2 points per side, coordinates in [0, 10n],
// capacities in [1, k]. Always feasible.
RawInstance bench_instance(std::size_t n, std::int64_t k, std::uint64_t seed);

}  // namespace capmatch::gen
