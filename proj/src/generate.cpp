#include "capmatch/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace capmatch::gen {

namespace {

std::vector<std::int64_t> draw(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

std::int64_t sum(const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace

RawInstance random_instance(const Config& cfg) {
  if (cfg.ns == 0 || cfg.nt == 0) throw std::invalid_argument("both sides need at least one point");
  if (cfg.cap_max < 1) throw std::invalid_argument("cap-max must be at least 1");
  if (cfg.coord_max < 0) throw std::invalid_argument("coord-max must be non-negative");
  const auto ns = static_cast<std::int64_t>(cfg.ns), nt = static_cast<std::int64_t>(cfg.nt);
  if (cfg.feasible_only && (ns > nt * cfg.cap_max || nt > ns * cfg.cap_max)) {
    throw std::invalid_argument("no feasible instance exists for these sizes and cap-max");
  }
  std::mt19937_64 rng(cfg.seed);
  RawInstance raw;
  raw.s = draw(rng, cfg.ns, 0, cfg.coord_max);
  raw.t = draw(rng, cfg.nt, 0, cfg.coord_max);
  do {
    raw.alpha = draw(rng, cfg.ns, 1, cfg.cap_max);
    raw.beta = draw(rng, cfg.nt, 1, cfg.cap_max);
  } while (cfg.feasible_only && (ns > sum(raw.beta) || nt > sum(raw.alpha)));
  return raw;
}

RawInstance bench_instance(std::size_t n, std::int64_t k, std::uint64_t seed) {
  Config cfg;
  cfg.ns = std::max<std::size_t>(1, n / 2);
  cfg.nt = std::max<std::size_t>(1, n - n / 2);
  cfg.seed = seed;
  cfg.coord_max = static_cast<Coord>(10 * n);
  cfg.cap_max = k;
  cfg.feasible_only = true;
  return random_instance(cfg);
}

}  // namespace capmatch::gen
