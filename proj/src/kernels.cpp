#include "capmatch/kernels.hpp"

#include <algorithm>
#include <vector>

#ifdef CAPMATCH_HAVE_OPENMP
#include <omp.h>
#endif

namespace capmatch::kernels {

namespace {

// Below this length the fork/join cost outweighs the loop.
constexpr std::size_t kParallelThreshold = 8192;
// Up to this width a direct scan beats the three block passes.
constexpr std::size_t kDirectWidth = 4;

struct Scratch {
  std::vector<Cost> pre;
  std::vector<Cost> suf;
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

// Block-local prefix and suffix minima over `len` entries of `in` (entries past
// in.size() are unreachable), blocks of `width` aligned at 0.
void block_scans(std::span<const Cost> in, std::size_t len, std::size_t width, std::vector<Cost>& pre,
                 std::vector<Cost>& suf, int threads) {
  pre.resize(len);
  suf.resize(len);
  const std::size_t n_in = in.size();
  const auto blocks = static_cast<std::int64_t>((len + width - 1) / width);
  [[maybe_unused]] const bool par = threads > 1 && len >= kParallelThreshold;
#ifdef CAPMATCH_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (par)
#endif
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    const std::size_t lo = static_cast<std::size_t>(blk) * width;
    const std::size_t hi = std::min(len, lo + width);
    Cost run = Cost::unreachable();
    for (std::size_t j = lo; j < hi; ++j) {
      run = min(run, j < n_in ? in[j] : Cost::unreachable());
      pre[j] = run;
    }
    run = Cost::unreachable();
    for (std::size_t j = hi; j-- > lo;) {
      run = min(run, j < n_in ? in[j] : Cost::unreachable());
      suf[j] = run;
    }
  }
}

}  // namespace

void trailing_min(std::span<const Cost> in, std::size_t width, std::span<Cost> out, int threads) {
  const std::size_t len = out.size();
  if (len == 0) return;
  const std::size_t w = std::max<std::size_t>(width, 1);
  [[maybe_unused]] const bool par = threads > 1 && len >= kParallelThreshold;
  if (w <= kDirectWidth) {
    const auto n_in = static_cast<std::int64_t>(in.size());
#ifdef CAPMATCH_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (par)
#endif
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(len); ++j) {
      Cost best = Cost::unreachable();
      const std::int64_t lo = std::max<std::int64_t>(0, j - static_cast<std::int64_t>(w) + 1);
      for (std::int64_t k = lo; k <= std::min(j, n_in - 1); ++k) best = min(best, in[k]);
      out[j] = best;
    }
    return;
  }
  auto& [pre, suf] = scratch();
  block_scans(in, len, w, pre, suf, threads);
#ifdef CAPMATCH_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (par)
#endif
  for (std::int64_t jj = 0; jj < static_cast<std::int64_t>(len); ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    // [j - w + 1, j] touches at most two aligned blocks.
    out[j] = j + 1 < w ? pre[j] : min(suf[j + 1 - w], pre[j]);
  }
}

void leading_min(std::span<const Cost> in, std::size_t width, std::span<Cost> out, int threads) {
  const std::size_t len = out.size();
  if (len == 0) return;
  const std::size_t n_in = in.size();
  const std::size_t w = std::max<std::size_t>(width, 1);
  [[maybe_unused]] const bool par = threads > 1 && len >= kParallelThreshold;
  if (w <= kDirectWidth) {
#ifdef CAPMATCH_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (par)
#endif
    for (std::int64_t jj = 0; jj < static_cast<std::int64_t>(len); ++jj) {
      const auto j = static_cast<std::size_t>(jj);
      Cost best = Cost::unreachable();
      for (std::size_t k = j; k < std::min(j + w, n_in); ++k) best = min(best, in[k]);
      out[j] = best;
    }
    return;
  }
  auto& [pre, suf] = scratch();
  block_scans(in, n_in, w, pre, suf, threads);
  const std::size_t full = n_in >= w ? n_in - w + 1 : 0;  // windows that fit inside `in`
  const auto full_end = static_cast<std::int64_t>(std::min(full, len));
#ifdef CAPMATCH_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (par)
#endif
  for (std::int64_t jj = 0; jj < full_end; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    out[j] = min(suf[j], pre[j + w - 1]);
  }
  // Clipped windows: plain suffix minima of `in`.
  Cost run = Cost::unreachable();
  for (std::size_t j = len; j-- > std::min(full, len);) {
    if (j < n_in) run = min(run, in[j]);
    out[j] = run;
  }
}

void prefix_min(std::span<const Cost> in, std::span<Cost> out) {
  Cost run = Cost::unreachable();
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (j < in.size()) run = min(run, in[j]);
    out[j] = run;
  }
}

void add_linear(std::span<Cost> v, std::int64_t slope, int threads) {
  if (slope == 0) return;
  [[maybe_unused]] const bool par = threads > 1 && v.size() >= kParallelThreshold;
#ifdef CAPMATCH_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (par)
#endif
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(v.size()); ++j) {
    v[j] += slope * j;
  }
}

int max_threads() noexcept {
#ifdef CAPMATCH_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace reference {

void trailing_min(std::span<const Cost> in, std::size_t width, std::span<Cost> out) {
  const std::size_t w = std::max<std::size_t>(width, 1);
  for (std::size_t j = 0; j < out.size(); ++j) {
    Cost best = Cost::unreachable();
    for (std::size_t k = j + 1 >= w ? j + 1 - w : 0; k <= j; ++k) {
      if (k < in.size()) best = min(best, in[k]);
    }
    out[j] = best;
  }
}

void leading_min(std::span<const Cost> in, std::size_t width, std::span<Cost> out) {
  const std::size_t w = std::max<std::size_t>(width, 1);
  for (std::size_t j = 0; j < out.size(); ++j) {
    Cost best = Cost::unreachable();
    for (std::size_t k = j; k < j + w && k < in.size(); ++k) best = min(best, in[k]);
    out[j] = best;
  }
}

void prefix_min(std::span<const Cost> in, std::span<Cost> out) {
  for (std::size_t j = 0; j < out.size(); ++j) {
    Cost best = Cost::unreachable();
    for (std::size_t k = 0; k <= j && k < in.size(); ++k) best = min(best, in[k]);
    out[j] = best;
  }
}

void add_linear(std::span<Cost> v, std::int64_t slope) {
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] + Cost(slope * static_cast<std::int64_t>(j));
}

}  // namespace reference

}  // namespace capmatch::kernels
