#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "capmatch/cost.hpp"

// Data-parallel kernels over the pending-flow axis of the capacitated DP.
//
// kernels::reference holds the obvious O(len * width) loops and is kept for
// testing. The kernels in capmatch::kernels use the van Herk / Gil-Werman
// block decomposition (O(len) regardless of width) and split the flow axis
// across OpenMP threads when `threads > 1`.
namespace capmatch::kernels {

// out[j] = min(in[max(0, j - width + 1) .. j]); positions of `in` past its end
// count as unreachable. out.size() may exceed in.size().
void trailing_min(std::span<const Cost> in, std::size_t width, std::span<Cost> out, int threads = 1);

// out[j] = min(in[j .. j + width - 1]), clipped to the end of `in`.
void leading_min(std::span<const Cost> in, std::size_t width, std::span<Cost> out, int threads = 1);

// out[j] = min(in[0 .. j]).
void prefix_min(std::span<const Cost> in, std::span<Cost> out);

// v[j] += slope * j
void add_linear(std::span<Cost> v, std::int64_t slope, int threads = 1);

namespace reference {

void trailing_min(std::span<const Cost> in, std::size_t width, std::span<Cost> out);
void leading_min(std::span<const Cost> in, std::size_t width, std::span<Cost> out);
void prefix_min(std::span<const Cost> in, std::span<Cost> out);
void add_linear(std::span<Cost> v, std::int64_t slope);

}  // namespace reference

// Number of OpenMP threads available, 1 without OpenMP.
int max_threads() noexcept;

}  // namespace capmatch::kernels
