#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "capmatch/cost.hpp"

namespace capmatch {

using Coord = std::int64_t;
using Capacity = std::int32_t;

enum class Side : std::uint8_t { S, T };

constexpr Side opposite(Side s) noexcept { return s == Side::S ? Side::T : Side::S; }
constexpr const char* side_name(Side s) noexcept { return s == Side::S ? "S" : "T"; }

// A point of the merged, sorted sequence S ∪ T.
struct PointRef {
  Side side;
  std::uint32_t index;  // into the (sorted) coordinates of `side`

  friend bool operator==(const PointRef&, const PointRef&) = default;
};

// Unvalidated input, in caller order.
struct RawInstance {
  std::vector<Coord> s;
  std::vector<Coord> t;
  std::vector<std::int64_t> alpha;
  std::vector<std::int64_t> beta;
};

enum class ValidationErrc { EmptySide, CapacityBelowOne, LengthMismatch, CoordinateOverflow };

const char* to_string(ValidationErrc code) noexcept;

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ValidationErrc code() const noexcept { return code_; }

 private:
  ValidationErrc code_;
};

// Both point sets sorted non-decreasing, capacities permuted alongside and
// clamped to the size of the opposite set. Immutable once built.
class Instance {
 public:
  std::span<const Coord> coords(Side side) const { return side == Side::S ? s_ : t_; }
  std::span<const Capacity> caps(Side side) const { return side == Side::S ? alpha_ : beta_; }
  // Position of each sorted point in the caller's input order.
  std::span<const std::size_t> origin(Side side) const {
    return side == Side::S ? s_origin_ : t_origin_;
  }
  std::size_t size(Side side) const { return side == Side::S ? s_.size() : t_.size(); }
  std::size_t total() const { return s_.size() + t_.size(); }

  // Merged order: by coordinate, S before T on equal coordinates.
  const std::vector<PointRef>& order() const { return order_; }

  Coord coord(PointRef p) const { return coords(p.side)[p.index]; }
  Capacity cap(PointRef p) const { return caps(p.side)[p.index]; }

  std::int64_t capacity_sum(Side side) const;

 private:
  friend Instance validate_instance(const RawInstance& raw);

  std::vector<Coord> s_, t_;
  std::vector<Capacity> alpha_, beta_;
  std::vector<std::size_t> s_origin_, t_origin_;
  std::vector<PointRef> order_;
};

// Sorts, checks and clamps. Throws ValidationError.
Instance validate_instance(const RawInstance& raw);

// Convenience for callers that already hold sorted data.
Instance make_instance(std::vector<Coord> s, std::vector<Coord> t, std::vector<std::int64_t> alpha,
                       std::vector<std::int64_t> beta);

// Every capacity set to the opposite set size (unlimited semantics).
Instance make_unlimited(std::vector<Coord> s, std::vector<Coord> t);

// ---------------------------------------------------------------------------
// Block partition

struct Block {
  Side side;
  std::size_t first;         // first member, index into the side's sorted coordinates
  std::size_t size;
  std::size_t global_first;  // position of the first member in Instance::order()
  std::vector<Coord> coords;

  std::size_t last() const { return first + size - 1; }
};

struct BlockPartition {
  std::vector<Block> blocks;
  std::vector<std::size_t> block_of;  // merged position -> block index
};

BlockPartition partition_blocks(const Instance& inst);

// Offsets of a left point group a_1..a_s against a right group b_1..b_t with
// a_s <= b_1: e_i = b_1 - a_i, f_i = b_i - b_1. All sums below use 1-based
// inclusive ranges and return 0 on an empty range.
class BlockOffsets {
 public:
  BlockOffsets() = default;
  BlockOffsets(std::span<const Coord> a, std::span<const Capacity> alpha, std::span<const Coord> b,
               std::span<const Capacity> beta);

  std::size_t s() const { return e_.size(); }
  std::size_t t() const { return f_.size(); }

  Coord e(std::size_t i) const { return e_[i - 1]; }
  Coord f(std::size_t i) const { return f_[i - 1]; }

  Coord sum_e(std::size_t lo, std::size_t hi) const { return range(e_pre_, lo, hi); }
  Coord sum_f(std::size_t lo, std::size_t hi) const { return range(f_pre_, lo, hi); }
  Coord sum_alpha_e(std::size_t lo, std::size_t hi) const { return range(ae_pre_, lo, hi); }
  Coord sum_beta_f(std::size_t lo, std::size_t hi) const { return range(bf_pre_, lo, hi); }
  std::int64_t sum_alpha(std::size_t lo, std::size_t hi) const { return range(a_pre_, lo, hi); }
  std::int64_t sum_beta(std::size_t lo, std::size_t hi) const { return range(b_pre_, lo, hi); }

  // prefix(e, i) = sum_e(1, i)
  std::span<const Coord> e_prefix() const { return e_pre_; }
  std::span<const Coord> f_prefix() const { return f_pre_; }

 private:
  static std::int64_t range(const std::vector<std::int64_t>& pre, std::size_t lo, std::size_t hi) {
    if (lo < 1) lo = 1;
    if (hi + 1 >= pre.size()) hi = pre.size() - 1;
    if (lo > hi) return 0;
    return pre[hi] - pre[lo - 1];
  }

  std::vector<Coord> e_, f_;
  std::vector<std::int64_t> e_pre_, f_pre_, ae_pre_, bf_pre_, a_pre_, b_pre_;
};

// Offsets for the block pair (A_w, A_{w+1}).
BlockOffsets block_offsets(const Instance& inst, const BlockPartition& part, std::size_t w);

// ---------------------------------------------------------------------------
// Matchings

using Pair = std::pair<std::uint32_t, std::uint32_t>;  // (s index, t index)

struct Matching {
  std::vector<Pair> pairs;
  std::int64_t cost = 0;
};

std::int64_t matching_cost(const Instance& inst, std::span<const Pair> pairs);

// |S| <= sum(beta) and |T| <= sum(alpha).
bool feasible(const Instance& inst);

struct Violation {
  enum class Kind { IndexOutOfRange, DuplicatePair, DegreeBelowOne, DegreeAboveCapacity, CostMismatch };
  Kind kind;
  Side side = Side::S;
  std::size_t index = 0;
  std::int64_t degree = 0;
  std::string message;
};

struct VerifyReport {
  bool ok = true;
  std::int64_t recomputed_cost = 0;
  std::vector<Violation> violations;
};

VerifyReport verify_matching(const Instance& inst, const Matching& m);

// Degree of every point under `pairs`; out-of-range pairs are skipped.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> degrees(const Instance& inst,
                                                                        std::span<const Pair> pairs);

}  // namespace capmatch
