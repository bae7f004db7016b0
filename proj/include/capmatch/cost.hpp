#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace capmatch {

// Exact integer matching cost with an explicit "unreachable" state.
//
// Arithmetic is absorbing: anything plus unreachable is unreachable, and
// unreachable compares greater than every reachable cost, so min() picks
// reachable values first. The numeric value of an unreachable cost is not
// observable; value() throws on it.
class Cost {
 public:
  constexpr Cost() noexcept = default;
  constexpr explicit Cost(std::int64_t v) noexcept : raw_(v) {}

  static constexpr Cost unreachable() noexcept {
    Cost c;
    c.raw_ = kMarker;
    return c;
  }

  constexpr bool reachable() const noexcept { return raw_ != kMarker; }

  std::int64_t value() const {
    if (!reachable()) throw std::logic_error("value() on unreachable cost");
    return raw_;
  }

  friend constexpr Cost operator+(Cost a, Cost b) noexcept {
    if (!a.reachable() || !b.reachable()) return unreachable();
    return Cost(a.raw_ + b.raw_);
  }
  friend constexpr Cost operator+(Cost a, std::int64_t b) noexcept {
    return a.reachable() ? Cost(a.raw_ + b) : a;
  }
  constexpr Cost& operator+=(Cost o) noexcept { return *this = *this + o; }
  constexpr Cost& operator+=(std::int64_t o) noexcept { return *this = *this + o; }

  friend constexpr auto operator<=>(Cost, Cost) noexcept = default;
  friend constexpr bool operator==(Cost, Cost) noexcept = default;

  friend std::ostream& operator<<(std::ostream& os, Cost c) {
    if (!c.reachable()) return os << "unreachable";
    return os << c.raw_;
  }

 private:
  static constexpr std::int64_t kMarker = std::numeric_limits<std::int64_t>::max();
  std::int64_t raw_ = 0;
};

constexpr Cost min(Cost a, Cost b) noexcept { return b < a ? b : a; }

}  // namespace capmatch
