#include "capmatch/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace capmatch {

const char* to_string(ValidationErrc code) noexcept {
  switch (code) {
    case ValidationErrc::EmptySide: return "EmptySide";
    case ValidationErrc::CapacityBelowOne: return "CapacityBelowOne";
    case ValidationErrc::LengthMismatch: return "LengthMismatch";
    case ValidationErrc::CoordinateOverflow: return "CoordinateOverflow";
  }
  return "Unknown";
}

std::int64_t Instance::capacity_sum(Side side) const {
  const auto c = caps(side);
  return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

namespace {

// Any coordinate beyond this magnitude risks overflow in b - a.
constexpr Coord kCoordLimit = Coord{1} << 61;
__extension__ using u128 = unsigned __int128;
constexpr u128 kCostLimit = static_cast<u128>(1) << 62;

void sort_side(std::span<const Coord> coords, std::span<const std::int64_t> caps,
               std::size_t opposite_size, std::vector<Coord>& out_coords,
               std::vector<Capacity>& out_caps, std::vector<std::size_t>& origin) {
  origin.resize(coords.size());
  std::iota(origin.begin(), origin.end(), std::size_t{0});
  std::stable_sort(origin.begin(), origin.end(),
                   [&](std::size_t a, std::size_t b) { return coords[a] < coords[b]; });
  out_coords.resize(coords.size());
  out_caps.resize(coords.size());
  for (std::size_t i = 0; i < origin.size(); ++i) {
    out_coords[i] = coords[origin[i]];
    const auto c = std::min<std::int64_t>(caps[origin[i]], static_cast<std::int64_t>(opposite_size));
    out_caps[i] = static_cast<Capacity>(c);
  }
}

}  // namespace

Instance validate_instance(const RawInstance& raw) {
  if (raw.s.empty() || raw.t.empty()) {
    throw ValidationError(ValidationErrc::EmptySide, "both point sets must be non-empty");
  }
  if (raw.alpha.size() != raw.s.size() || raw.beta.size() != raw.t.size()) {
    std::ostringstream os;
    os << "capacity count mismatch: |s|=" << raw.s.size() << " |alpha|=" << raw.alpha.size()
       << " |t|=" << raw.t.size() << " |beta|=" << raw.beta.size();
    throw ValidationError(ValidationErrc::LengthMismatch, os.str());
  }
  for (const auto* caps : {&raw.alpha, &raw.beta}) {
    for (std::size_t i = 0; i < caps->size(); ++i) {
      if ((*caps)[i] < 1) {
        std::ostringstream os;
        os << (caps == &raw.alpha ? "alpha[" : "beta[") << i << "] = " << (*caps)[i] << " < 1";
        throw ValidationError(ValidationErrc::CapacityBelowOne, os.str());
      }
    }
  }
  Coord lo = raw.s.front(), hi = raw.s.front();
  for (const auto* pts : {&raw.s, &raw.t}) {
    for (Coord c : *pts) {
      if (c > kCoordLimit || c < -kCoordLimit) {
        throw ValidationError(ValidationErrc::CoordinateOverflow, "coordinate magnitude exceeds 2^61");
      }
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }
  // Every simple matching has at most |S||T| pairs of length <= span.
  const auto span = static_cast<u128>(hi - lo);
  const auto pairs = static_cast<u128>(raw.s.size()) * raw.t.size();
  if (span * pairs >= kCostLimit) {
    throw ValidationError(ValidationErrc::CoordinateOverflow,
                          "coordinate span too large for exact 64-bit costs");
  }

  Instance inst;
  sort_side(raw.s, raw.alpha, raw.t.size(), inst.s_, inst.alpha_, inst.s_origin_);
  sort_side(raw.t, raw.beta, raw.s.size(), inst.t_, inst.beta_, inst.t_origin_);

  inst.order_.reserve(inst.total());
  std::size_t i = 0, j = 0;
  while (i < inst.s_.size() || j < inst.t_.size()) {
    const bool take_s = j == inst.t_.size() || (i < inst.s_.size() && inst.s_[i] <= inst.t_[j]);
    if (take_s) {
      inst.order_.push_back({Side::S, static_cast<std::uint32_t>(i++)});
    } else {
      inst.order_.push_back({Side::T, static_cast<std::uint32_t>(j++)});
    }
  }
  return inst;
}

Instance make_instance(std::vector<Coord> s, std::vector<Coord> t, std::vector<std::int64_t> alpha,
                       std::vector<std::int64_t> beta) {
  return validate_instance(RawInstance{std::move(s), std::move(t), std::move(alpha), std::move(beta)});
}

Instance make_unlimited(std::vector<Coord> s, std::vector<Coord> t) {
  std::vector<std::int64_t> alpha(s.size(), static_cast<std::int64_t>(t.size()));
  std::vector<std::int64_t> beta(t.size(), static_cast<std::int64_t>(s.size()));
  return make_instance(std::move(s), std::move(t), std::move(alpha), std::move(beta));
}

BlockPartition partition_blocks(const Instance& inst) {
  BlockPartition part;
  const auto& order = inst.order();
  part.block_of.resize(order.size());
  for (std::size_t g = 0; g < order.size(); ++g) {
    const PointRef p = order[g];
    if (part.blocks.empty() || part.blocks.back().side != p.side) {
      part.blocks.push_back(Block{p.side, p.index, 0, g, {}});
    }
    Block& b = part.blocks.back();
    ++b.size;
    b.coords.push_back(inst.coord(p));
    part.block_of[g] = part.blocks.size() - 1;
  }
  return part;
}

BlockOffsets::BlockOffsets(std::span<const Coord> a, std::span<const Capacity> alpha,
                           std::span<const Coord> b, std::span<const Capacity> beta) {
  const std::size_t s = a.size(), t = b.size();
  e_.resize(s);
  f_.resize(t);
  e_pre_.assign(s + 1, 0);
  ae_pre_.assign(s + 1, 0);
  a_pre_.assign(s + 1, 0);
  f_pre_.assign(t + 1, 0);
  bf_pre_.assign(t + 1, 0);
  b_pre_.assign(t + 1, 0);
  const Coord b1 = t > 0 ? b[0] : 0;
  for (std::size_t i = 0; i < s; ++i) {
    e_[i] = b1 >= a[i] ? b1 - a[i] : a[i] - b1;
    e_pre_[i + 1] = e_pre_[i] + e_[i];
    ae_pre_[i + 1] = ae_pre_[i] + alpha[i] * e_[i];
    a_pre_[i + 1] = a_pre_[i] + alpha[i];
  }
  for (std::size_t i = 0; i < t; ++i) {
    f_[i] = b[i] - b1;
    f_pre_[i + 1] = f_pre_[i] + f_[i];
    bf_pre_[i + 1] = bf_pre_[i] + beta[i] * f_[i];
    b_pre_[i + 1] = b_pre_[i] + beta[i];
  }
}

BlockOffsets block_offsets(const Instance& inst, const BlockPartition& part, std::size_t w) {
  const Block& left = part.blocks.at(w);
  const Block& right = part.blocks.at(w + 1);
  return BlockOffsets(left.coords, inst.caps(left.side).subspan(left.first, left.size), right.coords,
                      inst.caps(right.side).subspan(right.first, right.size));
}

std::int64_t matching_cost(const Instance& inst, std::span<const Pair> pairs) {
  std::int64_t total = 0;
  const auto s = inst.coords(Side::S);
  const auto t = inst.coords(Side::T);
  for (const auto& [i, j] : pairs) {
    const Coord d = s[i] - t[j];
    total += d < 0 ? -d : d;
  }
  return total;
}

bool feasible(const Instance& inst) {
  return static_cast<std::int64_t>(inst.size(Side::S)) <= inst.capacity_sum(Side::T) &&
         static_cast<std::int64_t>(inst.size(Side::T)) <= inst.capacity_sum(Side::S);
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> degrees(const Instance& inst,
                                                                        std::span<const Pair> pairs) {
  std::vector<std::int64_t> ds(inst.size(Side::S), 0), dt(inst.size(Side::T), 0);
  for (const auto& [i, j] : pairs) {
    if (i >= ds.size() || j >= dt.size()) continue;
    ++ds[i];
    ++dt[j];
  }
  return {std::move(ds), std::move(dt)};
}

VerifyReport verify_matching(const Instance& inst, const Matching& m) {
  VerifyReport report;
  std::vector<Pair> valid;
  valid.reserve(m.pairs.size());
  std::set<Pair> seen;
  for (const auto& p : m.pairs) {
    if (p.first >= inst.size(Side::S) || p.second >= inst.size(Side::T)) {
      std::ostringstream os;
      os << "pair (" << p.first << "," << p.second << ") out of range";
      report.violations.push_back({Violation::Kind::IndexOutOfRange, Side::S, p.first, 0, os.str()});
      continue;
    }
    if (!seen.insert(p).second) {
      std::ostringstream os;
      os << "duplicate pair (" << p.first << "," << p.second << ")";
      report.violations.push_back({Violation::Kind::DuplicatePair, Side::S, p.first, 0, os.str()});
      continue;
    }
    valid.push_back(p);
  }
  const auto [ds, dt] = degrees(inst, valid);
  for (Side side : {Side::S, Side::T}) {
    const auto& deg = side == Side::S ? ds : dt;
    const auto caps = inst.caps(side);
    for (std::size_t i = 0; i < deg.size(); ++i) {
      if (deg[i] < 1 || deg[i] > caps[i]) {
        std::ostringstream os;
        os << side_name(side) << "-point " << i << " (coord " << inst.coords(side)[i] << ") has degree "
           << deg[i] << (deg[i] < 1 ? ", needs at least 1" : ", capacity ") ;
        if (deg[i] >= 1) os << caps[i];
        report.violations.push_back({deg[i] < 1 ? Violation::Kind::DegreeBelowOne
                                                : Violation::Kind::DegreeAboveCapacity,
                                     side, i, deg[i], os.str()});
      }
    }
  }
  report.recomputed_cost = matching_cost(inst, valid);
  if (report.recomputed_cost != m.cost) {
    std::ostringstream os;
    os << "reported cost " << m.cost << " differs from recomputed " << report.recomputed_cost;
    report.violations.push_back({Violation::Kind::CostMismatch, Side::S, 0, 0, os.str()});
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace capmatch
