#include "capmatch/checks.hpp"

#include <algorithm>
#include <sstream>

namespace capmatch::checks {

namespace {

struct View {
  const Instance& inst;
  std::vector<std::int64_t> ds, dt;

  View(const Instance& in, const Matching& m) : inst(in) {
    auto [s, t] = degrees(in, m.pairs);
    ds = std::move(s);
    dt = std::move(t);
  }

  bool saturated(Side side, std::size_t i) const {
    return (side == Side::S ? ds[i] : dt[i]) >= inst.caps(side)[i];
  }
  Coord coord(Side side, std::size_t i) const { return inst.coords(side)[i]; }
};

std::string describe(const Instance& inst, const Pair& p) {
  std::ostringstream os;
  os << "(s" << p.first << "@" << inst.coords(Side::S)[p.first] << ", t" << p.second << "@"
     << inst.coords(Side::T)[p.second] << ")";
  return os.str();
}

// Calls visit(b, c) for every b, c with lo <= b < c <= hi,
// b on side `b_side` and c on the other side.
template <class F>
void for_between(const View& v, Side b_side, Coord lo, Coord hi, F&& visit) {
  const Side c_side = opposite(b_side);
  for (std::size_t b = 0; b < v.inst.size(b_side); ++b) {
    const Coord bc = v.coord(b_side, b);
    if (bc < lo || bc >= hi) continue;
    for (std::size_t c = 0; c < v.inst.size(c_side); ++c) {
      const Coord cc = v.coord(c_side, c);
      if (cc > bc && cc <= hi) visit(b, c);
    }
  }
}

std::vector<std::string> spanning(const Instance& inst, const Matching& m, bool need_unsaturated) {
  const View v(inst, m);
  std::vector<std::string> out;
  for (const Pair& p : m.pairs) {
    const Coord x = inst.coords(Side::S)[p.first], y = inst.coords(Side::T)[p.second];
    if (x == y) continue;
    // Left end a, right end d; b shares d's side, c shares a's side.
    const Side a_side = x < y ? Side::S : Side::T;
    const Coord lo = std::min(x, y), hi = std::max(x, y);
    bool bad = false;
    for_between(v, opposite(a_side), lo, hi, [&](std::size_t b, std::size_t c) {
      if (!need_unsaturated || (!v.saturated(opposite(a_side), b) && !v.saturated(a_side, c))) bad = true;
    });
    if (bad) out.push_back("pair " + describe(inst, p) + " spans a cheaper exchange");
  }
  return out;
}

}  // namespace

std::vector<std::string> spanning_pair_violations(const Instance& inst, const Matching& m) {
  return spanning(inst, m, true);
}

std::vector<std::string> long_pair_violations(const Instance& inst, const Matching& m) {
  return spanning(inst, m, false);
}

std::vector<std::string> fork_violations(const Instance& inst, const Matching& m) {
  const View v(inst, m);
  std::vector<std::string> out;
  std::vector<std::vector<Coord>> partners_s(inst.size(Side::S)), partners_t(inst.size(Side::T));
  for (const Pair& p : m.pairs) {
    partners_s[p.first].push_back(inst.coords(Side::T)[p.second]);
    partners_t[p.second].push_back(inst.coords(Side::S)[p.first]);
  }
  for (Side side : {Side::S, Side::T}) {
    const auto& partners = side == Side::S ? partners_s : partners_t;
    for (std::size_t b = 0; b < inst.size(side); ++b) {
      const Coord bc = v.coord(side, b);
      Coord left = bc, right = bc;
      bool has_left = false, has_right = false;
      for (Coord q : partners[b]) {
        if (q <= bc && (!has_left || q < left)) left = q, has_left = true;
        if (q >= bc && (!has_right || q > right)) right = q, has_right = true;
      }
      for (std::size_t c = 0; c < inst.size(side); ++c) {
        if (c == b || v.saturated(side, c)) continue;
        const Coord cc = v.coord(side, c);
        const bool right_fork = has_left && has_right && right > bc && left <= bc && cc > bc && cc <= right;
        const bool left_fork = has_left && has_right && left < bc && right >= bc && cc < bc && cc >= left;
        if (right_fork || left_fork) {
          std::ostringstream os;
          os << side_name(side) << "-point " << b << "@" << bc << " forks past unsaturated " << side_name(side)
             << "-point " << c << "@" << cc;
          out.push_back(os.str());
        }
      }
    }
  }
  return out;
}

std::vector<std::string> split_point_violations(const Instance& inst, const Matching& m) {
  const BlockPartition part = partition_blocks(inst);
  std::vector<std::vector<Coord>> partners_s(inst.size(Side::S)), partners_t(inst.size(Side::T));
  for (const Pair& p : m.pairs) {
    partners_s[p.first].push_back(inst.coords(Side::T)[p.second]);
    partners_t[p.second].push_back(inst.coords(Side::S)[p.first]);
  }
  std::vector<std::string> out;
  for (const Block& blk : part.blocks) {
    const auto& partners = blk.side == Side::S ? partners_s : partners_t;
    for (std::size_t x = 0; x < blk.size; ++x) {
      for (std::size_t y = 0; y < blk.size; ++y) {
        const Coord p = blk.coords[x], q = blk.coords[y];
        if (!(p < q)) continue;
        bool p_far = false, q_back = false;
        for (Coord c : partners[blk.first + x]) p_far |= c > q;
        for (Coord d : partners[blk.first + y]) q_back |= d < p;
        if (p_far && q_back) {
          std::ostringstream os;
          os << side_name(blk.side) << "-points @" << p << " and @" << q << " cross inside their block";
          out.push_back(os.str());
        }
      }
    }
  }
  return out;
}

}  // namespace capmatch::checks
