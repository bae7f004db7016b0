// Block-by-block recurrences for the capacitated problem: forced greedy hops
// across blocks, the per-target cases of a block pair, and the table driver.
// All indices into a_*, b_*, e_*, f_* are 1-based to keep the formulas
// recognizable; C(a_0, .) is the full-capacity cost of the point just left
// of the block.

#include <algorithm>
#include <numeric>
#include <optional>

#include "capmatch/capdp.hpp"

namespace capmatch::capdp {

namespace {

// Counts of a one-sided greedy fill: `count` far points, one partner each,
// spread over near points listed nearest first. k is the greatest integer
// with (n - k - 1) + sum(caps[0..k)) < count; the next point takes m.
struct Fill {
  std::size_t k = 0;
  std::int64_t m = 0;  // 0 when all n near points are saturated
};

std::optional<Fill> fill_counts(std::span<const std::int64_t> caps, std::int64_t count) {
  const auto n = static_cast<std::int64_t>(caps.size());
  const std::int64_t total = std::accumulate(caps.begin(), caps.end(), std::int64_t{0});
  if (count < n || count > total) return std::nullopt;
  std::int64_t sat = 0;
  std::size_t k = 0;
  while (k < caps.size() && n - static_cast<std::int64_t>(k + 1) - 1 + sat + caps[k] < count) {
    sat += caps[k];
    ++k;
  }
  Fill fill{k, 0};
  if (k < caps.size()) fill.m = count - (n - static_cast<std::int64_t>(k) - 1 + sat);
  return fill;
}

struct Group {
  std::vector<Coord> coords;
  std::vector<Capacity> caps;

  std::size_t size() const { return coords.size(); }
  std::int64_t cap_sum() const { return std::accumulate(caps.begin(), caps.end(), std::int64_t{0}); }
  void append(const Group& o) {
    coords.insert(coords.end(), o.coords.begin(), o.coords.end());
    caps.insert(caps.end(), o.caps.begin(), o.caps.end());
  }
  Group slice(std::size_t lo, std::size_t hi) const {  // [lo, hi) 0-based
    return Group{{coords.begin() + lo, coords.begin() + hi}, {caps.begin() + lo, caps.begin() + hi}};
  }
};

Group block_group(const Instance& inst, const Block& blk) {
  const auto caps = inst.caps(blk.side).subspan(blk.first, blk.size);
  return Group{blk.coords, {caps.begin(), caps.end()}};
}

std::size_t global_pos(const Block& blk, std::size_t i) { return blk.global_first + i - 1; }

std::vector<std::int64_t> widen(std::span<const Capacity> c) { return {c.begin(), c.end()}; }

// Cost of a_lo..a_hi (all left of b_1) sending to b_1..b_i with B filled
// nearest first: a-to-b_1 part not included. `caps` are beta_1..beta_i.
Cost mirror_extra(const BlockOffsets& off, std::span<const std::int64_t> caps, std::int64_t count,
                  bool printed_count) {
  const std::size_t i = caps.size();
  std::int64_t below = 0;
  for (std::size_t l = 0; l < i; ++l) below += caps[l];
  if (below < count || count < static_cast<std::int64_t>(i)) return Cost::unreachable();
  if (!printed_count) {
    const auto fill = fill_counts(caps, count);
    if (!fill) return Cost::unreachable();
    std::int64_t cost = 0;
    for (std::size_t l = 1; l <= fill->k; ++l) cost += caps[l - 1] * off.f(l);
    if (fill->k < i) cost += fill->m * off.f(fill->k + 1) + off.sum_f(fill->k + 2, i);
    return Cost(cost);
  }
  // beta_l f_l in place of beta_l inside the count comparison and in m.
  std::size_t k = 0;
  std::int64_t weighted = 0;
  while (k < i && static_cast<std::int64_t>(i) - static_cast<std::int64_t>(k + 1) - 1 + weighted +
                          caps[k] * off.f(k + 1) <
                      count) {
    weighted += caps[k] * off.f(k + 1);
    ++k;
  }
  std::int64_t cost = weighted;
  if (k < i) {
    const std::int64_t m = count - static_cast<std::int64_t>(i) + static_cast<std::int64_t>(k) + 1 - weighted;
    cost += m * off.f(k + 1) + off.sum_f(k + 2, i);
  }
  return Cost(cost);
}

// a_h..a_s (right end of A) absorbing b_1..b_i, saturating from a_s down.
struct Spread {
  Cost cost = Cost::unreachable();
  enum class Head { Saturated, Partial, Single } head = Head::Single;
  std::int64_t m = 0;
};

Spread spread_right(const PairView& v, const BlockOffsets& off, std::size_t h, std::size_t i) {
  const std::size_t s = v.s();
  std::vector<std::int64_t> near;
  for (std::size_t j = s; j >= h && j >= 1; --j) near.push_back(v.alpha[j - 1]);
  Spread out;
  const auto fill = fill_counts(near, static_cast<std::int64_t>(i));
  if (!fill) return out;
  const std::size_t k = fill->k;
  std::int64_t cost = off.sum_alpha_e(s - k + 1, s) + off.sum_f(1, i);
  if (k == near.size()) {
    out.head = Spread::Head::Saturated;
  } else {
    cost += fill->m * off.e(s - k) + off.sum_e(h, s - k - 1);
    out.head = s - k == h ? Spread::Head::Partial : Spread::Head::Single;
    out.m = fill->m;
  }
  out.cost = Cost(cost);
  return out;
}

// min(C(a_{h-1}, alpha_{h-1}), C(a_h, alpha_h - used))
Cost split_prefix(const PairView& v, std::size_t h, std::int64_t used) {
  return min(v.c_full(h - 1), v.c(h, v.alpha[h - 1] - used));
}

}  // namespace

// ---------------------------------------------------------------------------

GreedyAlignment greedy_one_sided(std::span<const Coord> a, std::span<const Capacity> alpha,
                                 std::span<const Coord> b, std::span<const Capacity> beta) {
  const std::size_t s = a.size(), t = b.size();
  if (s == 0 || alpha.size() != s || beta.size() != t) {
    throw PreconditionViolated("greedy alignment needs a non-empty A with one capacity per point");
  }
  const std::int64_t total = std::accumulate(alpha.begin(), alpha.end(), std::int64_t{0});
  if (static_cast<std::int64_t>(t) > total || t < s) {
    throw PreconditionViolated("greedy alignment needs |A| <= |B| <= sum of A capacities");
  }
  GreedyAlignment g;
  if (a.back() <= b.front()) {
    g.orientation = GreedyAlignment::Orientation::BRightOfA;
  } else if (b.back() <= a.front()) {
    g.orientation = GreedyAlignment::Orientation::BLeftOfA;
  } else {
    throw PreconditionViolated("greedy alignment needs B entirely on one side of A");
  }
  const bool right = g.orientation == GreedyAlignment::Orientation::BRightOfA;

  std::vector<std::int64_t> near(s);
  for (std::size_t j = 0; j < s; ++j) near[j] = alpha[right ? s - 1 - j : j];
  const auto fill = fill_counts(near, static_cast<std::int64_t>(t));
  g.saturated = fill->k;
  g.boundary_degree = fill->m;

  std::vector<std::int64_t> deg(s, 1);
  if (right) {
    for (std::size_t j = 0; j < s; ++j) g.pairs.emplace_back(j, j);
    std::size_t open = s;
    for (std::size_t bi = s; bi < t; ++bi) {
      while (deg[open - 1] == alpha[open - 1]) --open;
      ++deg[open - 1];
      g.pairs.emplace_back(open - 1, bi);
    }
  } else {
    for (std::size_t j = 0; j < s; ++j) g.pairs.emplace_back(j, t - s + j);
    std::size_t open = 0;
    for (std::size_t bi = t - s; bi-- > 0;) {
      while (deg[open] == alpha[open]) ++open;
      ++deg[open];
      g.pairs.emplace_back(open, bi);
    }
  }
  std::sort(g.pairs.begin(), g.pairs.end());
  for (const auto& [ai, bi] : g.pairs) g.cost += a[ai] > b[bi] ? a[ai] - b[bi] : b[bi] - a[ai];
  return g;
}

Cost PairView::c(std::size_t h, std::int64_t k) const {
  if (h == 0) return before;
  if (k < 1 || k > alpha[h - 1]) return Cost::unreachable();
  return prefix[h - 1][static_cast<std::size_t>(k) - 1];
}

Cost PairView::c_full(std::size_t h) const { return h == 0 ? before : c(h, alpha[h - 1]); }

// ---------------------------------------------------------------------------
// Per-target cases

std::vector<Cost> case_a0(const PairView& v, std::size_t i) {
  const std::size_t s = v.s();
  const auto beta_i = static_cast<std::size_t>(v.beta[i - 1]);
  std::vector<Cost> out(beta_i, Cost::unreachable());
  const BlockOffsets off = v.offsets();
  const std::int64_t cap_a = off.sum_alpha(1, s);
  if (static_cast<std::int64_t>(i) > cap_a) return out;

  if (static_cast<std::int64_t>(i) == cap_a) {
    std::fill(out.begin(), out.end(), Cost(off.sum_alpha_e(1, s) + off.sum_f(1, i)));
    return out;
  }
  if (s <= i) {
    Spread sp = spread_right(v, off, 1, i);
    std::fill(out.begin(), out.end(), sp.cost);
    return out;
  }
  const std::int64_t cap_b = off.sum_beta(1, i);
  if (cap_b < static_cast<std::int64_t>(s)) return out;
  if (cap_b == static_cast<std::int64_t>(s)) {
    out[beta_i - 1] = Cost(off.sum_e(1, s) + off.sum_beta_f(1, i));
    return out;
  }
  std::vector<std::int64_t> caps = widen(std::span<const Capacity>(v.beta).first(i));
  const auto fill = fill_counts(caps, static_cast<std::int64_t>(s));
  const Cost r = Cost(off.sum_e(1, s)) + mirror_extra(off, caps, static_cast<std::int64_t>(s), false);
  std::size_t lo = 1;
  if (i == fill->k) {
    lo = beta_i;
  } else if (i == fill->k + 1) {
    lo = static_cast<std::size_t>(std::max<std::int64_t>(1, fill->m));
  }
  for (std::size_t j = lo; j <= beta_i; ++j) out[j - 1] = r;
  return out;
}

Cost case_a1(const PairView& v) {
  const std::size_t s = v.s();
  const BlockOffsets off = v.offsets();
  return Cost(off.e(s)) + split_prefix(v, s, 1);
}

Cost case_a2(const PairView& v, std::size_t i) {
  const BlockOffsets off = v.offsets();
  if (static_cast<std::int64_t>(i) > v.alpha[0]) return Cost::unreachable();
  return Cost(off.sum_f(1, i) + static_cast<std::int64_t>(i) * off.e(1)) +
         min(v.c_full(0), v.c(1, v.alpha[0] - static_cast<std::int64_t>(i)));
}

std::vector<Cost> case_a3(const PairView& v) {
  const std::size_t s = v.s();
  const auto beta_1 = static_cast<std::size_t>(v.beta[0]);
  const BlockOffsets off = v.offsets();
  std::vector<Cost> out(beta_1, Cost::unreachable());
  Cost best = Cost::unreachable();
  // C_k widens the window of admissible h by one per unit of capacity.
  for (std::size_t k = 1; k <= beta_1; ++k) {
    if (k <= s) {
      const std::size_t h = s - k + 1;
      best = min(best, Cost(off.sum_e(h, s)) + split_prefix(v, h, 1));
    }
    out[k - 1] = best;
  }
  return out;
}

CaseA4Workspace case_a4_workspace(const PairView& v, std::size_t i, const Readings& r) {
  const std::size_t s = v.s();
  const auto beta_i = static_cast<std::size_t>(v.beta[i - 1]);
  const BlockOffsets off = v.offsets();
  CaseA4Workspace ws;

  // S'_h = S'_{h+1} + e_h + pred(h) - pred(h+1). The distance part is carried
  // separately so an unreachable predecessor never has to be subtracted.
  ws.s_prime.assign(s, Cost::unreachable());
  Coord dist = off.e(s);
  ws.s_prime[s - 1] = Cost(dist) + split_prefix(v, s, 1);
  for (std::size_t h = s; h-- > 1;) {
    dist += r.printed_sprime_step ? off.e(h + 1) : off.e(h);
    ws.s_prime[h - 1] = Cost(dist) + split_prefix(v, h, 1);
  }

  ws.y = Cost::unreachable();
  if (i <= s) {
    const Coord e_part = r.printed_y_bounds ? 0 : off.sum_e(s - i + 1, s);
    ws.y = Cost(e_part + off.sum_f(1, i)) + split_prefix(v, s - i + 1, 1);
  }

  ws.r.assign(s, Cost::unreachable());
  for (std::size_t h = 1; h <= s; ++h) {
    if (s - h + 1 >= i) continue;
    const Spread sp = spread_right(v, off, h, i);
    if (!sp.cost.reachable()) continue;
    Cost pred;
    switch (sp.head) {
      case Spread::Head::Saturated: pred = v.c_full(h - 1); break;
      case Spread::Head::Partial: pred = split_prefix(v, h, sp.m); break;
      case Spread::Head::Single: pred = split_prefix(v, h, 1); break;
    }
    ws.r[h - 1] = sp.cost + pred;
  }
  ws.z = Cost::unreachable();
  const std::size_t z_lo = i >= s + 1 ? 1 : s - i + 2;
  for (std::size_t h = z_lo; h <= s; ++h) ws.z = min(ws.z, ws.r[h - 1]);

  ws.x.assign(beta_i, Cost::unreachable());
  if (i < s) {
    std::vector<std::int64_t> caps = widen(std::span<const Capacity>(v.beta).first(i));
    for (std::size_t k = 1; k <= beta_i; ++k) {
      caps[i - 1] = static_cast<std::int64_t>(k);
      Cost best = Cost::unreachable();
      for (std::size_t h = 1; h + i <= s; ++h) {
        const auto count = static_cast<std::int64_t>(s - h + 1);
        best = min(best, ws.s_prime[h - 1] + mirror_extra(off, caps, count, r.printed_sprime_count));
      }
      ws.x[k - 1] = best;
    }
  }

  const std::int64_t before_i = off.sum_beta(1, i - 1) + static_cast<std::int64_t>(beta_i);
  ws.boundary_j = static_cast<std::size_t>(std::max<std::int64_t>(1, static_cast<std::int64_t>(s) + 1 - before_i));
  return ws;
}

std::vector<Cost> case_a4(const PairView& v, std::size_t i, const Readings& r) {
  const std::size_t s = v.s();
  const auto beta_i = static_cast<std::size_t>(v.beta[i - 1]);
  const BlockOffsets off = v.offsets();
  const CaseA4Workspace ws = case_a4_workspace(v, i, r);
  std::vector<Cost> out(beta_i, Cost::unreachable());
  const std::int64_t below = off.sum_beta(1, i - 1);
  for (std::size_t k = 1; k <= beta_i; ++k) {
    const std::size_t j =
        static_cast<std::size_t>(std::max<std::int64_t>(1, static_cast<std::int64_t>(s) + 1 - below - static_cast<std::int64_t>(k)));
    const std::size_t span = s - j + 1;
    if (i < span) {
      out[k - 1] = min(min(ws.x[k - 1], ws.y), ws.z);
    } else if (i == span) {
      out[k - 1] = min(ws.y, ws.z);
    } else {
      Cost best = Cost::unreachable();
      for (std::size_t h = j; h <= s; ++h) best = min(best, ws.r[h - 1]);
      out[k - 1] = best;
    }
  }
  return out;
}

std::vector<Cost> case_a(const PairView& v, std::size_t i, const Readings& r) {
  const std::size_t s = v.s();
  const auto beta_i = static_cast<std::size_t>(v.beta[i - 1]);
  if (v.first_pair) return case_a0(v, i);
  if (i == 1) {
    if (s > 1 && v.beta[0] > 1) return case_a3(v);
    return std::vector<Cost>(beta_i, case_a1(v));
  }
  if (s == 1) return std::vector<Cost>(beta_i, case_a2(v, i));
  return case_a4(v, i, r);
}

// ---------------------------------------------------------------------------
// Cross-block searches

PairView make_pair_view(const Instance& inst, const BlockPartition& part, const CapCostTable& table,
                        std::size_t w) {
  const Block& left = part.blocks.at(w);
  const Block& right = part.blocks.at(w + 1);
  PairView v;
  const Group a = block_group(inst, left), b = block_group(inst, right);
  v.a = a.coords;
  v.alpha = a.caps;
  v.b = b.coords;
  v.beta = b.caps;
  v.first_pair = w == 0;
  v.before = w == 0 ? Cost(0) : table.full(left.global_first - 1);
  v.prefix.resize(left.size);
  for (std::size_t h = 1; h <= left.size; ++h) {
    const auto row = table.row(global_pos(left, h));
    v.prefix[h - 1].assign(row.begin(), row.end());
  }
  return v;
}

namespace {

// Terminal matching of the residual group a'' into block `target` after a
// chain of forced hops of total cost `carried`.
void relax_terminal(const Group& a2, const Block& target, const Group& b2, Cost carried, CapCostTable& table) {
  const std::size_t s2 = a2.size(), t2 = b2.size();
  const BlockOffsets off(a2.coords, a2.caps, b2.coords, b2.caps);
  auto relax_all = [&](std::size_t ip, Cost c) {
    for (std::int64_t k = 1; k <= b2.caps[ip - 1]; ++k) table.relax(global_pos(target, ip), k, c);
  };

  if (s2 == 1 && t2 == 1) {
    relax_all(1, carried + off.e(1));
    return;
  }
  if (s2 == 1) {
    for (std::size_t ip = 1; ip <= t2 && static_cast<std::int64_t>(ip) <= a2.caps[0]; ++ip) {
      relax_all(ip, carried + (off.sum_f(1, ip) + static_cast<std::int64_t>(ip) * off.e(1)));
    }
    return;
  }
  if (t2 == 1) {
    const Cost c = carried + off.sum_e(1, s2);
    for (std::int64_t k = static_cast<std::int64_t>(s2); k <= b2.caps[0]; ++k) table.relax(global_pos(target, 1), k, c);
    return;
  }

  const std::int64_t cap_a = off.sum_alpha(1, s2);
  for (std::size_t ip = 1; ip <= t2; ++ip) {
    if (s2 <= ip) {
      if (cap_a < static_cast<std::int64_t>(ip)) continue;
      Cost c = carried;
      if (cap_a == static_cast<std::int64_t>(ip)) {
        c += off.sum_alpha_e(1, s2) + off.sum_f(1, ip);
      } else {
        std::vector<std::int64_t> near;
        for (std::size_t j = s2; j >= 1; --j) near.push_back(a2.caps[j - 1]);
        const auto fill = fill_counts(near, static_cast<std::int64_t>(ip));
        const std::size_t k = fill->k;
        c += off.sum_alpha_e(s2 - k + 1, s2) + fill->m * off.e(s2 - k) + off.sum_e(1, s2 - k - 1) +
             off.sum_f(1, ip);
      }
      relax_all(ip, c);
      continue;
    }
    const std::int64_t cap_b = off.sum_beta(1, ip);
    if (cap_b < static_cast<std::int64_t>(s2)) continue;
    if (cap_b == static_cast<std::int64_t>(s2)) {
      table.relax(global_pos(target, ip), b2.caps[ip - 1], carried + (off.sum_e(1, s2) + off.sum_beta_f(1, ip)));
      continue;
    }
    std::vector<std::int64_t> caps(b2.caps.begin(), b2.caps.begin() + static_cast<std::ptrdiff_t>(ip));
    const auto fill = fill_counts(caps, static_cast<std::int64_t>(s2));
    const Cost c = carried + Cost(off.sum_e(1, s2)) + mirror_extra(off, caps, static_cast<std::int64_t>(s2), false);
    std::int64_t lo = 1;
    if (ip == fill->k) {
      lo = b2.caps[ip - 1];
    } else if (ip == fill->k + 1) {
      lo = std::max<std::int64_t>(1, fill->m);
    }
    for (std::int64_t k = lo; k <= b2.caps[ip - 1]; ++k) table.relax(global_pos(target, ip), k, c);
  }
}

}  // namespace

std::size_t primary_step(const Instance& inst, const BlockPartition& part, std::size_t w, CapCostTable& table,
                         const Readings&) {
  const auto& blocks = part.blocks;
  if (w + 1 >= blocks.size()) return 0;
  const PairView v = make_pair_view(inst, part, table, w);
  const BlockOffsets off = v.offsets();
  const std::size_t s = v.s();
  const std::int64_t cap_b = off.sum_beta(1, v.t());
  const Group a_full = block_group(inst, blocks[w]);
  std::size_t chains = 0;

  for (std::size_t j = 1; j <= s; ++j) {
    if (cap_b >= static_cast<std::int64_t>(s - j + 1)) break;
    ++chains;
    const auto c = static_cast<std::size_t>(cap_b);
    Cost carried = Cost(off.sum_e(j, j + c - 1) + off.sum_beta_f(1, v.t())) + split_prefix(v, j, 1);
    Group residual = a_full.slice(j + c - 1, s);
    std::size_t blk = w + 2;
    while (carried.reachable()) {
      Group a2 = residual;
      if (blk < blocks.size()) a2.append(block_group(inst, blocks[blk]));
      if (blk + 1 >= blocks.size()) break;
      const Block& target = blocks[blk + 1];
      const Group b2 = block_group(inst, target);
      const std::int64_t cap2 = b2.cap_sum();
      if (cap2 >= static_cast<std::int64_t>(a2.size())) {
        relax_terminal(a2, target, b2, carried, table);
        break;
      }
      const BlockOffsets hop(a2.coords, a2.caps, b2.coords, b2.caps);
      const auto c2 = static_cast<std::size_t>(cap2);
      carried += hop.sum_e(1, c2) + hop.sum_beta_f(1, b2.size());
      residual = a2.slice(c2, a2.size());
      blk += 2;
    }
  }
  return chains;
}

Cost case_b(const Instance& inst, const BlockPartition& part, std::size_t w, const CapCostTable& table,
            std::size_t i, const Readings& r) {
  const auto& blocks = part.blocks;
  const PairView v = make_pair_view(inst, part, table, w);
  const BlockOffsets off = v.offsets();
  const std::int64_t cap_a = off.sum_alpha(1, v.s());
  if (w == 0 || static_cast<std::int64_t>(i) <= cap_a) return Cost::unreachable();
  const auto c = static_cast<std::size_t>(cap_a);

  Cost carried = Cost(off.sum_alpha_e(1, v.s()) + off.sum_f(i - c + 1, i));
  Group leftover = block_group(inst, blocks[w + 1]).slice(0, i - c);
  std::size_t blk = w - 1;
  while (true) {
    Group b2 = block_group(inst, blocks[blk]);
    b2.append(leftover);
    if (blk == 0) return Cost::unreachable();
    const std::size_t wp = blk - 1;
    const Group a2 = block_group(inst, blocks[wp]);
    const std::int64_t cap2 = a2.cap_sum();
    if (static_cast<std::int64_t>(b2.size()) <= cap2) {
      PairView sub;
      sub.a = a2.coords;
      sub.alpha = a2.caps;
      sub.b = b2.coords;
      sub.beta = b2.caps;
      sub.first_pair = wp == 0;
      sub.before = wp == 0 ? Cost(0) : table.full(blocks[wp].global_first - 1);
      sub.prefix.resize(a2.size());
      for (std::size_t h = 1; h <= a2.size(); ++h) {
        const auto row = table.row(global_pos(blocks[wp], h));
        sub.prefix[h - 1].assign(row.begin(), row.end());
      }
      const auto vals = case_a(sub, b2.size(), r);
      Cost best = Cost::unreachable();
      for (Cost x : vals) best = min(best, x);
      return best + carried;
    }
    const BlockOffsets hop(a2.coords, a2.caps, b2.coords, b2.caps);
    const auto c2 = static_cast<std::size_t>(cap2);
    const std::size_t t2 = b2.size();
    carried += hop.sum_alpha_e(1, a2.size()) + hop.sum_f(t2 - c2 + 1, t2);
    leftover = b2.slice(0, t2 - c2);
    if (wp == 0) return Cost::unreachable();
    blk = wp - 1;
  }
}

CasesResult solve_capacitated_cases(const Instance& inst, const Readings& r) {
  const BlockPartition part = partition_blocks(inst);
  CasesResult res;
  res.table = CapCostTable(inst);
  for (std::size_t w = 0; w + 1 < part.blocks.size(); ++w) {
    primary_step(inst, part, w, res.table, r);
    const PairView v = make_pair_view(inst, part, res.table, w);
    const std::int64_t cap_a = v.offsets().sum_alpha(1, v.s());
    const Block& right = part.blocks[w + 1];
    for (std::size_t i = 1; i <= v.t(); ++i) {
      const std::size_t q = global_pos(right, i);
      if (static_cast<std::int64_t>(i) <= cap_a) {
        const auto vals = case_a(v, i, r);
        for (std::size_t k = 1; k <= vals.size(); ++k) res.table.relax(q, static_cast<std::int64_t>(k), vals[k - 1]);
      } else if (w > 0) {
        const Cost c = case_b(inst, part, w, res.table, i, r);
        for (std::int64_t k = 1; k <= res.table.cap(q); ++k) res.table.relax(q, k, c);
      }
    }
  }
  res.cost = res.table.full(inst.total() - 1);
  return res;
}

}  // namespace capmatch::capdp
