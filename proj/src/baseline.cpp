#include "capmatch/baseline.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace capmatch::baseline {

Cost case0(const BlockOffsets& off, std::size_t i) {
  const std::size_t s = off.s();
  Cost c(off.sum_e(1, s) + off.sum_f(1, i));
  if (i > s) c += static_cast<std::int64_t>(i - s) * off.e(s);
  return c;
}

Cost case1(const BlockOffsets& off, Cost c_a0, Cost c_a1) { return Cost(off.e(1)) + min(c_a0, c_a1); }

Cost case2(const BlockOffsets& off, std::size_t i, Cost c_a0, Cost c_a1) {
  return Cost(off.sum_f(1, i) + static_cast<std::int64_t>(i) * off.e(1)) + min(c_a0, c_a1);
}

Cost case3(const BlockOffsets& off, std::span<const Cost> prefix, std::size_t* arg) {
  const std::size_t s = off.s();
  Cost best = Cost::unreachable();
  std::size_t best_h = 1;
  for (std::size_t h = 1; h <= s; ++h) {
    const Cost c = Cost(off.sum_e(h, s)) + prefix[h - 1];
    if (c < best) {
      best = c;
      best_h = h;
    }
  }
  if (arg) *arg = best_h;
  return best;
}

Case4Workspace case4(const BlockOffsets& off, std::span<const Cost> prefix) {
  const std::size_t s = off.s(), t = off.t();
  Case4Workspace ws;
  ws.s_val.resize(s);
  ws.m_val.resize(s);
  ws.m_arg.resize(s);
  for (std::size_t h = 1; h <= s; ++h) {
    ws.s_val[h - 1] = Cost(off.sum_e(h, s)) + prefix[h - 1];
    if (h == 1 || ws.s_val[h - 1] < ws.m_val[h - 2]) {
      ws.m_val[h - 1] = ws.s_val[h - 1];
      ws.m_arg[h - 1] = h;
    } else {
      ws.m_val[h - 1] = ws.m_val[h - 2];
      ws.m_arg[h - 1] = ws.m_arg[h - 2];
    }
  }

  ws.x.assign(t, Cost::unreachable());
  ws.y.assign(t, Cost::unreachable());
  ws.z.assign(t, Cost::unreachable());
  ws.z_from.assign(t, 0);
  ws.c.assign(t, Cost::unreachable());
  ws.choice.assign(t, Choice{});
  for (std::size_t i = 1; i <= t; ++i) {
    if (i < s) ws.x[i - 1] = ws.m_val[s - i - 1] + off.sum_f(1, i);
    if (i <= s) ws.y[i - 1] = Cost(off.sum_e(s - i + 1, s) + off.sum_f(1, i)) + prefix[s - i];
    if (i > 1) {
      const bool via_y = ws.y[i - 2] <= ws.z[i - 2];
      ws.z[i - 1] = Cost(off.e(s) + off.f(i)) + (via_y ? ws.y[i - 2] : ws.z[i - 2]);
      ws.z_from[i - 1] = via_y ? i - 1 : ws.z_from[i - 2];
    }

    Choice& ch = ws.choice[i - 1];
    if (i > s) {
      ws.c[i - 1] = ws.c[i - 2] + (off.e(s) + off.f(i));
      ch.kind = Choice::Kind::Extend;
      continue;
    }
    Cost best = Cost::unreachable();
    if (i < s) {
      best = ws.x[i - 1];
      ch = Choice{Choice::Kind::X, ws.m_arg[s - i - 1], false};
    }
    if (ws.y[i - 1] < best || ch.kind == Choice::Kind::None) {
      best = ws.y[i - 1];
      ch = Choice{Choice::Kind::Y, 0, false};
    }
    if (ws.z[i - 1] < best) {
      best = ws.z[i - 1];
      ch = Choice{Choice::Kind::Z, ws.z_from[i - 1], false};
    }
    ws.c[i - 1] = best;
  }
  return ws;
}

CostTable cost_table(const Instance& inst) {
  const BlockPartition part = partition_blocks(inst);
  CostTable table;
  table.c.assign(inst.total(), Cost::unreachable());
  table.choice.assign(inst.total(), Choice{});

  std::vector<Cost> prefix;
  for (std::size_t w = 0; w + 1 < part.blocks.size(); ++w) {
    const Block& left = part.blocks[w];
    const Block& right = part.blocks[w + 1];
    const BlockOffsets off = block_offsets(inst, part, w);
    const std::size_t s = left.size, t = right.size;
    prefix.assign(s + 1, Cost::unreachable());
    if (w > 0) {
      for (std::size_t h = 0; h <= s; ++h) prefix[h] = table.c[left.global_first + h - 1];
    }
    auto put = [&](std::size_t i, Cost c, Choice ch) {
      table.c[right.global_first + i - 1] = c;
      table.choice[right.global_first + i - 1] = ch;
    };

    if (w == 0) {
      for (std::size_t i = 1; i <= t; ++i) put(i, case0(off, i), Choice{Choice::Kind::Case0, 0, false});
    } else if (s == 1) {
      const bool from_prev = prefix[0] <= prefix[1];
      for (std::size_t i = 1; i <= t; ++i) {
        if (t == 1) {
          put(i, case1(off, prefix[0], prefix[1]), Choice{Choice::Kind::Case1, 0, from_prev});
        } else {
          put(i, case2(off, i, prefix[0], prefix[1]), Choice{Choice::Kind::Case2, 0, from_prev});
        }
      }
    } else if (t == 1) {
      std::size_t h = 1;
      const Cost c = case3(off, prefix, &h);
      put(1, c, Choice{Choice::Kind::Case3, h, false});
    } else {
      const Case4Workspace ws = case4(off, prefix);
      for (std::size_t i = 1; i <= t; ++i) put(i, ws.c[i - 1], ws.choice[i - 1]);
    }
  }
  return table;
}

Matching reconstruct(const Instance& inst, const CostTable& table) {
  const BlockPartition part = partition_blocks(inst);
  constexpr std::size_t kStop = std::numeric_limits<std::size_t>::max();
  Matching m;

  std::size_t pos = inst.total() - 1;
  while (pos != kStop) {
    const std::size_t bi = part.block_of[pos];
    if (bi == 0) throw std::logic_error("reconstruction walked into the first block");
    const Block& left = part.blocks[bi - 1];
    const Block& right = part.blocks[bi];
    const std::size_t s = left.size;
    const std::size_t i = pos - right.global_first + 1;
    auto pair = [&](std::size_t h, std::size_t j) {
      const std::uint32_t ai = static_cast<std::uint32_t>(left.first + h - 1);
      const std::uint32_t bj = static_cast<std::uint32_t>(right.first + j - 1);
      m.pairs.push_back(left.side == Side::S ? Pair{ai, bj} : Pair{bj, ai});
    };
    // Merged position of a_h; a_0 is the point just before the block.
    auto a_pos = [&](std::size_t h) { return left.global_first + h - 1; };
    auto diagonal = [&](std::size_t count) {
      for (std::size_t j = 1; j <= count; ++j) pair(s - count + j, j);
    };

    const Choice ch = table.choice[pos];
    switch (ch.kind) {
      case Choice::Kind::None:
        throw std::logic_error("reconstruction reached a point without a choice");
      case Choice::Kind::Case0:
        if (i <= s) {
          for (std::size_t h = 1; h + i <= s; ++h) pair(h, 1);
          diagonal(i);
        } else {
          for (std::size_t j = 1; j <= s; ++j) pair(j, j);
          for (std::size_t j = s + 1; j <= i; ++j) pair(s, j);
        }
        pos = kStop;
        break;
      case Choice::Kind::Case1:
      case Choice::Kind::Case2:
        for (std::size_t j = 1; j <= i; ++j) pair(1, j);
        pos = ch.from_prev ? a_pos(0) : a_pos(1);
        break;
      case Choice::Kind::Case3:
        for (std::size_t h = ch.split; h <= s; ++h) pair(h, 1);
        pos = a_pos(ch.split - 1);
        break;
      case Choice::Kind::X:
        for (std::size_t h = ch.split; h + i <= s; ++h) pair(h, 1);
        diagonal(i);
        pos = a_pos(ch.split - 1);
        break;
      case Choice::Kind::Y:
        diagonal(i);
        pos = a_pos(s - i);
        break;
      case Choice::Kind::Z:
        diagonal(ch.split);
        for (std::size_t j = ch.split + 1; j <= i; ++j) pair(s, j);
        pos = a_pos(s - ch.split);
        break;
      case Choice::Kind::Extend:
        pair(s, i);
        pos = pos - 1;
        break;
    }
  }

  std::sort(m.pairs.begin(), m.pairs.end());
  m.cost = matching_cost(inst, m.pairs);
  const Cost expected = table.c.back();
  if (!expected.reachable() || expected.value() != m.cost) {
    std::ostringstream os;
    os << "rebuilt cost " << m.cost << " differs from table value " << expected;
    throw std::logic_error(os.str());
  }
  return m;
}

Result solve_unlimited(const Instance& inst) {
  const CostTable table = cost_table(inst);
  Result r;
  r.matching = reconstruct(inst, table);
  r.cost = r.matching.cost;
  return r;
}

}  // namespace capmatch::baseline
