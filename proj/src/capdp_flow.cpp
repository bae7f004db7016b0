// Exact capacitated matching on the line by a left-to-right scan over the
// merged point sequence.
//
// State at a gap: how many edges cross it, and which side their left
// endpoints are on. Some optimal matching never has edges crossing one gap in
// both directions, and never keeps an edge whose endpoints both have degree
// >= 2, so each edge has a degree-1 end. That bounds the crossing count by
// (#sender-side points on the left) + (#receiver-side points on the right).
// Each point either opens new edges to the right (if the pending edges come
// from its own side) or closes some pending edges from the other side and
// then possibly opens its own. All three transitions are window minima over
// the flow axis of width Cap(p), so a point costs O(bound) and the scan
// O(n^2) whatever the capacities.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <sstream>
#include <string>

#include "capmatch/capdp.hpp"
#include "capmatch/kernels.hpp"

namespace capmatch::capdp {

MemoryLimitExceeded::MemoryLimitExceeded(std::size_t needed, std::size_t limit)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "DP state needs ~" << (needed >> 20) << " MiB, limit is " << (limit >> 20) << " MiB";
        return os.str();
      }()),
      needed_(needed),
      limit_(limit) {}

std::size_t default_memory_limit_bytes() {
  constexpr std::size_t kDefaultMb = 2048;
  if (const char* env = std::getenv("CAPMATCH_MEM_LIMIT_MB")) {
    char* end = nullptr;
    const unsigned long long mb = std::strtoull(env, &end, 10);
    if (end != env && mb > 0) return static_cast<std::size_t>(mb) << 20;
  }
  return kDefaultMb << 20;
}

CapCostTable::CapCostTable(const Instance& inst) {
  const auto& order = inst.order();
  offset_.resize(order.size() + 1, 0);
  for (std::size_t g = 0; g < order.size(); ++g) {
    offset_[g + 1] = offset_[g] + static_cast<std::size_t>(inst.cap(order[g]));
  }
  cells_.assign(offset_.back(), Cost::unreachable());
}

std::vector<std::size_t> flow_bounds(const Instance& inst, Side from) {
  const auto& order = inst.order();
  const std::size_t n = order.size();
  std::size_t right_receivers = inst.size(opposite(from));
  std::size_t left_senders = 0;
  std::vector<std::size_t> bound(n + 1, 0);
  for (std::size_t g = 0; g <= n; ++g) {
    if (g > 0) {
      if (order[g - 1].side == from) {
        ++left_senders;
      } else {
        --right_receivers;
      }
    }
    bound[g] = std::min(left_senders + right_receivers, left_senders * right_receivers);
  }
  return bound;
}

namespace {

// Pending-edge vectors at one gap; index 0 of both is the "nothing pending"
// state, index y >= 1 means y edges pending from that side.
struct GapState {
  std::vector<Cost> from_s;
  std::vector<Cost> from_t;

  std::vector<Cost>& from(Side side) { return side == Side::S ? from_s : from_t; }
  const std::vector<Cost>& from(Side side) const { return side == Side::S ? from_s : from_t; }
};

class Scan {
 public:
  Scan(const Instance& inst, const SolveOptions& opts)
      : inst_(inst),
        opts_(opts),
        bound_s_(flow_bounds(inst, Side::S)),
        bound_t_(flow_bounds(inst, Side::T)) {}

  std::size_t n() const { return inst_.order().size(); }
  std::size_t bound(Side side, std::size_t g) const { return side == Side::S ? bound_s_[g] : bound_t_[g]; }

  GapState initial() const {
    GapState st;
    st.from_s.assign(bound_s_[0] + 1, Cost::unreachable());
    st.from_t.assign(bound_t_[0] + 1, Cost::unreachable());
    st.from_s[0] = st.from_t[0] = Cost(0);
    return st;
  }

  Coord gap_after(std::size_t g) const {
    if (g + 1 >= n()) return 0;
    return inst_.coord(inst_.order()[g + 1]) - inst_.coord(inst_.order()[g]);
  }

  // in: state on the gap left of merged position g; out: state on its right gap.
  void step(std::size_t g, const GapState& in, GapState& out) const {
    const PointRef p = inst_.order()[g];
    const Side own = p.side;
    const Side other = opposite(own);
    const auto cap = static_cast<std::size_t>(inst_.cap(p));
    const std::vector<Cost>& own_in = in.from(own);
    const std::vector<Cost>& other_in = in.from(other);
    std::vector<Cost>& own_out = out.from(own);
    std::vector<Cost>& other_out = out.from(other);
    own_out.resize(bound(own, g + 1) + 1);
    other_out.resize(bound(other, g + 1) + 1);
    const bool fast = opts_.backend == KernelBackend::Fast;
    const int threads = std::max(1, opts_.threads);

    // Close 1..cap pending edges of the other side; the rest stay pending.
    // other_out[0] is the fully closed state.
    const std::span<const Cost> absorbable = std::span<const Cost>(other_in).subspan(1);
    if (fast) {
      kernels::leading_min(absorbable, cap, other_out, threads);
    } else {
      kernels::reference::leading_min(absorbable, cap, other_out);
    }

    // Open 1..cap new edges on top of what our own side already has pending.
    const std::span<Cost> opened = std::span<Cost>(own_out).subspan(1);
    if (fast) {
      kernels::trailing_min(own_in, cap, opened, threads);
    } else {
      kernels::reference::trailing_min(own_in, cap, opened);
    }

    // Or close every pending edge of the other side (x of them, maybe none)
    // and open y <= cap - x new ones.
    Cost run = Cost::unreachable();
    const std::size_t max_x = std::min(cap - 1, other_in.size() - 1);
    std::size_t x = 0;
    for (std::size_t y = cap; y >= 1; --y) {
      const std::size_t reach = std::min(cap - y, max_x);
      while (x <= reach) run = min(run, other_in[x++]);
      if (y < own_out.size()) own_out[y] = min(own_out[y], run);
    }
    own_out[0] = other_out[0];

    const Coord len = gap_after(g);
    if (fast) {
      kernels::add_linear(own_out, len, threads);
      kernels::add_linear(other_out, len, threads);
    } else {
      kernels::reference::add_linear(own_out, len);
      kernels::reference::add_linear(other_out, len);
    }
  }

  std::size_t state_cells(std::size_t g) const { return bound_s_[g] + bound_t_[g] + 2; }

 private:
  const Instance& inst_;
  const SolveOptions& opts_;
  std::vector<std::size_t> bound_s_, bound_t_;
};

std::size_t resolved_limit(const SolveOptions& opts) {
  return opts.memory_limit_bytes ? opts.memory_limit_bytes : default_memory_limit_bytes();
}

// Where the backward walk currently stands: y edges pending from `side`
// (or nothing pending when y == 0) with total cost `value` at that gap.
struct Target {
  Side side = Side::S;
  std::size_t y = 0;
  Cost value;
};

PointDecision backtrack_point(const Instance& inst, std::size_t g, const GapState& in, Target& target) {
  const PointRef p = inst.order()[g];
  const Side own = p.side;
  const Side other = opposite(own);
  const auto cap = static_cast<std::size_t>(inst.cap(p));
  const auto& own_in = in.from(own);
  const auto& other_in = in.from(other);
  const Cost want = target.value;

  auto found = [&](std::size_t absorbed, std::size_t emitted, Side side, std::size_t y) {
    target = Target{side, y, y == 0 ? own_in[0] : in.from(side)[y]};
    return PointDecision{static_cast<std::int32_t>(absorbed), static_cast<std::int32_t>(emitted)};
  };

  if (target.y == 0) {
    for (std::size_t x = 1; x <= cap && x < other_in.size(); ++x) {
      if (other_in[x] == want) return found(x, 0, other, x);
    }
  } else if (target.side == own) {
    const std::size_t y = target.y;
    for (std::size_t r = 1; r <= std::min(cap, y); ++r) {
      if (y - r < own_in.size() && own_in[y - r] == want) return found(0, r, own, y - r);
    }
    if (y <= cap) {
      for (std::size_t x = 0; x <= cap - y && x < other_in.size(); ++x) {
        if (other_in[x] == want) return found(x, y, other, x);
      }
    }
  } else {
    const std::size_t y = target.y;
    for (std::size_t l = 1; l <= cap && y + l < other_in.size(); ++l) {
      if (other_in[y + l] == want) return found(l, 0, other, y + l);
    }
  }
  std::ostringstream os;
  os << "no predecessor state at merged position " << g;
  throw InternalInconsistency(os.str());
}

}  // namespace

Cost solve_cost(const Instance& inst, const SolveOptions& opts) {
  Scan scan(inst, opts);
  GapState cur = scan.initial(), next;
  for (std::size_t g = 0; g < scan.n(); ++g) {
    scan.step(g, cur, next);
    std::swap(cur, next);
  }
  return cur.from_s[0];
}

FlowTrace solve_trace(const Instance& inst, const SolveOptions& opts) {
  Scan scan(inst, opts);
  const std::size_t n = scan.n();
  const auto stride = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(double(n)))));

  // Checkpoints every `stride` positions, then one block of full states at a
  // time during the backward walk.
  std::size_t need = 0, block_peak = 0;
  for (std::size_t b0 = 0; b0 < n; b0 += stride) {
    need += scan.state_cells(b0);
    std::size_t block = 0;
    for (std::size_t g = b0; g < std::min(n, b0 + stride); ++g) block += scan.state_cells(g);
    block_peak = std::max(block_peak, block);
  }
  need = (need + block_peak) * sizeof(Cost) + n * sizeof(PointDecision);
  if (const std::size_t limit = resolved_limit(opts); need > limit) throw MemoryLimitExceeded(need, limit);

  std::vector<GapState> checkpoints;
  GapState cur = scan.initial(), next;
  for (std::size_t g = 0; g < n; ++g) {
    if (g % stride == 0) checkpoints.push_back(cur);
    scan.step(g, cur, next);
    std::swap(cur, next);
  }

  FlowTrace trace;
  trace.cost = cur.from_s[0];
  if (!trace.cost.reachable()) return trace;
  trace.decisions.resize(n);

  Target target{Side::S, 0, trace.cost};
  std::vector<GapState> block;
  for (std::size_t c = checkpoints.size(); c-- > 0;) {
    const std::size_t b0 = c * stride;
    const std::size_t b1 = std::min(n, b0 + stride);
    block.resize(b1 - b0);
    block[0] = checkpoints[c];
    for (std::size_t g = b0; g + 1 < b1; ++g) scan.step(g, block[g - b0], block[g - b0 + 1]);
    for (std::size_t g = b1; g-- > b0;) {
      target.value = target.value + (-scan.gap_after(g) * static_cast<std::int64_t>(target.y));
      trace.decisions[g] = backtrack_point(inst, g, block[g - b0], target);
    }
    checkpoints.pop_back();
  }
  if (target.y != 0 || target.value != Cost(0)) {
    throw InternalInconsistency("backward walk did not end in the empty state");
  }
  return trace;
}

Matching reconstruct_capacitated(const Instance& inst, const FlowTrace& trace) {
  const auto& order = inst.order();
  if (trace.decisions.size() != order.size()) {
    throw InternalInconsistency("decision count differs from point count");
  }
  // Pending senders, most remaining stubs first, then leftmost.
  struct Pending {
    std::int64_t remaining;
    std::size_t pos;
    bool operator<(const Pending& o) const {
      return remaining != o.remaining ? remaining < o.remaining : pos > o.pos;
    }
  };
  std::priority_queue<Pending> pending;
  Side pending_side = Side::S;
  std::vector<Pair> pairs;
  std::vector<Pending> taken;

  for (std::size_t g = 0; g < order.size(); ++g) {
    const PointRef p = order[g];
    const PointDecision d = trace.decisions[g];
    if (d.absorbed > 0) {
      if (pending_side == p.side || static_cast<std::int64_t>(pending.size()) == 0) {
        throw InternalInconsistency("point absorbs edges that are not pending toward it");
      }
      taken.clear();
      std::int64_t left = d.absorbed;
      // Distinct senders first; a shortfall means a zero-length duplicate
      // which is dropped rather than paired twice.
      while (left > 0 && !pending.empty()) {
        Pending top = pending.top();
        pending.pop();
        const PointRef q = order[top.pos];
        pairs.push_back(q.side == Side::S ? Pair{q.index, p.index} : Pair{p.index, q.index});
        --top.remaining;
        --left;
        taken.push_back(top);
      }
      for (auto& tk : taken) {
        while (left > 0 && tk.remaining > 0) {
          --tk.remaining;
          --left;
        }
        if (tk.remaining > 0) pending.push(tk);
      }
      if (left > 0) throw InternalInconsistency("point absorbs more edges than are pending");
    }
    if (d.emitted > 0) {
      if (!pending.empty() && pending_side != p.side) {
        throw InternalInconsistency("point opens edges while opposite edges are pending");
      }
      pending_side = p.side;
      pending.push(Pending{d.emitted, g});
    }
  }
  if (!pending.empty()) throw InternalInconsistency("edges left pending after the last point");

  Matching m;
  m.pairs = std::move(pairs);
  std::sort(m.pairs.begin(), m.pairs.end());
  m.cost = matching_cost(inst, m.pairs);
  const auto report = verify_matching(inst, m);
  if (!report.ok) {
    throw InternalInconsistency("reconstructed matching invalid: " + report.violations.front().message);
  }
  if (!trace.cost.reachable() || m.cost != trace.cost.value()) {
    std::ostringstream os;
    os << "reconstructed cost " << m.cost << " differs from DP value " << trace.cost;
    throw InternalInconsistency(os.str());
  }
  return m;
}

std::optional<Solution> solve_capacitated(const Instance& inst, const SolveOptions& opts) {
  if (!feasible(inst)) return std::nullopt;
  const FlowTrace trace = solve_trace(inst, opts);
  if (!trace.cost.reachable()) return std::nullopt;
  Solution sol;
  sol.matching = reconstruct_capacitated(inst, trace);
  sol.cost = sol.matching.cost;
  return sol;
}

CapCostTable prefix_table(const Instance& inst, const SolveOptions& opts) {
  CapCostTable table(inst);
  const std::size_t need = table.cells() * sizeof(Cost);
  if (const std::size_t limit = resolved_limit(opts); need > limit) throw MemoryLimitExceeded(need, limit);
  Scan scan(inst, opts);
  GapState cur = scan.initial(), next;
  for (std::size_t g = 0; g < scan.n(); ++g) {
    // q closes its prefix by taking x <= k of the edges pending toward it.
    const auto& in = cur.from(opposite(inst.order()[g].side));
    auto row = table.row(g);
    Cost run = Cost::unreachable();
    for (std::size_t k = 1; k <= row.size(); ++k) {
      if (k < in.size()) run = min(run, in[k]);
      row[k - 1] = run;
    }
    scan.step(g, cur, next);
    std::swap(cur, next);
  }
  return table;
}

}  // namespace capmatch::capdp
