#include "capmatch/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

namespace capmatch::oracle {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t dist(Coord a, Coord b) { return a > b ? a - b : b - a; }

class FlowGraph {
 public:
  struct Arc {
    int to;
    std::int64_t cap;
    std::int64_t cost;
  };

  explicit FlowGraph(int n) : adj_(n) {}

  int add(int u, int v, std::int64_t cap, std::int64_t cost) {
    adj_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap, cost});
    adj_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, 0, -cost});
    return static_cast<int>(arcs_.size()) - 2;
  }

  const Arc& arc(int id) const { return arcs_[id]; }

  // Sends up to `want` units from src to snk along cheapest paths; returns
  // (flow, cost). All arc costs are non-negative on entry.
  std::pair<std::int64_t, std::int64_t> min_cost_flow(int src, int snk, std::int64_t want) {
    const int n = static_cast<int>(adj_.size());
    std::vector<std::int64_t> pot(n, 0), d(n);
    std::vector<int> prev_arc(n);
    std::int64_t flow = 0, cost = 0;
    using Item = std::pair<std::int64_t, int>;
    while (flow < want) {
      std::fill(d.begin(), d.end(), kInf);
      std::fill(prev_arc.begin(), prev_arc.end(), -1);
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
      d[src] = 0;
      pq.push({0, src});
      while (!pq.empty()) {
        const auto [du, u] = pq.top();
        pq.pop();
        if (du != d[u]) continue;
        for (int id : adj_[u]) {
          const Arc& a = arcs_[id];
          if (a.cap <= 0) continue;
          const std::int64_t nd = du + a.cost + pot[u] - pot[a.to];
          if (nd < d[a.to]) {
            d[a.to] = nd;
            prev_arc[a.to] = id;
            pq.push({nd, a.to});
          }
        }
      }
      if (d[snk] == kInf) break;
      for (int v = 0; v < n; ++v) {
        if (d[v] < kInf) pot[v] += d[v];
      }
      std::int64_t push = want - flow;
      for (int v = snk; v != src; v = arcs_[prev_arc[v] ^ 1].to) push = std::min(push, arcs_[prev_arc[v]].cap);
      for (int v = snk; v != src; v = arcs_[prev_arc[v] ^ 1].to) {
        arcs_[prev_arc[v]].cap -= push;
        arcs_[prev_arc[v] ^ 1].cap += push;
        cost += push * arcs_[prev_arc[v]].cost;
      }
      flow += push;
    }
    return {flow, cost};
  }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

struct Enumerator {
  const Instance& inst;
  std::size_t ns, nt;
  std::vector<std::int64_t> deg_s, deg_t;
  std::vector<Pair> chosen;
  std::int64_t cost = 0;
  bool stop_at_first = false;
  bool found = false;
  std::int64_t best = kInf;
  std::vector<Pair> best_pairs;

  explicit Enumerator(const Instance& in)
      : inst(in), ns(in.size(Side::S)), nt(in.size(Side::T)), deg_s(ns, 0), deg_t(nt, 0) {}

  // Pairs are decided in row-major order; pair p = (p / nt, p % nt).
  void run(std::size_t p) {
    if (stop_at_first && found) return;
    if (cost > best) return;
    const std::size_t i = p / nt, j = p % nt;
    if (p == ns * nt) {
      for (std::size_t b = 0; b < nt; ++b) {
        if (deg_t[b] < 1) return;
      }
      found = true;
      if (cost < best || (cost == best && chosen < best_pairs)) {
        best = cost;
        best_pairs = chosen;
      }
      return;
    }
    // Row i is finished once j wraps; s_i must be covered by then.
    if (j == 0 && i > 0 && deg_s[i - 1] < 1) return;
    // t_j has rows i..ns-1 left to pick from.
    const auto s_caps = inst.caps(Side::S);
    const auto t_caps = inst.caps(Side::T);
    if (deg_s[i] < s_caps[i] && deg_t[j] < t_caps[j]) {
      ++deg_s[i];
      ++deg_t[j];
      chosen.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      const std::int64_t d = dist(inst.coords(Side::S)[i], inst.coords(Side::T)[j]);
      cost += d;
      run(p + 1);
      cost -= d;
      chosen.pop_back();
      --deg_s[i];
      --deg_t[j];
    }
    // Skipping is only possible if t_j can still be covered by a later row.
    if (i + 1 < ns || deg_t[j] >= 1) {
      if (!(j + 1 == nt && deg_s[i] < 1)) run(p + 1);
    }
  }
};

void check_tiny(const Instance& inst) {
  if (inst.size(Side::S) * inst.size(Side::T) > 20) {
    throw TooLarge("enumeration needs |S| * |T| <= 20");
  }
}

}  // namespace

std::optional<Result> solve_flow(const Instance& inst, std::size_t size_limit) {
  if (inst.total() > size_limit) throw TooLarge("instance exceeds the flow oracle size limit");
  const auto ns = static_cast<int>(inst.size(Side::S));
  const auto nt = static_cast<int>(inst.size(Side::T));
  // src, snk, s-points, t-points, super source, super sink
  const int src = 0, snk = 1, s0 = 2, t0 = 2 + ns, ss = 2 + ns + nt, tt = ss + 1;
  FlowGraph g(tt + 1);
  const auto sc = inst.coords(Side::S), tc = inst.coords(Side::T);
  const auto sa = inst.caps(Side::S), tb = inst.caps(Side::T);

  // Lower bound 1 on src->s_i and t_j->snk moved onto the super terminals.
  for (int i = 0; i < ns; ++i) {
    g.add(src, s0 + i, sa[i] - 1, 0);
    g.add(ss, s0 + i, 1, 0);
  }
  g.add(src, tt, ns, 0);
  std::vector<int> pair_arc(static_cast<std::size_t>(ns) * nt);
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nt; ++j) pair_arc[i * nt + j] = g.add(s0 + i, t0 + j, 1, dist(sc[i], tc[j]));
  }
  for (int j = 0; j < nt; ++j) {
    g.add(t0 + j, snk, tb[j] - 1, 0);
    g.add(t0 + j, tt, 1, 0);
  }
  g.add(ss, snk, nt, 0);
  g.add(snk, src, kInf, 0);

  const std::int64_t need = ns + nt;
  const auto [flow, cost] = g.min_cost_flow(ss, tt, need);
  if (flow < need) return std::nullopt;

  Result r;
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nt; ++j) {
      if (g.arc(pair_arc[i * nt + j]).cap == 0) {
        r.matching.pairs.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      }
    }
  }
  r.matching.cost = matching_cost(inst, r.matching.pairs);
  r.cost = r.matching.cost;
  if (r.cost != cost) throw std::logic_error("flow cost differs from the cost of its pairs");
  return r;
}

std::optional<Result> brute_force_tiny(const Instance& inst) {
  check_tiny(inst);
  Enumerator en(inst);
  en.run(0);
  if (!en.found) return std::nullopt;
  Result r;
  r.matching.pairs = std::move(en.best_pairs);
  r.matching.cost = en.best;
  r.cost = en.best;
  return r;
}

bool has_matching(const Instance& inst) {
  check_tiny(inst);
  Enumerator en(inst);
  en.stop_at_first = true;
  en.run(0);
  return en.found;
}

std::int64_t exhaustive_unlimited(const Instance& inst) {
  const bool s_small = inst.size(Side::S) <= inst.size(Side::T);
  const Side small = s_small ? Side::S : Side::T;
  const auto sc = inst.coords(small), lc = inst.coords(opposite(small));
  const std::size_t q = sc.size();
  if (q > 10) throw TooLarge("edge-cover enumeration needs min(|S|, |T|) <= 10");
  const std::size_t full = (std::size_t{1} << q) - 1;

  std::vector<std::int64_t> dp(full + 1, kInf), next(full + 1), subset_cost(full + 1);
  dp[0] = 0;
  for (Coord p : lc) {
    for (std::size_t u = 1; u <= full; ++u) {
      const auto low = static_cast<std::size_t>(__builtin_ctzll(u));
      subset_cost[u] = subset_cost[u & (u - 1)] + dist(p, sc[low]);
    }
    std::fill(next.begin(), next.end(), kInf);
    for (std::size_t mask = 0; mask <= full; ++mask) {
      if (dp[mask] == kInf) continue;
      for (std::size_t u = 1; u <= full; ++u) {
        const std::int64_t c = dp[mask] + subset_cost[u];
        if (c < next[mask | u]) next[mask | u] = c;
      }
    }
    dp.swap(next);
  }
  return dp[full];
}

}  // namespace capmatch::oracle
