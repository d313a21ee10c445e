#include "cyclab/invariants.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cyclab {

namespace {

// Dinic on the split digraph: vertex v becomes v_in = 2v, v_out = 2v+1 with
// a unit arc between them; every edge uv contributes unit arcs u_out->v_in
// and v_out->u_in. The max flow out(s) -> in(t) counts internally disjoint
// s-t paths.
class UnitFlow {
 public:
  explicit UnitFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  void add_arc(int from, int to) {
    arcs_.push_back({to, head_[static_cast<std::size_t>(from)], 1});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow(int s, int t, int cutoff) {
    int flow = 0;
    while (flow < cutoff && bfs(s, t)) {
      iter_ = head_;
      while (flow < cutoff) {
        int pushed = dfs(s, t);
        if (!pushed) break;
        flow += pushed;
      }
    }
    return flow;
  }

 private:
  struct Arc {
    int to, next, cap;
  };

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    level_[static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int e = head_[static_cast<std::size_t>(v)]; e >= 0; e = arcs_[e].next)
        if (arcs_[e].cap > 0 && level_[static_cast<std::size_t>(arcs_[e].to)] < 0) {
          level_[static_cast<std::size_t>(arcs_[e].to)] = level_[static_cast<std::size_t>(v)] + 1;
          queue.push_back(arcs_[e].to);
        }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  int dfs(int v, int t) {
    if (v == t) return 1;
    for (int& e = iter_[static_cast<std::size_t>(v)]; e >= 0; e = arcs_[e].next) {
      int to = arcs_[e].to;
      if (arcs_[e].cap > 0 &&
          level_[static_cast<std::size_t>(to)] == level_[static_cast<std::size_t>(v)] + 1 &&
          dfs(to, t)) {
        arcs_[e].cap -= 1;
        arcs_[e ^ 1].cap += 1;
        return 1;
      }
    }
    level_[static_cast<std::size_t>(v)] = -1;
    return 0;
  }

  std::vector<int> head_, iter_, level_;
  std::vector<Arc> arcs_;
};

int disjoint_paths(const Graph& g, int s, int t, int cutoff) {
  int n = g.n();
  UnitFlow flow(2 * n);
  for (int v = 0; v < n; ++v)
    if (v != s && v != t) flow.add_arc(2 * v, 2 * v + 1);
  for (int u = 0; u < n; ++u) {
    const VertexSet& nb = g.neighbors(u);
    for (int v = nb.next(u); v >= 0; v = nb.next(v)) {
      flow.add_arc(2 * u + 1, 2 * v);
      flow.add_arc(2 * v + 1, 2 * u);
    }
  }
  // source leaves from out(s); sink is entered at in(t); the source and sink
  // themselves are uncapacitated
  return flow.max_flow(2 * s + 1, 2 * t, cutoff);
}

}  // namespace

long long edge_count(const Graph& g) {
  long long twice = 0;
  for (int v = 0; v < g.n(); ++v) twice += g.degree(v);
  return twice / 2;
}

int min_degree(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("minimum degree of the empty graph is undefined");
  int d = g.n();
  for (int v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
  return d;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degs(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) degs[static_cast<std::size_t>(v)] = g.degree(v);
  std::sort(degs.rbegin(), degs.rend());
  return degs;
}

int vertex_connectivity(const Graph& g) {
  int n = g.n();
  if (n == 0) throw std::invalid_argument("connectivity of the empty graph is undefined");
  if (n == 1) return 0;
  if (edge_count(g) == static_cast<long long>(n) * (n - 1) / 2) return n - 1;

  // Every minimum cut misses some vertex of N[s*] for a minimum-degree s*,
  // so flows from s* and each of its neighbours to their non-neighbours
  // dominate all cuts.
  int sstar = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(sstar)) sstar = v;

  int best = n - 1;
  std::vector<int> sources{sstar};
  for (int v = g.neighbors(sstar).first(); v >= 0; v = g.neighbors(sstar).next(v))
    sources.push_back(v);
  for (int s : sources) {
    for (int t = 0; t < n && best > 0; ++t) {
      if (t == s || g.adjacent(s, t)) continue;
      best = std::min(best, disjoint_paths(g, s, t, best));
    }
    if (best == 0) break;
  }
  return best;
}

std::pair<int, VertexSet> independence_number(const Graph& g) {
  int n = g.n();
  if (n == 0) throw std::invalid_argument("independence number of the empty graph is undefined");

  // Branch and bound; the bound is a greedy partition of the candidate set
  // into cliques (at most one independent vertex per clique).
  VertexSet best_set;
  int best = 0;
  auto clique_cover_bound = [&g](VertexSet p) {
    int cliques = 0;
    while (!p.empty()) {
      ++cliques;
      int v = p.first();
      p.reset(v);
      VertexSet common = g.neighbors(v) & p;
      while (!common.empty()) {
        int u = common.first();
        p.reset(u);
        common &= g.neighbors(u);
        common &= p;
      }
    }
    return cliques;
  };

  auto expand = [&](auto&& self, VertexSet cur, int cur_size, VertexSet cand) -> void {
    if (cur_size > best) {
      best = cur_size;
      best_set = cur;
    }
    if (cand.empty() || cur_size + clique_cover_bound(cand) <= best) return;
    // branch on a candidate of maximum degree inside the candidate set
    int pick = cand.first(), pick_deg = -1;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      int d = (g.neighbors(v) & cand).count();
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    VertexSet with = cur;
    with.set(pick);
    VertexSet rest = cand.minus(g.neighbors(pick));
    rest.reset(pick);
    self(self, with, cur_size + 1, rest);
    VertexSet without = cand;
    without.reset(pick);
    self(self, cur, cur_size, without);
  };
  expand(expand, VertexSet{}, 0, VertexSet::universe(n));

  // the witness must be independent; re-check by adjacency scan
  for (int v = best_set.first(); v >= 0; v = best_set.next(v))
    if (g.neighbors(v).intersects(best_set))
      throw std::logic_error("independence witness is not independent");
  return {best, best_set};
}

std::optional<long long> sigma_k(const Graph& g, int k) {
  int n = g.n();
  if (k < 1 || k > n) throw std::invalid_argument("k out of range for sigma_k");
  long long best = std::numeric_limits<long long>::max();

  auto rec = [&](auto&& self, int start, int left, long long sum, const VertexSet& banned) -> void {
    if (left == 0) {
      best = std::min(best, sum);
      return;
    }
    if (sum >= best) return;  // degrees are nonnegative
    for (int v = start; v <= n - left; ++v) {
      if (banned.test(v)) continue;
      VertexSet nb = banned | g.neighbors(v);
      self(self, v + 1, left - 1, sum + g.degree(v), nb);
    }
  };
  rec(rec, 0, k, 0, VertexSet{});
  if (best == std::numeric_limits<long long>::max()) return std::nullopt;
  return best;
}

InvariantReport compute_report(const Graph& g, std::span<const int> sigma_ks,
                               const CycleBudget& budget) {
  if (g.n() == 0) throw std::invalid_argument("invariant report needs n >= 1");
  InvariantReport r;
  r.n = g.n();
  r.m = edge_count(g);
  r.min_degree = min_degree(g);
  r.connectivity = vertex_connectivity(g);
  r.independence = independence_number(g).first;
  auto [c, cert] = circumference(g, budget);
  r.circumference = c;
  r.hamiltonian = g.n() >= 3 && c == g.n();
  for (int k : sigma_ks) r.sigma[k] = sigma_k(g, k);

  if (r.connectivity > r.min_degree)
    throw std::logic_error("connectivity exceeded minimum degree");
  if (auto it = r.sigma.find(1); it != r.sigma.end() && it->second != r.min_degree)
    throw std::logic_error("sigma_1 disagreed with the minimum degree");
  return r;
}

}  // namespace cyclab
