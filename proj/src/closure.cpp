#include "cyclab/closure.hpp"

#include <algorithm>
#include <deque>

namespace cyclab {

std::pair<Graph, std::vector<std::pair<int, int>>> bondy_chvatal_closure_trace(const Graph& g) {
  int n = g.n();
  std::vector<VertexSet> rows(n);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) {
    rows[v] = g.neighbors(v);
    deg[v] = rows[v].count();
  }

  // Worklist of candidate pairs; when an edge lands, only pairs touching its
  // endpoints can newly qualify, so those are re-enqueued.
  std::deque<std::pair<int, int>> queue;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!rows[u].test(v)) queue.emplace_back(u, v);

  std::vector<std::pair<int, int>> added;
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    if (rows[u].test(v) || deg[u] + deg[v] < n) continue;
    rows[u].set(v);
    rows[v].set(u);
    ++deg[u];
    ++deg[v];
    added.emplace_back(u, v);
    for (int w : {u, v})
      for (int x = 0; x < n; ++x)
        if (x != w && !rows[w].test(x)) queue.emplace_back(std::min(w, x), std::max(w, x));
  }
  return {Graph::from_rows(n, std::move(rows)), std::move(added)};
}

Graph bondy_chvatal_closure(const Graph& g) { return bondy_chvatal_closure_trace(g).first; }

bool closed_nonadjacent_bound_holds(const Graph& g) {
  int n = g.n();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && g.degree(u) + g.degree(v) >= n) return false;
  return true;
}

bool is_closed(const Graph& g) { return closed_nonadjacent_bound_holds(g); }

std::optional<std::vector<int>> hamiltonian_cycle_from_closure(const Graph& g) {
  int n = g.n();
  if (n < 3) return std::nullopt;
  auto [cl, added] = bondy_chvatal_closure_trace(g);
  for (int v = 0; v < n; ++v)
    if (cl.degree(v) != n - 1) return std::nullopt;

  std::vector<int> cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = i;

  // Walk the trace backwards. Before dropping edge (x, y) the current graph
  // is g plus every earlier edge, where d(x) + d(y) >= n held; so if the
  // cycle uses (x, y), write it as a path x = p_1, ..., p_n = y and pick i
  // with p_i ~ y and p_{i+1} ~ x. Rerouting through those two edges removes
  // (x, y) without touching any edge dropped later.
  Graph current = cl;
  for (auto it = added.rbegin(); it != added.rend(); ++it) {
    auto [x, y] = *it;
    {
      std::vector<VertexSet> rows(n);
      for (int v = 0; v < n; ++v) rows[v] = current.neighbors(v);
      rows[x].reset(y);
      rows[y].reset(x);
      current = Graph::from_rows(n, std::move(rows));
    }
    // locate x in the cycle and check whether x, y are consecutive
    auto pos = std::find(cycle.begin(), cycle.end(), x) - cycle.begin();
    std::rotate(cycle.begin(), cycle.begin() + pos, cycle.end());
    if (cycle[1] == y) std::reverse(cycle.begin() + 1, cycle.end());
    if (cycle[n - 1] != y) continue;  // edge not on the cycle

    int cross = -1;
    for (int i = 1; i + 1 < n; ++i)
      if (current.adjacent(cycle[i], y) && current.adjacent(cycle[i + 1], x)) {
        cross = i;
        break;
      }
    if (cross < 0) throw std::logic_error("closure lift: no crossing despite degree condition");
    std::reverse(cycle.begin() + cross + 1, cycle.end());
  }
  return cycle;
}

}  // namespace cyclab
