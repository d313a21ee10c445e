#include "cyclab/graph.hpp"

namespace cyclab {

Graph complement(const Graph& g) {
  int n = g.n();
  VertexSet uni = VertexSet::universe(n);
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) {
    rows[v] = uni.minus(g.neighbors(v));
    rows[v].reset(v);
  }
  return Graph::from_rows(n, std::move(rows));
}

Graph join(const Graph& g1, const Graph& g2) {
  int n1 = g1.n(), n2 = g2.n();
  if (n1 + n2 > kMaxVertices) throw std::invalid_argument("join exceeds vertex cap");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n1; ++v)
    for (int u = g1.neighbors(v).next(v); u >= 0; u = g1.neighbors(v).next(u))
      edges.emplace_back(v, u);
  for (int v = 0; v < n2; ++v)
    for (int u = g2.neighbors(v).next(v); u >= 0; u = g2.neighbors(v).next(u))
      edges.emplace_back(n1 + v, n1 + u);
  for (int v = 0; v < n1; ++v)
    for (int u = 0; u < n2; ++u) edges.emplace_back(v, n1 + u);
  return Graph(n1 + n2, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  int n1 = g1.n(), n2 = g2.n();
  if (n1 + n2 > kMaxVertices) throw std::invalid_argument("union exceeds vertex cap");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n1; ++v)
    for (int u = g1.neighbors(v).next(v); u >= 0; u = g1.neighbors(v).next(u))
      edges.emplace_back(v, u);
  for (int v = 0; v < n2; ++v)
    for (int u = g2.neighbors(v).next(v); u >= 0; u = g2.neighbors(v).next(u))
      edges.emplace_back(n1 + v, n1 + u);
  return Graph(n1 + n2, edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> local_of(g.n(), -1);
  std::vector<int> verts = keep.to_vector();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] >= g.n()) throw std::invalid_argument("kept vertex out of range");
    local_of[verts[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (int v : verts) {
    VertexSet nb = g.neighbors(v) & keep;
    for (int u = nb.next(v); u >= 0; u = nb.next(u)) edges.emplace_back(local_of[v], local_of[u]);
  }
  return Graph(static_cast<int>(verts.size()), edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u) edges.emplace_back(v, u);
  return Graph(n, edges);
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  return Graph(10, edges);
}

}  // namespace cyclab
