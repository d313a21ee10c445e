#include "cyclab/constructions.hpp"

#include <stdexcept>

namespace cyclab {

namespace {

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

}  // namespace

ConstructionSpec parse_construction(const std::vector<std::string>& args) {
  if (args.empty()) throw std::invalid_argument("missing construction family");
  const std::string& name = args[0];
  auto want = [&](std::size_t count) {
    if (args.size() != count + 1)
      throw std::invalid_argument("family '" + name + "' takes " + std::to_string(count) +
                                  " parameter(s)");
  };
  ConstructionSpec spec;
  if (name == "complete-bipartite") {
    want(2);
    spec.family = ConstructionSpec::Family::COMPLETE_BIPARTITE;
    spec.k = parse_int(args[1]);
    spec.n = parse_int(args[2]);
  } else if (name == "join-k2-2kk") {
    want(1);
    spec.family = ConstructionSpec::Family::JOIN_K2_2KK;
    spec.k = parse_int(args[1]);
  } else if (name == "extremal-nonham") {
    want(2);
    spec.family = ConstructionSpec::Family::EXTREMAL_NONHAM;
    spec.n = parse_int(args[1]);
    spec.k = parse_int(args[2]);
  } else if (name == "half-join") {
    want(1);
    spec.family = ConstructionSpec::Family::HALF_JOIN;
    spec.n = parse_int(args[1]);
  } else if (name == "petersen") {
    want(0);
    spec.family = ConstructionSpec::Family::PETERSEN;
  } else if (name == "complete") {
    want(1);
    spec.family = ConstructionSpec::Family::COMPLETE;
    spec.n = parse_int(args[1]);
  } else {
    throw std::invalid_argument("unknown construction family '" + name + "'");
  }
  return spec;
}

Graph build(const ConstructionSpec& spec) {
  using Family = ConstructionSpec::Family;
  switch (spec.family) {
    case Family::COMPLETE_BIPARTITE: {
      if (spec.k < 1 || spec.k > spec.n - 1)
        throw std::invalid_argument("complete bipartite needs 1 <= k <= n-1");
      return join(empty_graph(spec.k), empty_graph(spec.n - spec.k));
    }
    case Family::JOIN_K2_2KK: {
      if (spec.k < 1) throw std::invalid_argument("join-k2-2kk needs k >= 1");
      return join(complete_graph(2),
                  disjoint_union(complete_graph(spec.k), complete_graph(spec.k)));
    }
    case Family::EXTREMAL_NONHAM: {
      int n = spec.n, k = spec.k;
      if (k < 1 || 2 * k > n - 1)
        throw std::invalid_argument("extremal-nonham needs 1 <= k <= (n-1)/2");
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n - k; ++u)
        for (int v = u + 1; v < n - k; ++v) edges.emplace_back(u, v);
      for (int x = n - k; x < n; ++x)
        for (int a = 0; a < k; ++a) edges.emplace_back(x, a);
      return Graph(n, edges);
    }
    case Family::HALF_JOIN: {
      int p = (spec.n - 1) / 2;
      if (p < 1) throw std::invalid_argument("half-join needs n >= 3");
      return join(complete_graph(p), empty_graph(spec.n - p));
    }
    case Family::PETERSEN:
      return petersen_graph();
    case Family::COMPLETE:
      if (spec.n < 0) throw std::invalid_argument("complete needs n >= 0");
      return complete_graph(spec.n);
  }
  throw std::invalid_argument("unknown construction family");
}

CycleCertificate route_ordered_cycle_bipartite(int k, int n, std::span<const int> t) {
  if (k < 1 || 2 * k > n) throw std::invalid_argument("routing needs 1 <= k <= n/2");
  int len = static_cast<int>(t.size());
  if (len < 2) throw std::invalid_argument("routing needs at least 2 terminals");
  if (len > k) throw std::invalid_argument("routing takes at most k terminals");
  VertexSet used;
  for (int v : t) {
    if (v < 0 || v >= n) throw std::invalid_argument("terminal out of range");
    if (used.test(v)) throw std::invalid_argument("terminals must be distinct");
    used.set(v);
  }
  Graph host = build({ConstructionSpec::Family::COMPLETE_BIPARTITE, n, k});

  auto in_a = [k](int v) { return v < k; };
  auto spare = [&](bool from_a) {
    int lo = from_a ? 0 : k, hi = from_a ? k : n;
    for (int v = lo; v < hi; ++v)
      if (!used.test(v)) {
        used.set(v);
        return v;
      }
    throw std::logic_error("routing ran out of spare vertices");
  };

  std::vector<int> cycle;
  for (int i = 0; i < len; ++i) {
    int cur = t[static_cast<std::size_t>(i)];
    int nxt = t[static_cast<std::size_t>((i + 1) % len)];
    cycle.push_back(cur);
    if (in_a(cur) == in_a(nxt)) cycle.push_back(spare(!in_a(cur)));
  }
  if (cycle.size() == 2) {
    // two cross-side terminals: detour through one spare of each side
    cycle.push_back(spare(in_a(cycle[0])));
    cycle.push_back(spare(!in_a(cycle[0])));
  }
  return CycleCertificate::checked(host, std::move(cycle));
}

}  // namespace cyclab
