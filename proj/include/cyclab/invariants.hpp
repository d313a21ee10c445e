#ifndef CYCLAB_INVARIANTS_HPP
#define CYCLAB_INVARIANTS_HPP

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cyclab/cycles.hpp"
#include "cyclab/graph.hpp"

namespace cyclab {

long long edge_count(const Graph& g);
int min_degree(const Graph& g);                  // n >= 1
std::vector<int> degree_sequence(const Graph& g);  // non-increasing

// Minimum vertex cut size, with kappa(K_n) = n-1 and 0 for disconnected
// graphs. Unit-capacity max flow on the vertex-split digraph, minimized over
// a dominating family of source/sink pairs.
int vertex_connectivity(const Graph& g);  // n >= 1

// Maximum independent set size plus one witness set.
std::pair<int, VertexSet> independence_number(const Graph& g);  // n >= 1

// Minimum degree sum over independent sets of size k; nullopt when alpha < k.
std::optional<long long> sigma_k(const Graph& g, int k);  // 1 <= k <= n

// Everything the claim catalog consumes about one graph; circumference and
// the hamiltonicity flag come from the cycle engine.
struct InvariantReport {
  int n = 0;
  long long m = 0;
  int min_degree = 0;
  int connectivity = 0;
  int independence = 0;
  int circumference = 0;
  bool hamiltonian = false;
  std::map<int, std::optional<long long>> sigma;
};

InvariantReport compute_report(const Graph& g, std::span<const int> sigma_ks,
                               const CycleBudget& budget = {});

}  // namespace cyclab

#endif
