#ifndef CYCLAB_CYCLES_HPP
#define CYCLAB_CYCLES_HPP

#include <chrono>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclab/graph.hpp"

namespace cyclab {

// Explicit cycle witness: consecutive vertices (including last->first) are
// adjacent in the host graph and all entries are distinct. Validity is
// enforced on every construction, in release builds too.
struct CycleCertificate {
  std::vector<int> vertices;

  static CycleCertificate checked(const Graph& g, std::vector<int> verts);
  bool validates(const Graph& g) const;
  int length() const { return static_cast<int>(vertices.size()); }
};

// Result of a cyclability query. Universal queries (is_k_cyclable,
// is_k_ordered) populate exactly one of certificate / counterexample:
// the witness cycle for the first subset when the property holds, the
// lexicographically first failing subset or sequence when it does not.
// Existential queries populate the certificate iff they hold.
struct CyclabilityVerdict {
  bool holds = false;
  std::optional<CycleCertificate> certificate;
  std::optional<std::vector<int>> counterexample;
};

// Exact-solve budget. The subset DP is O(2^m) in the size m of the largest
// relevant component; instances above max_dp_vertices are reported as budget
// errors, never approximated. Hamiltonicity alone has certified fallbacks for
// oversize instances (closure completion, cut obstructions); when neither
// decides, that is a budget error as well.
struct CycleBudget {
  int max_dp_vertices = 20;
  int max_cut_search = 5;
  long long per_graph_ms = 0;                        // corpus drivers refresh the deadline per graph
  std::chrono::steady_clock::time_point deadline{};  // absolute; zero = no deadline

  bool has_deadline() const { return deadline != std::chrono::steady_clock::time_point{}; }
  CycleBudget with_fresh_deadline() const {
    CycleBudget b = *this;
    if (b.per_graph_ms > 0)
      b.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(b.per_graph_ms);
    return b;
  }
};

class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Longest cycle length plus one witness; 0 and no certificate for acyclic
// graphs.
std::pair<int, std::optional<CycleCertificate>> circumference(const Graph& g,
                                                              const CycleBudget& budget = {});

// flag <=> circumference(g) == n (n >= 3; smaller graphs are never
// hamiltonian). Oversize instances are decided when the Bondy-Chvatal closure
// completes (the certificate is pulled back into g) or when a small vertex
// cut leaves more components than its size.
std::pair<bool, std::optional<CycleCertificate>> is_hamiltonian(const Graph& g,
                                                                const CycleBudget& budget = {});

// Does some cycle contain every vertex of S? |S| >= 2.
CyclabilityVerdict is_cyclable_set(const Graph& g, const VertexSet& s,
                                   const CycleBudget& budget = {});

// Does every k-subset lie on a common cycle? 2 <= k <= n.
CyclabilityVerdict is_k_cyclable(const Graph& g, int k, const CycleBudget& budget = {});

// Does some cycle visit the distinct vertices of T in the given cyclic order
// (either traversal orientation)? |T| >= 2.
CyclabilityVerdict has_ordered_cycle(const Graph& g, std::span<const int> t,
                                     const CycleBudget& budget = {});

// Does every sequence of k distinct vertices lie on a common cycle in that
// order? Sequences are enumerated up to rotation and reversal.
CyclabilityVerdict is_k_ordered(const Graph& g, int k, const CycleBudget& budget = {});

// Not hamiltonian, but every single-vertex deletion is.
bool is_hypohamiltonian(const Graph& g, const CycleBudget& budget = {});

// Batched cyclability: one reachability sweep per (component, anchor) pair
// answers every "does some cycle cover S" query against the same graph in
// O(|S|). Component tables are built lazily on first touch.
class CyclabilityOracle {
 public:
  explicit CyclabilityOracle(const Graph& g, const CycleBudget& budget = {});
  ~CyclabilityOracle();
  CyclabilityOracle(CyclabilityOracle&&) noexcept;
  CyclabilityOracle& operator=(CyclabilityOracle&&) noexcept;

  // |S| >= 1; true iff some cycle of g contains all of S
  bool cyclable(const VertexSet& s) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cyclab

#endif
