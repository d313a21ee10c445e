#ifndef CYCLAB_EXPLORER_HPP
#define CYCLAB_EXPLORER_HPP

#include <optional>
#include <string>
#include <vector>

#include "cyclab/cycles.hpp"
#include "cyclab/graph.hpp"

namespace cyclab {

// Isomorph-free enumeration by orderly vertex augmentation: a labeled graph
// is canonical when its column-ordered upper-triangle bit string is the
// lexicographic minimum over all relabelings; deleting the last vertex of a
// canonical graph is again canonical, so extending canonical graphs by one
// vertex and keeping the canonical extensions yields every isomorphism class
// exactly once.
struct EnumOptions {
  int builtin_limit = 9;
  long long max_edges = -1;  // < 0: unbounded
  unsigned jobs = 1;
};

// true iff the identity labeling attains the lexicographic minimum
bool is_canonical_labeling(const Graph& g);

// all non-isomorphic graphs of order exactly n, sorted by graph6 record
std::vector<Graph> enumerate_graphs(int n, const EnumOptions& options = {});

// levels[i] holds order i+1; shares the work across orders
std::vector<std::vector<Graph>> enumerate_levels(int n, const EnumOptions& options = {});

// Where a corpus comes from: the builtin enumerator or an external graph6
// file with one record per line.
struct CorpusSource {
  enum class Kind { BUILTIN, FILE };
  Kind kind = Kind::BUILTIN;
  int builtin_limit = 9;
  std::string path;

  static CorpusSource builtin(int limit = 9) { return {Kind::BUILTIN, limit, {}}; }
  static CorpusSource file(std::string p) { return {Kind::FILE, 0, std::move(p)}; }

  // graphs of order exactly n (files are filtered; parse errors carry line
  // numbers)
  std::vector<Graph> graphs_of_order(int n, unsigned jobs = 1) const;
};

std::vector<Graph> read_graph6_file(const std::string& path);

// Per-k row of the conjecture tables: do all k-cyclable graphs of this order
// satisfy c > k, and c >= 2k? Rows with no k-cyclable graph at all are
// vacuously true and flagged.
struct ExplorationRow {
  int k = 0;
  bool all_c_gt_k = true;
  bool all_c_ge_2k = true;
  bool vacuous = true;
  std::optional<std::string> witness_c_gt_k;   // lexicographically first failure
  std::optional<std::string> witness_c_ge_2k;
};

struct ExplorationResult {
  int n = 0;
  std::vector<ExplorationRow> rows;  // k = 2..n
  std::optional<int> f;              // largest k with all_c_gt_k
  std::optional<int> g;              // largest k with all_c_ge_2k

  std::string to_json() const;
  std::string to_csv() const;  // columns: n,k,all_c_gt_k,all_c_ge_2k,vacuous,witness
};

ExplorationResult compute_fg(int n, const std::vector<Graph>& corpus,
                             const CycleBudget& budget = {}, unsigned jobs = 1);

struct ExtremalResult {
  int n = 0;
  int k = 0;
  std::optional<long long> max_edges;  // empty when no nonhamiltonian k-connected graph exists
  std::vector<std::string> witnesses;  // all attaining graphs, sorted
  long long considered = 0;

  std::string to_json() const;
};

ExtremalResult max_edges_nonhamiltonian(int n, int k, const std::vector<Graph>& corpus,
                                        const CycleBudget& budget = {}, unsigned jobs = 1);

}  // namespace cyclab

#endif
