#ifndef CYCLAB_GRAPH_HPP
#define CYCLAB_GRAPH_HPP

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#ifndef CYCLAB_MAX_VERTICES
#define CYCLAB_MAX_VERTICES 64
#endif

namespace cyclab {

inline constexpr int kMaxVertices = CYCLAB_MAX_VERTICES;
inline constexpr int kSetWords = (kMaxVertices + 63) / 64;
static_assert(kMaxVertices >= 4, "the toolkit needs room for at least K_4");

// Fixed-capacity set of vertex indices. With the default cap of 64 every
// operation compiles down to single machine-word instructions.
struct VertexSet {
  std::array<std::uint64_t, kSetWords> words{};

  static VertexSet single(int v) {
    VertexSet s;
    s.set(v);
    return s;
  }

  // {0, 1, ..., n-1}
  static VertexSet universe(int n) {
    VertexSet s;
    for (int w = 0; w < kSetWords; ++w) {
      int lo = w * 64;
      if (n <= lo) break;
      int span = n - lo >= 64 ? 64 : n - lo;
      s.words[w] = span == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << span) - 1);
    }
    return s;
  }

  bool test(int v) const { return (words[v >> 6] >> (v & 63)) & 1; }
  void set(int v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words)
      if (w) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kSetWords; ++i)
      if (words[i] & o.words[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (int i = 0; i < kSetWords; ++i)
      if (words[i] & ~o.words[i]) return false;
    return true;
  }

  // smallest element, -1 when empty
  int first() const {
    for (int i = 0; i < kSetWords; ++i)
      if (words[i]) return i * 64 + std::countr_zero(words[i]);
    return -1;
  }

  // smallest element > v, -1 when none
  int next(int v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    int i = v >> 6;
    std::uint64_t w = words[i] >> (v & 63);
    if (w) return v + std::countr_zero(w);
    for (++i; i < kSetWords; ++i)
      if (words[i]) return i * 64 + std::countr_zero(words[i]);
    return -1;
  }

  VertexSet operator&(const VertexSet& o) const {
    VertexSet r;
    for (int i = 0; i < kSetWords; ++i) r.words[i] = words[i] & o.words[i];
    return r;
  }
  VertexSet operator|(const VertexSet& o) const {
    VertexSet r;
    for (int i = 0; i < kSetWords; ++i) r.words[i] = words[i] | o.words[i];
    return r;
  }
  // set difference
  VertexSet minus(const VertexSet& o) const {
    VertexSet r;
    for (int i = 0; i < kSetWords; ++i) r.words[i] = words[i] & ~o.words[i];
    return r;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kSetWords; ++i) words[i] &= o.words[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kSetWords; ++i) words[i] |= o.words[i];
    return *this;
  }

  bool operator==(const VertexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }
};

// Immutable simple graph on vertices 0..n-1, adjacency stored as one bitrow
// per vertex. Symmetry and irreflexivity are asserted on every construction.
class Graph {
 public:
  Graph() = default;

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(alloc(n)) {
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loops are not allowed");
      rows_[u].set(v);
      rows_[v].set(u);
    }
    check_invariants();
  }

  static Graph from_rows(int n, std::vector<VertexSet> rows) {
    Graph g(alloc(n));
    if (static_cast<int>(rows.size()) != n)
      throw std::invalid_argument("row count does not match vertex count");
    g.rows_ = std::move(rows);
    VertexSet uni = VertexSet::universe(n);
    for (int v = 0; v < n; ++v) {
      if (!g.rows_[v].is_subset_of(uni) || g.rows_[v].test(v))
        throw std::invalid_argument("adjacency row out of range or reflexive");
      for (int u = g.rows_[v].first(); u >= 0; u = g.rows_[v].next(u))
        if (!g.rows_[u].test(v)) throw std::invalid_argument("adjacency not symmetric");
    }
    return g;
  }

  int n() const { return n_; }
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].count(); }

  Graph with_edge(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("bad edge");
    Graph g = *this;
    g.rows_[u].set(v);
    g.rows_[v].set(u);
    return g;
  }

  bool operator==(const Graph&) const = default;

 private:
  struct Alloc {
    int n;
  };
  static Alloc alloc(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices)
      throw std::invalid_argument("vertex count " + std::to_string(n) +
                                  " exceeds build cap " + std::to_string(kMaxVertices));
    return {n};
  }
  explicit Graph(Alloc a) : n_(a.n), rows_(static_cast<std::size_t>(a.n)) {}

  void check_invariants() const {
#ifndef NDEBUG
    for (int v = 0; v < n_; ++v) {
      assert(!rows_[v].test(v));
      for (int u = rows_[v].first(); u >= 0; u = rows_[v].next(u)) assert(rows_[u].test(v));
    }
#endif
  }

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

// combinators
Graph complement(const Graph& g);
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
// keeps the relative order of the kept vertices
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// named families
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph path_graph(int n);
Graph petersen_graph();  // Kneser K(5,2); vertex i = i-th 2-subset of {0..4} in lex order

// graph6 text format, one record per line: ASCII offset 63, 6-bit groups,
// upper triangle in column order. Parse errors carry the byte offset.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

}  // namespace cyclab

#endif
