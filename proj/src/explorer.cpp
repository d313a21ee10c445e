#include "cyclab/explorer.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "cyclab/invariants.hpp"

namespace cyclab {

namespace {

// column p of the upper-triangle string, most significant bit = row 0
std::uint32_t column_bits(const Graph& g, int p) {
  std::uint32_t col = 0;
  for (int i = 0; i < p; ++i) col = (col << 1) | (g.adjacent(i, p) ? 1u : 0u);
  return col;
}

template <class Fn>
void parallel_chunks(std::size_t count, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || count < 2) {
    fn(0u, std::size_t{0}, count);
    return;
  }
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(count, begin + chunk);
    threads.emplace_back([&fn, &errors, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

void merge_min(std::optional<std::string>& into, const std::optional<std::string>& from) {
  if (from && (!into || *from < *into)) into = from;
}

}  // namespace

bool is_canonical_labeling(const Graph& g) {
  int n = g.n();
  if (n <= 1) return true;
  std::vector<std::uint32_t> target(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) target[static_cast<std::size_t>(p)] = column_bits(g, p);

  // DFS over position assignments; a branch survives only while its columns
  // tie the identity labeling, and any strictly smaller column kills
  // canonicity outright.
  std::vector<int> chosen(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto dfs = [&](auto&& self, int depth) -> bool {  // true = smaller labeling found
    if (depth == n) return false;
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < depth; ++i)
        col = (col << 1) | (g.adjacent(w, chosen[static_cast<std::size_t>(i)]) ? 1u : 0u);
      if (col > target[static_cast<std::size_t>(depth)]) continue;
      if (col < target[static_cast<std::size_t>(depth)]) return true;
      chosen[static_cast<std::size_t>(depth)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      bool smaller = self(self, depth + 1);
      used[static_cast<std::size_t>(w)] = 0;
      if (smaller) return true;
    }
    return false;
  };
  return !dfs(dfs, 0);
}

std::vector<std::vector<Graph>> enumerate_levels(int n, const EnumOptions& options) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > options.builtin_limit)
    throw std::invalid_argument(
        "builtin enumeration is limited to n <= " + std::to_string(options.builtin_limit) +
        "; supply an external graph6 corpus for larger orders");

  std::vector<std::vector<Graph>> levels;
  levels.push_back({empty_graph(1)});
  for (int order = 2; order <= n; ++order) {
    const std::vector<Graph>& parents = levels.back();
    std::uint64_t subsets = std::uint64_t{1} << (order - 1);
    std::vector<std::vector<Graph>> parts(std::max(1u, options.jobs));
    parallel_chunks(parents.size(), options.jobs,
                    [&](unsigned w, std::size_t begin, std::size_t end) {
                      std::vector<Graph>& out = parts[w];
                      for (std::size_t i = begin; i < end; ++i) {
                        const Graph& parent = parents[i];
                        long long pm = edge_count(parent);
                        for (std::uint64_t s = 0; s < subsets; ++s) {
                          if (options.max_edges >= 0 &&
                              pm + std::popcount(s) > options.max_edges)
                            continue;
                          std::vector<std::pair<int, int>> extra;
                          for (int v = 0; v < order - 1; ++v)
                            if ((s >> v) & 1) extra.emplace_back(v, order - 1);
                          std::vector<VertexSet> rows(static_cast<std::size_t>(order));
                          for (int v = 0; v < order - 1; ++v)
                            rows[static_cast<std::size_t>(v)] = parent.neighbors(v);
                          for (auto [u, v] : extra) {
                            rows[static_cast<std::size_t>(u)].set(v);
                            rows[static_cast<std::size_t>(v)].set(u);
                          }
                          Graph child = Graph::from_rows(order, std::move(rows));
                          if (is_canonical_labeling(child)) out.push_back(std::move(child));
                        }
                      }
                    });
    std::vector<Graph> level;
    for (auto& part : parts)
      for (auto& g : part) level.push_back(std::move(g));
    std::sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) {
      return write_graph6(a) < write_graph6(b);
    });
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<Graph> enumerate_graphs(int n, const EnumOptions& options) {
  return enumerate_levels(n, options).back();
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 file '" + path + "'");
  std::vector<Graph> graphs;
  std::string line;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);  // optional format header
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return graphs;
}

std::vector<Graph> CorpusSource::graphs_of_order(int n, unsigned jobs) const {
  if (kind == Kind::BUILTIN) {
    EnumOptions options;
    options.builtin_limit = builtin_limit;
    options.jobs = jobs;
    return enumerate_graphs(n, options);
  }
  std::vector<Graph> graphs = read_graph6_file(path);
  std::erase_if(graphs, [n](const Graph& g) { return g.n() != n; });
  return graphs;
}

ExplorationResult compute_fg(int n, const std::vector<Graph>& corpus, const CycleBudget& budget,
                             unsigned jobs) {
  if (n < 1) throw std::invalid_argument("compute_fg needs n >= 1");
  if (n > budget.max_dp_vertices)
    throw BudgetError("per-k cyclability tables sweep all 2^n subsets; n=" + std::to_string(n) +
                      " exceeds the exact-solve cap");
  ExplorationResult result;
  result.n = n;
  for (int k = 2; k <= n; ++k) {
    ExplorationRow row;
    row.k = k;
    result.rows.push_back(row);
  }
  if (result.rows.empty()) return result;

  std::vector<std::vector<ExplorationRow>> parts(std::max(1u, jobs));
  for (auto& part : parts) part = result.rows;

  parallel_chunks(corpus.size(), jobs, [&](unsigned w, std::size_t begin, std::size_t end) {
    std::vector<ExplorationRow>& rows = parts[w];
    for (std::size_t i = begin; i < end; ++i) {
      const Graph& g = corpus[i];
      if (g.n() != n) throw std::invalid_argument("corpus graph of wrong order");
      if (n < 3) continue;  // no cycles, no k-cyclable graphs

      CycleBudget b = budget.with_fresh_deadline();
      // k-cyclable (k >= 2) implies 2-cyclable implies 2-connected for
      // n >= 3, so graphs failing the connectivity test contribute to no
      // row; debug builds re-verify the equivalence before skipping.
      if (vertex_connectivity(g) < 2) {
        assert(!is_k_cyclable(g, 2, b).holds);
        continue;
      }

      CyclabilityOracle oracle(g, b);
      std::vector<char> all(static_cast<std::size_t>(n) + 1, 1);
      std::uint64_t top = std::uint64_t{1} << n;
      for (std::uint64_t mask = 3; mask < top; ++mask) {
        int pc = std::popcount(mask);
        if (pc < 2 || !all[static_cast<std::size_t>(pc)]) continue;
        VertexSet s;
        s.words[0] = mask;
        if (!oracle.cyclable(s)) all[static_cast<std::size_t>(pc)] = 0;
      }
      int c = circumference(g, budget).first;
      std::optional<std::string> g6;
      for (auto& row : rows) {
        if (!all[static_cast<std::size_t>(row.k)]) continue;
        row.vacuous = false;
        if (c <= row.k) {
          row.all_c_gt_k = false;
          if (!g6) g6 = write_graph6(g);
          merge_min(row.witness_c_gt_k, g6);
        }
        if (c < 2 * row.k) {
          row.all_c_ge_2k = false;
          if (!g6) g6 = write_graph6(g);
          merge_min(row.witness_c_ge_2k, g6);
        }
      }
    }
  });

  for (auto& part : parts)
    for (std::size_t r = 0; r < result.rows.size(); ++r) {
      ExplorationRow& into = result.rows[r];
      const ExplorationRow& from = part[r];
      into.all_c_gt_k = into.all_c_gt_k && from.all_c_gt_k;
      into.all_c_ge_2k = into.all_c_ge_2k && from.all_c_ge_2k;
      into.vacuous = into.vacuous && from.vacuous;
      merge_min(into.witness_c_gt_k, from.witness_c_gt_k);
      merge_min(into.witness_c_ge_2k, from.witness_c_ge_2k);
    }

  for (const auto& row : result.rows) {
    if (row.all_c_gt_k) result.f = row.k;
    if (row.all_c_ge_2k) result.g = row.k;
  }
  return result;
}

ExtremalResult max_edges_nonhamiltonian(int n, int k, const std::vector<Graph>& corpus,
                                        const CycleBudget& budget, unsigned jobs) {
  ExtremalResult result;
  result.n = n;
  result.k = k;

  struct Part {
    std::optional<long long> best;
    std::vector<std::string> witnesses;
    long long considered = 0;
  };
  std::vector<Part> parts(std::max(1u, jobs));
  parallel_chunks(corpus.size(), jobs, [&](unsigned w, std::size_t begin, std::size_t end) {
    Part& part = parts[w];
    for (std::size_t i = begin; i < end; ++i) {
      const Graph& g = corpus[i];
      if (g.n() != n) throw std::invalid_argument("corpus graph of wrong order");
      part.considered += 1;
      if (vertex_connectivity(g) < k) continue;
      if (is_hamiltonian(g, budget).first) continue;
      long long m = edge_count(g);
      if (!part.best || m > *part.best) {
        part.best = m;
        part.witnesses = {write_graph6(g)};
      } else if (m == *part.best) {
        part.witnesses.push_back(write_graph6(g));
      }
    }
  });

  for (auto& part : parts) {
    result.considered += part.considered;
    if (!part.best) continue;
    if (!result.max_edges || *part.best > *result.max_edges) {
      result.max_edges = part.best;
      result.witnesses = std::move(part.witnesses);
    } else if (*part.best == *result.max_edges) {
      result.witnesses.insert(result.witnesses.end(), part.witnesses.begin(),
                              part.witnesses.end());
    }
  }
  std::sort(result.witnesses.begin(), result.witnesses.end());
  return result;
}

std::string ExplorationResult::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["f"] = f ? nlohmann::json(*f) : nlohmann::json(nullptr);
  j["g"] = g ? nlohmann::json(*g) : nlohmann::json(nullptr);
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    r["k"] = row.k;
    r["all_c_gt_k"] = row.all_c_gt_k;
    r["all_c_ge_2k"] = row.all_c_ge_2k;
    r["vacuous"] = row.vacuous;
    r["witness_c_gt_k"] =
        row.witness_c_gt_k ? nlohmann::json(*row.witness_c_gt_k) : nlohmann::json(nullptr);
    r["witness_c_ge_2k"] =
        row.witness_c_ge_2k ? nlohmann::json(*row.witness_c_ge_2k) : nlohmann::json(nullptr);
    rows_json.push_back(r);
  }
  j["rows"] = rows_json;
  return j.dump(2);
}

std::string ExplorationResult::to_csv() const {
  std::ostringstream out;
  out << "n,k,all_c_gt_k,all_c_ge_2k,vacuous,witness\n";
  for (const auto& row : rows) {
    const std::optional<std::string>& witness =
        !row.all_c_gt_k ? row.witness_c_gt_k : row.witness_c_ge_2k;
    out << n << ',' << row.k << ',' << (row.all_c_gt_k ? "true" : "false") << ','
        << (row.all_c_ge_2k ? "true" : "false") << ',' << (row.vacuous ? "true" : "false") << ','
        << (witness ? *witness : "") << '\n';
  }
  return out.str();
}

std::string ExtremalResult::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["k"] = k;
  j["considered"] = considered;
  j["max_edges"] = max_edges ? nlohmann::json(*max_edges) : nlohmann::json(nullptr);
  j["witnesses"] = witnesses;
  return j.dump(2);
}

}  // namespace cyclab
