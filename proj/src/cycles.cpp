#include "cyclab/cycles.hpp"

#include <algorithm>
#include <climits>

#include "cyclab/closure.hpp"

namespace cyclab {

namespace {

void check_deadline(const CycleBudget& b) {
  if (b.has_deadline() && std::chrono::steady_clock::now() > b.deadline)
    throw BudgetError("per-graph time limit exceeded");
}

// One connected component of the degree->=2 core, remapped to dense local
// indices (in increasing global order, so local comparisons mirror global
// ones).
struct LocalComponent {
  std::vector<int> global;
  std::vector<std::uint32_t> adj;
  int size() const { return static_cast<int>(global.size()); }
};

struct Prepared {
  VertexSet kept;
  std::vector<int> comp_of;   // -1 for peeled vertices
  std::vector<int> local_of;  // -1 for peeled vertices
  std::vector<LocalComponent> comps;
};

Prepared prepare(const Graph& g) {
  int n = g.n();
  Prepared p;
  p.kept = VertexSet::universe(n);
  bool again = true;
  while (again) {
    again = false;
    for (int v = p.kept.first(); v >= 0; v = p.kept.next(v))
      if ((g.neighbors(v) & p.kept).count() < 2) {
        p.kept.reset(v);
        again = true;
      }
  }
  p.comp_of.assign(n, -1);
  p.local_of.assign(n, -1);
  for (int s = p.kept.first(); s >= 0; s = p.kept.next(s)) {
    if (p.comp_of[s] >= 0) continue;
    int ci = static_cast<int>(p.comps.size());
    std::vector<int> verts{s};
    p.comp_of[s] = ci;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      VertexSet nb = g.neighbors(verts[i]) & p.kept;
      for (int u = nb.first(); u >= 0; u = nb.next(u))
        if (p.comp_of[u] < 0) {
          p.comp_of[u] = ci;
          verts.push_back(u);
        }
    }
    std::sort(verts.begin(), verts.end());
    LocalComponent comp;
    comp.global = verts;
    int m = comp.size();
    for (int i = 0; i < m; ++i) p.local_of[verts[i]] = i;
    comp.adj.assign(m, 0);
    for (int i = 0; i < m; ++i) {
      VertexSet nb = g.neighbors(verts[i]) & p.kept;
      for (int u = nb.first(); u >= 0; u = nb.next(u)) comp.adj[i] |= 1u << p.local_of[u];
    }
    p.comps.push_back(std::move(comp));
  }
  return p;
}

void require_dp_feasible(int m, const CycleBudget& b) {
  if (m > b.max_dp_vertices)
    throw BudgetError("component of " + std::to_string(m) +
                      " vertices exceeds the exact-solve cap of " +
                      std::to_string(b.max_dp_vertices));
  if (m > 26) throw BudgetError("subset DP beyond 26 vertices is not supported");
}

std::vector<std::uint32_t>& reach_scratch() {
  thread_local std::vector<std::uint32_t> buf;
  return buf;
}

// Core path DP. reach[mask] is the set of endpoints v such that some simple
// path starts at `anchor`, covers exactly `mask` and ends at v. Masks are
// visited in increasing order, so every submask is final before its
// supersets extend it. `prereq`, when given, makes vertex w enterable only
// once prereq[w] is a subset of the mask (this is what turns the plain
// "cycle through a set" DP into the ordered-cycle DP). on_state is called
// once per populated mask and may stop the sweep by returning true.
template <class OnState>
bool sweep_reach(const LocalComponent& c, int anchor, const std::uint32_t* prereq,
                 const CycleBudget& b, std::vector<std::uint32_t>& reach, OnState&& on_state) {
  int m = c.size();
  std::uint32_t full = (1u << m) - 1;
  reach.assign(std::size_t{1} << m, 0);
  reach[1u << anchor] = 1u << anchor;
  for (std::uint32_t mask = 1u << anchor; mask <= full; ++mask) {
    std::uint32_t ends = reach[mask];
    if (!ends) continue;
    if ((mask & 0xfffu) == 0) check_deadline(b);
    if (on_state(mask, ends)) return true;
    if (std::popcount(mask) >= m) continue;
    for (std::uint32_t e = ends; e; e &= e - 1) {
      int v = std::countr_zero(e);
      std::uint32_t ext = c.adj[v] & ~mask;
      for (std::uint32_t x = ext; x; x &= x - 1) {
        int w = std::countr_zero(x);
        if (prereq && (prereq[w] & mask) != prereq[w]) continue;
        reach[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return false;
}

// Longest-cycle sweep: one pass in which the anchor of each mask is its
// lowest bit, so every cycle is found exactly once (anchored at its minimum
// vertex).
int longest_cycle(const LocalComponent& c, const CycleBudget& b, std::vector<std::uint32_t>& reach,
                  std::uint32_t* best_mask, int* best_end) {
  int m = c.size();
  std::uint32_t full = (1u << m) - 1;
  reach.assign(std::size_t{1} << m, 0);
  for (int a = 0; a < m; ++a) reach[1u << a] = 1u << a;
  int best = 0;
  *best_mask = 0;
  *best_end = -1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = reach[mask];
    if (!ends) continue;
    if ((mask & 0xfffu) == 0) check_deadline(b);
    int a = std::countr_zero(mask);
    int pc = std::popcount(mask);
    if (pc >= 3 && pc > best) {
      std::uint32_t closing = ends & c.adj[a];
      if (closing) {
        best = pc;
        *best_mask = mask;
        *best_end = std::countr_zero(closing);
      }
    }
    if (pc >= m) continue;
    std::uint32_t above = ~((2u << a) - 1);
    for (std::uint32_t e = ends; e; e &= e - 1) {
      int v = std::countr_zero(e);
      std::uint32_t ext = c.adj[v] & ~mask & above;
      for (std::uint32_t x = ext; x; x &= x - 1) {
        int w = std::countr_zero(x);
        reach[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return best;
}

// Unwinds the DP: from a closing state (mask, end) back to the anchor.
std::vector<int> rebuild_path(const LocalComponent& c, const std::vector<std::uint32_t>& reach,
                              std::uint32_t mask, int end, int anchor) {
  std::vector<int> rev;
  while (true) {
    rev.push_back(end);
    if (mask == (1u << anchor)) break;
    std::uint32_t pm = mask & ~(1u << end);
    std::uint32_t cands = reach[pm] & c.adj[end];
    if (!cands) throw std::logic_error("cycle DP backtrack lost its path");
    end = std::countr_zero(cands);
    mask = pm;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

CycleCertificate make_certificate(const Graph& g, const LocalComponent& c,
                                  const std::vector<int>& local_path) {
  std::vector<int> cyc;
  cyc.reserve(local_path.size());
  for (int v : local_path) cyc.push_back(c.global[v]);
  auto mn = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), mn, cyc.end());
  if (cyc.size() >= 3 && cyc[1] > cyc.back()) std::reverse(cyc.begin() + 1, cyc.end());
  return CycleCertificate::checked(g, std::move(cyc));
}

int count_components(const Graph& g, VertexSet alive) {
  int comps = 0;
  for (int s = alive.first(); s >= 0; s = alive.first()) {
    ++comps;
    VertexSet frontier = VertexSet::single(s);
    alive.reset(s);
    while (!frontier.empty()) {
      VertexSet nxt;
      for (int v = frontier.first(); v >= 0; v = frontier.next(v)) nxt |= g.neighbors(v);
      nxt &= alive;
      alive = alive.minus(nxt);
      frontier = nxt;
    }
  }
  return comps;
}

// Lexicographic combinations of {0..n-1}; visit(combo) returning true stops
// the walk. Returns whether the walk was stopped.
template <class F>
bool for_each_combination(int n, int k, F&& visit) {
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
  if (k > n) return false;
  while (true) {
    if (visit(const_cast<const std::vector<int>&>(combo))) return true;
    int i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
}

void validate_vertices(const Graph& g, std::span<const int> vs) {
  for (int v : vs)
    if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex index out of range");
}

// Ordered-cycle query against a prepared graph: does some cycle visit `seq`
// in this cyclic order, in either orientation? Fills the witness path on
// success.
bool run_ordered(const Graph& g, const Prepared& p, const std::vector<int>& seq,
                 const CycleBudget& budget, std::optional<CycleCertificate>* witness) {
  for (int v : seq)
    if (!p.kept.test(v)) return false;
  int ci = p.comp_of[seq[0]];
  for (int v : seq)
    if (p.comp_of[v] != ci) return false;
  const LocalComponent& comp = p.comps[static_cast<std::size_t>(ci)];
  require_dp_feasible(comp.size(), budget);

  int k = static_cast<int>(seq.size());
  std::vector<int> local(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    local[static_cast<std::size_t>(i)] = p.local_of[seq[static_cast<std::size_t>(i)]];

  auto& reach = reach_scratch();
  int orientations = k == 2 ? 1 : 2;
  for (int o = 0; o < orientations; ++o) {
    std::vector<int> t = local;
    if (o == 1) std::reverse(t.begin() + 1, t.end());
    std::vector<std::uint32_t> prereq(static_cast<std::size_t>(comp.size()), 0);
    std::uint32_t required = 0;
    std::uint32_t seen = 0;
    for (int i = 0; i < k; ++i) {
      std::uint32_t bit = 1u << t[static_cast<std::size_t>(i)];
      required |= bit;
      if (i >= 1) prereq[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])] = seen;
      if (i >= 1) seen |= bit;
    }
    int anchor = t[0];
    std::uint32_t found_mask = 0;
    int found_end = -1;
    bool found =
        sweep_reach(comp, anchor, prereq.data(), budget, reach,
                    [&](std::uint32_t mask, std::uint32_t ends) {
                      if ((mask & required) != required || std::popcount(mask) < 3) return false;
                      std::uint32_t closing = ends & comp.adj[anchor];
                      if (!closing) return false;
                      found_mask = mask;
                      found_end = std::countr_zero(closing);
                      return true;
                    });
    if (found) {
      if (witness)
        *witness = make_certificate(g, comp, rebuild_path(comp, reach, found_mask, found_end, anchor));
      return true;
    }
  }
  return false;
}

}  // namespace

CycleCertificate CycleCertificate::checked(const Graph& g, std::vector<int> verts) {
  CycleCertificate c{std::move(verts)};
  if (!c.validates(g)) throw std::logic_error("cycle certificate does not validate");
  return c;
}

bool CycleCertificate::validates(const Graph& g) const {
  int len = length();
  if (len < 3) return false;
  VertexSet seen;
  for (int v : vertices) {
    if (v < 0 || v >= g.n() || seen.test(v)) return false;
    seen.set(v);
  }
  for (int i = 0; i < len; ++i)
    if (!g.adjacent(vertices[static_cast<std::size_t>(i)],
                    vertices[static_cast<std::size_t>((i + 1) % len)]))
      return false;
  return true;
}

std::pair<int, std::optional<CycleCertificate>> circumference(const Graph& g,
                                                              const CycleBudget& budget) {
  Prepared p = prepare(g);
  int best = 0;
  std::optional<CycleCertificate> cert;
  auto& reach = reach_scratch();
  for (const auto& comp : p.comps) {
    if (comp.size() <= best) continue;
    require_dp_feasible(comp.size(), budget);
    std::uint32_t bm;
    int be;
    int len = longest_cycle(comp, budget, reach, &bm, &be);
    if (len > best) {
      best = len;
      cert = make_certificate(g, comp, rebuild_path(comp, reach, bm, be, std::countr_zero(bm)));
    }
  }
  return {best, std::move(cert)};
}

std::pair<bool, std::optional<CycleCertificate>> is_hamiltonian(const Graph& g,
                                                                const CycleBudget& budget) {
  int n = g.n();
  if (n < 3) return {false, std::nullopt};
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return {false, std::nullopt};
  if (count_components(g, VertexSet::universe(n)) != 1) return {false, std::nullopt};

  if (n <= budget.max_dp_vertices && n <= 26) {
    Prepared p = prepare(g);
    if (p.comps.size() != 1 || p.comps[0].size() != n) return {false, std::nullopt};
    const LocalComponent& comp = p.comps[0];
    auto& reach = reach_scratch();
    std::uint32_t full = (1u << n) - 1;
    std::uint32_t found_mask = 0;
    int found_end = -1;
    bool found = sweep_reach(comp, 0, nullptr, budget, reach,
                             [&](std::uint32_t mask, std::uint32_t ends) {
                               if (mask != full) return false;
                               std::uint32_t closing = ends & comp.adj[0];
                               if (!closing) return false;
                               found_mask = mask;
                               found_end = std::countr_zero(closing);
                               return true;
                             });
    if (!found) return {false, std::nullopt};
    return {true,
            make_certificate(g, comp, rebuild_path(comp, reach, found_mask, found_end, 0))};
  }

  // Oversize instance. Closure completion decides yes with a real cycle of g;
  // a vertex cut leaving more components than its size decides no.
  if (auto cyc = hamiltonian_cycle_from_closure(g)) {
    std::vector<int> c = *cyc;
    auto mn = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), mn, c.end());
    if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
    return {true, CycleCertificate::checked(g, std::move(c))};
  }
  VertexSet uni = VertexSet::universe(n);
  for (int s = 1; s <= std::min(budget.max_cut_search, n - 3); ++s) {
    bool obstructed = for_each_combination(n, s, [&](const std::vector<int>& cut) {
      VertexSet alive = uni;
      for (int v : cut) alive.reset(v);
      return count_components(g, alive) > s;
    });
    if (obstructed) return {false, std::nullopt};
    check_deadline(budget);
  }
  throw BudgetError("hamiltonicity undecided for n=" + std::to_string(n) +
                    ": above the subset-DP cap and neither closure completion nor a small cut "
                    "obstruction applies");
}

CyclabilityVerdict is_cyclable_set(const Graph& g, const VertexSet& s, const CycleBudget& budget) {
  if (!s.is_subset_of(VertexSet::universe(g.n())))
    throw std::invalid_argument("vertex index out of range");
  if (s.count() < 2) throw std::invalid_argument("cyclable-set query needs at least 2 vertices");

  CyclabilityVerdict verdict;
  Prepared p = prepare(g);
  if (!s.is_subset_of(p.kept)) return verdict;
  int ci = p.comp_of[s.first()];
  for (int v = s.first(); v >= 0; v = s.next(v))
    if (p.comp_of[v] != ci) return verdict;
  const LocalComponent& comp = p.comps[static_cast<std::size_t>(ci)];
  require_dp_feasible(comp.size(), budget);

  std::uint32_t required = 0;
  for (int v = s.first(); v >= 0; v = s.next(v)) required |= 1u << p.local_of[v];
  int anchor = p.local_of[s.first()];
  auto& reach = reach_scratch();
  std::uint32_t found_mask = 0;
  int found_end = -1;
  bool found = sweep_reach(comp, anchor, nullptr, budget, reach,
                           [&](std::uint32_t mask, std::uint32_t ends) {
                             if ((mask & required) != required || std::popcount(mask) < 3)
                               return false;
                             std::uint32_t closing = ends & comp.adj[anchor];
                             if (!closing) return false;
                             found_mask = mask;
                             found_end = std::countr_zero(closing);
                             return true;
                           });
  if (found) {
    verdict.holds = true;
    verdict.certificate =
        make_certificate(g, comp, rebuild_path(comp, reach, found_mask, found_end, anchor));
  }
  return verdict;
}

struct CyclabilityOracle::Impl {
  CycleBudget budget;
  Prepared prep;
  struct Tables {
    bool built = false;
    std::vector<std::vector<std::uint64_t>> covered;  // per anchor, bit per mask
  };
  mutable std::vector<Tables> tables;

  // covered[a][mask] = some cycle through local anchor a covers mask; built
  // as the superset-OR of the closable masks of the anchored DP.
  void build(int ci) const {
    const LocalComponent& comp = prep.comps[static_cast<std::size_t>(ci)];
    int m = comp.size();
    require_dp_feasible(m, budget);
    auto& t = tables[static_cast<std::size_t>(ci)];
    std::size_t words = ((std::size_t{1} << m) + 63) / 64;
    t.covered.assign(static_cast<std::size_t>(m), {});
    auto& reach = reach_scratch();
    for (int a = 0; a < m; ++a) {
      auto& bits = t.covered[static_cast<std::size_t>(a)];
      bits.assign(words, 0);
      sweep_reach(comp, a, nullptr, budget, reach,
                  [&](std::uint32_t mask, std::uint32_t ends) {
                    if (std::popcount(mask) >= 3 && (ends & comp.adj[a]))
                      bits[mask >> 6] |= std::uint64_t{1} << (mask & 63);
                    return false;
                  });
      supersets_or(bits, m);
    }
    t.built = true;
  }

  static void supersets_or(std::vector<std::uint64_t>& bits, int m) {
    static constexpr std::uint64_t pat[6] = {0x5555555555555555ull, 0x3333333333333333ull,
                                             0x0f0f0f0f0f0f0f0full, 0x00ff00ff00ff00ffull,
                                             0x0000ffff0000ffffull, 0x00000000ffffffffull};
    for (int b = 0; b < std::min(m, 6); ++b)
      for (auto& w : bits) w |= (w >> (1 << b)) & pat[b];
    for (int b = 6; b < m; ++b) {
      std::size_t stride = std::size_t{1} << (b - 6);
      for (std::size_t i = 0; i < bits.size(); ++i)
        if (!(i & stride)) bits[i] |= bits[i | stride];
    }
  }
};

CyclabilityOracle::CyclabilityOracle(const Graph& g, const CycleBudget& budget)
    : impl_(std::make_unique<Impl>()) {
  impl_->budget = budget;
  impl_->prep = prepare(g);
  impl_->tables.resize(impl_->prep.comps.size());
}

CyclabilityOracle::~CyclabilityOracle() = default;
CyclabilityOracle::CyclabilityOracle(CyclabilityOracle&&) noexcept = default;
CyclabilityOracle& CyclabilityOracle::operator=(CyclabilityOracle&&) noexcept = default;

bool CyclabilityOracle::cyclable(const VertexSet& s) const {
  int v0 = s.first();
  if (v0 < 0) throw std::invalid_argument("cyclability query on an empty set");
  const Prepared& p = impl_->prep;
  if (!s.is_subset_of(p.kept)) return false;
  int ci = p.comp_of[v0];
  std::uint32_t local = 0;
  for (int v = v0; v >= 0; v = s.next(v)) {
    if (p.comp_of[v] != ci) return false;
    local |= 1u << p.local_of[v];
  }
  auto& t = impl_->tables[static_cast<std::size_t>(ci)];
  if (!t.built) impl_->build(ci);
  int anchor = p.local_of[v0];
  const auto& bits = t.covered[static_cast<std::size_t>(anchor)];
  return (bits[local >> 6] >> (local & 63)) & 1;
}

CyclabilityVerdict is_k_cyclable(const Graph& g, int k, const CycleBudget& budget) {
  if (k < 2 || k > g.n()) throw std::invalid_argument("k out of range for k-cyclability");
  CyclabilityOracle oracle(g, budget);
  CyclabilityVerdict verdict;
  verdict.holds = true;
  for_each_combination(g.n(), k, [&](const std::vector<int>& combo) {
    VertexSet s;
    for (int v : combo) s.set(v);
    if (!oracle.cyclable(s)) {
      verdict.holds = false;
      verdict.counterexample = combo;
      return true;
    }
    return false;
  });
  if (verdict.holds) {
    VertexSet first;
    for (int v = 0; v < k; ++v) first.set(v);
    verdict.certificate = is_cyclable_set(g, first, budget).certificate;
  }
  return verdict;
}

CyclabilityVerdict has_ordered_cycle(const Graph& g, std::span<const int> t,
                                     const CycleBudget& budget) {
  if (t.size() < 2) throw std::invalid_argument("ordered-cycle query needs at least 2 vertices");
  validate_vertices(g, t);
  VertexSet seen;
  for (int v : t) {
    if (seen.test(v)) throw std::invalid_argument("duplicate vertex in ordered-cycle query");
    seen.set(v);
  }
  Prepared p = prepare(g);
  CyclabilityVerdict verdict;
  std::vector<int> seq(t.begin(), t.end());
  std::optional<CycleCertificate> witness;
  if (run_ordered(g, p, seq, budget, &witness)) {
    verdict.holds = true;
    verdict.certificate = std::move(witness);
  }
  return verdict;
}

CyclabilityVerdict is_k_ordered(const Graph& g, int k, const CycleBudget& budget) {
  if (k < 2 || k > g.n()) throw std::invalid_argument("k out of range for k-orderedness");
  Prepared p = prepare(g);
  CyclabilityVerdict verdict;
  verdict.holds = true;
  bool have_witness = false;
  // Sequences up to rotation and reversal: fix the smallest vertex first,
  // and for k >= 3 keep only orderings whose second entry is below the last.
  for_each_combination(g.n(), k, [&](const std::vector<int>& combo) {
    std::vector<int> rest(combo.begin() + 1, combo.end());
    do {
      if (k >= 3 && rest.front() > rest.back()) continue;
      std::vector<int> seq;
      seq.reserve(static_cast<std::size_t>(k));
      seq.push_back(combo[0]);
      seq.insert(seq.end(), rest.begin(), rest.end());
      std::optional<CycleCertificate> witness;
      if (!run_ordered(g, p, seq, budget, have_witness ? nullptr : &witness)) {
        verdict.holds = false;
        verdict.counterexample = seq;
        return true;
      }
      if (!have_witness) {
        verdict.certificate = std::move(witness);
        have_witness = true;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
  });
  if (!verdict.holds) verdict.certificate.reset();
  return verdict;
}

bool is_hypohamiltonian(const Graph& g, const CycleBudget& budget) {
  int n = g.n();
  if (n < 3) return false;
  if (is_hamiltonian(g, budget).first) return false;
  for (int v = 0; v < n; ++v) {
    VertexSet keep = VertexSet::universe(n);
    keep.reset(v);
    if (!is_hamiltonian(induced_subgraph(g, keep), budget).first) return false;
  }
  return true;
}

}  // namespace cyclab
