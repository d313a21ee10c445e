#include "cyclab/theorems.hpp"

#include <algorithm>
#include <thread>

#include "json.hpp"

#include "cyclab/closure.hpp"
#include "cyclab/invariants.hpp"

namespace cyclab {

namespace {

struct ClaimRow {
  ClaimId id;
  const char* name;
};

constexpr ClaimRow kClaims[] = {
    {ClaimId::T1_2K, "T1_2K"},
    {ClaimId::T1_KPLUS2, "T1_KPLUS2"},
    {ClaimId::T2_ORDERED, "T2_ORDERED"},
    {ClaimId::T3_EDGE_HAM, "T3_EDGE_HAM"},
    {ClaimId::DIRAC_CYCLABLE, "DIRAC_CYCLABLE"},
    {ClaimId::DIRAC_CIRC, "DIRAC_CIRC"},
    {ClaimId::CHVATAL_ERDOS, "CHVATAL_ERDOS"},
    {ClaimId::OWW_BOUND, "OWW_BOUND"},
    {ClaimId::DIRAC_MINDEG, "DIRAC_MINDEG"},
    {ClaimId::BAUER_3CYC, "BAUER_3CYC"},
    {ClaimId::NG_SCHULTZ_CONN, "NG_SCHULTZ_CONN"},
    {ClaimId::LI_SIGMA_HAM, "LI_SIGMA_HAM"},
    {ClaimId::BYER_L9_PUBLISHED, "BYER_L9_PUBLISHED"},
    {ClaimId::BYER_L9_DERIVED, "BYER_L9_DERIVED"},
    {ClaimId::BYER_L10, "BYER_L10"},
    {ClaimId::CLOSED_DEGREE_BOUND, "CLOSED_DEGREE_BOUND"},
    {ClaimId::CLOSURE_HAM_EQUIV, "CLOSURE_HAM_EQUIV"},
    {ClaimId::CLASSICAL_EDGE_HAM, "CLASSICAL_EDGE_HAM"},
};

long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

// Lazily computed per-graph facts so that claims sharing an invariant pay
// for it once.
class GraphFacts {
 public:
  GraphFacts(const Graph& g, const CheckPolicy& policy) : g_(g), policy_(policy) {
    n_ = g.n();
    m_ = edge_count(g);
  }

  const Graph& graph() const { return g_; }
  int n() const { return n_; }
  long long m() const { return m_; }
  long long mbar() const { return choose2(n_) - m_; }

  int min_deg() {
    if (!mindeg_) mindeg_ = min_degree(g_);
    return *mindeg_;
  }
  int kappa() {
    if (!kappa_) kappa_ = vertex_connectivity(g_);
    return *kappa_;
  }
  int alpha() {
    if (!alpha_) alpha_ = independence_number(g_).first;
    return *alpha_;
  }
  int circ() {
    ensure_circ();
    return circ_->first;
  }
  bool ham() { return n_ >= 3 && circ() == n_; }
  const std::optional<CycleCertificate>& circ_cert() {
    ensure_circ();
    return circ_->second;
  }
  bool closed() {
    if (!closed_) closed_ = is_closed(g_);
    return *closed_;
  }
  bool closure_ham() {
    if (!closure_ham_) {
      Graph cl = bondy_chvatal_closure(g_);
      auto [c, cert] = circumference(cl, policy_.budget);
      closure_ham_ = cl.n() >= 3 && c == cl.n();
    }
    return *closure_ham_;
  }
  std::optional<long long> sigma(int k) {
    auto it = sigma_.find(k);
    if (it == sigma_.end()) it = sigma_.emplace(k, sigma_k(g_, k)).first;
    return it->second;
  }
  bool k_cyclable(int k) {
    if (n_ <= 20) {
      build_cyclable_table();
      return (*cyclable_table_)[static_cast<std::size_t>(k)] != 0;
    }
    auto it = kcyc_memo_.find(k);
    if (it == kcyc_memo_.end())
      it = kcyc_memo_.emplace(k, is_k_cyclable(g_, k, policy_.budget).holds).first;
    return it->second;
  }
  bool k_ordered(int k) {
    auto it = ordered_.find(k);
    if (it == ordered_.end())
      it = ordered_.emplace(k, is_k_ordered(g_, k, policy_.budget).holds).first;
    return it->second;
  }
  const CheckPolicy& policy() const { return policy_; }

 private:
  void ensure_circ() {
    if (!circ_) circ_ = circumference(g_, policy_.budget);
  }
  // one oracle sweep over all vertex subsets answers k-cyclability for every k
  void build_cyclable_table() {
    if (cyclable_table_) return;
    CyclabilityOracle oracle(g_, policy_.budget);
    std::vector<char> all(static_cast<std::size_t>(n_) + 1, 1);
    std::uint64_t top = std::uint64_t{1} << n_;
    for (std::uint64_t mask = 3; mask < top; ++mask) {
      int pc = std::popcount(mask);
      if (pc < 2 || !all[static_cast<std::size_t>(pc)]) continue;
      VertexSet s;
      s.words[0] = mask;
      if (!oracle.cyclable(s)) all[static_cast<std::size_t>(pc)] = 0;
    }
    cyclable_table_ = std::move(all);
  }

  const Graph& g_;
  CheckPolicy policy_;
  int n_;
  long long m_;
  std::optional<int> mindeg_, kappa_, alpha_;
  std::optional<std::pair<int, std::optional<CycleCertificate>>> circ_;
  std::optional<bool> closed_, closure_ham_;
  std::map<int, std::optional<long long>> sigma_;
  std::map<int, bool> ordered_, kcyc_memo_;
  std::optional<std::vector<char>> cyclable_table_;
};

bool eval_premise(GraphFacts& f, ClaimId claim, const ClaimBinding& b) {
  int n = f.n();
  switch (claim) {
    case ClaimId::T1_2K:
    case ClaimId::T1_KPLUS2:
      return f.k_cyclable(*b.k);
    case ClaimId::T2_ORDERED:
    case ClaimId::NG_SCHULTZ_CONN:
      return f.k_ordered(*b.k);
    case ClaimId::T3_EDGE_HAM:
      return f.kappa() >= *b.k && f.m() > choose2(n - *b.k) + 1LL * *b.k * *b.k;
    case ClaimId::DIRAC_CYCLABLE:
    case ClaimId::DIRAC_CIRC:
      return f.kappa() >= *b.k;
    case ClaimId::CHVATAL_ERDOS:
      return f.alpha() <= f.kappa();
    case ClaimId::OWW_BOUND:
      return f.kappa() >= *b.k && f.alpha() >= *b.k;
    case ClaimId::DIRAC_MINDEG:
      return f.kappa() >= 2;
    case ClaimId::BAUER_3CYC:
      return f.k_cyclable(3);
    case ClaimId::LI_SIGMA_HAM: {
      if (f.kappa() < *b.k) return false;
      auto s = f.sigma(*b.k + 1);
      if (!s) return false;  // no independent set of that size: vacuous
      return *s >= n + 1LL * (*b.k - 1) * (f.alpha() - 1);
    }
    case ClaimId::BYER_L9_PUBLISHED:
    case ClaimId::BYER_L9_DERIVED:
      return !f.ham() && f.kappa() >= *b.k;
    case ClaimId::BYER_L10:
      return f.closed() && !f.ham() && *b.m <= f.alpha();
    case ClaimId::CLOSED_DEGREE_BOUND:
      return f.closed() && !f.ham();
    case ClaimId::CLOSURE_HAM_EQUIV:
      return true;
    case ClaimId::CLASSICAL_EDGE_HAM:
      return f.m() > choose2(n - 1) + 1;
  }
  throw std::logic_error("unhandled claim premise");
}

bool byer_l9_bound(GraphFacts& f, int k, long long coefficient) {
  int n = f.n();
  if (2 * k > n - 1) return false;
  auto s = f.sigma(k + 1);
  if (!s) return false;  // cannot happen under the premise; a miss would be a real violation
  return f.mbar() >= choose2(k + 1) + coefficient * (n - k - 1) - *s;
}

bool eval_conclusion(GraphFacts& f, ClaimId claim, const ClaimBinding& b) {
  int n = f.n();
  switch (claim) {
    case ClaimId::T1_2K:
      return f.circ() >= std::min(n, 2 * *b.k);
    case ClaimId::T1_KPLUS2:
      return f.circ() >= *b.k + 2;
    case ClaimId::T2_ORDERED:
      return f.circ() >= std::min(n, 2 * *b.k);
    case ClaimId::T3_EDGE_HAM:
    case ClaimId::CHVATAL_ERDOS:
    case ClaimId::LI_SIGMA_HAM:
    case ClaimId::CLASSICAL_EDGE_HAM:
      return f.ham();
    case ClaimId::DIRAC_CYCLABLE:
      return f.k_cyclable(*b.k);
    case ClaimId::DIRAC_CIRC:
      return f.circ() >= std::min(n, 2 * *b.k);
    case ClaimId::OWW_BOUND:
      return 1LL * f.circ() * f.alpha() >= 1LL * *b.k * (n + *b.k - f.alpha());
    case ClaimId::DIRAC_MINDEG:
      return f.circ() >= std::min(2 * f.min_deg(), n);
    case ClaimId::BAUER_3CYC:
      return f.circ() >=
             std::min({n, 3 * f.min_deg() - 3, n + f.min_deg() - f.alpha()});
    case ClaimId::NG_SCHULTZ_CONN:
      return f.kappa() >= *b.k - 1;
    case ClaimId::BYER_L9_PUBLISHED:
      return byer_l9_bound(f, *b.k, *b.k - 1);
    case ClaimId::BYER_L9_DERIVED: {
      bool derived = byer_l9_bound(f, *b.k, *b.k + 1);
      if (derived && !byer_l9_bound(f, *b.k, *b.k - 1))
        throw std::logic_error("edge-count bound with coefficient k+1 held without k-1");
      return derived;
    }
    case ClaimId::BYER_L10: {
      long long m = *b.m;
      long long rhs = m * (n - m) + (n % 2 == 0 ? m - 2 : 0);
      return 2 * f.mbar() >= rhs;
    }
    case ClaimId::CLOSED_DEGREE_BOUND:
      return closed_nonadjacent_bound_holds(f.graph());
    case ClaimId::CLOSURE_HAM_EQUIV:
      return f.ham() == f.closure_ham();
  }
  throw std::logic_error("unhandled claim conclusion");
}

std::optional<ClaimWitness> make_witness(GraphFacts& f, ClaimId claim, const ClaimBinding& b,
                                         bool premise, bool conclusion) {
  if (!premise) return std::nullopt;
  if (claim == ClaimId::DIRAC_CYCLABLE && !conclusion) {
    auto verdict = is_k_cyclable(f.graph(), *b.k, f.policy().budget);
    if (verdict.counterexample) return ClaimWitness{"subset", *verdict.counterexample};
    return std::nullopt;
  }
  if (conclusion && f.circ_cert())
    return ClaimWitness{"cycle", f.circ_cert()->vertices};
  return std::nullopt;
}

void bindings_with_k(std::vector<ClaimBinding>& out, int lo, int hi) {
  for (int k = lo; k <= hi; ++k) out.push_back(ClaimBinding{k, std::nullopt});
}

}  // namespace

const char* claim_name(ClaimId id) {
  for (const auto& row : kClaims)
    if (row.id == id) return row.name;
  throw std::logic_error("unknown claim id");
}

std::optional<ClaimId> parse_claim(const std::string& name) {
  for (const auto& row : kClaims)
    if (name == row.name) return row.id;
  return std::nullopt;
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = [] {
    std::vector<ClaimId> v;
    for (const auto& row : kClaims) v.push_back(row.id);
    return v;
  }();
  return ids;
}

std::string ClaimBinding::to_string() const {
  std::string out;
  if (k) out += "k=" + std::to_string(*k);
  if (m) out += (out.empty() ? "" : " ") + std::string("m=") + std::to_string(*m);
  return out;
}

std::vector<ClaimBinding> applicable_bindings(const Graph& g, ClaimId claim,
                                              const CheckPolicy& policy) {
  int n = g.n();
  std::vector<ClaimBinding> out;
  if (n < 3) return out;
  switch (claim) {
    case ClaimId::T1_2K:
      for (int k = 2; k <= n && k * k <= n + 3; ++k) out.push_back({k, std::nullopt});
      break;
    case ClaimId::T1_KPLUS2:
      for (int k = 2; k <= n && 4 * k + 4 <= 3 * n; ++k) out.push_back({k, std::nullopt});
      break;
    case ClaimId::T2_ORDERED:
    case ClaimId::NG_SCHULTZ_CONN:
      bindings_with_k(out, 2, std::min(n, policy.ordered_k_max));
      break;
    case ClaimId::T3_EDGE_HAM:
      for (int k = 1; 2 * k * (k + 1) <= n; ++k) out.push_back({k, std::nullopt});
      break;
    case ClaimId::DIRAC_CYCLABLE:
    case ClaimId::DIRAC_CIRC:
    case ClaimId::OWW_BOUND:
      bindings_with_k(out, 2, n - 1);
      break;
    case ClaimId::LI_SIGMA_HAM:
    case ClaimId::BYER_L9_PUBLISHED:
    case ClaimId::BYER_L9_DERIVED:
      bindings_with_k(out, 1, n - 1);
      break;
    case ClaimId::BYER_L10:
      for (int m = 1; m <= n; ++m) out.push_back({std::nullopt, m});
      break;
    case ClaimId::CHVATAL_ERDOS:
    case ClaimId::DIRAC_MINDEG:
    case ClaimId::BAUER_3CYC:
    case ClaimId::CLOSED_DEGREE_BOUND:
    case ClaimId::CLOSURE_HAM_EQUIV:
    case ClaimId::CLASSICAL_EDGE_HAM:
      out.push_back({});
      break;
  }
  return out;
}

ClaimCheck check_claim(const Graph& g, ClaimId claim, const ClaimBinding& binding,
                       const CheckPolicy& policy) {
  if (g.n() < 3) throw std::invalid_argument("claims are only evaluated for n >= 3");
  auto needs_k = [&] {
    if (!binding.k) throw std::invalid_argument("claim requires a k binding");
  };
  switch (claim) {
    case ClaimId::BYER_L10:
      if (!binding.m) throw std::invalid_argument("claim requires an m binding");
      break;
    case ClaimId::CHVATAL_ERDOS:
    case ClaimId::DIRAC_MINDEG:
    case ClaimId::BAUER_3CYC:
    case ClaimId::CLOSED_DEGREE_BOUND:
    case ClaimId::CLOSURE_HAM_EQUIV:
    case ClaimId::CLASSICAL_EDGE_HAM:
      break;
    default:
      needs_k();
  }

  GraphFacts facts(g, policy);
  ClaimCheck check;
  check.claim = claim;
  check.graph6 = write_graph6(g);
  check.binding = binding;
  check.premise_holds = eval_premise(facts, claim, binding);
  check.conclusion_holds = eval_conclusion(facts, claim, binding);
  check.vacuous = !check.premise_holds;
  check.witness = make_witness(facts, claim, binding, check.premise_holds, check.conclusion_holds);
  return check;
}

VerifyReport verify_corpus(const std::vector<Graph>& corpus, const std::vector<ClaimId>& claims,
                           const CheckPolicy& policy, unsigned jobs) {
  auto run_range = [&](std::size_t begin, std::size_t end, VerifyReport& local) {
    for (std::size_t i = begin; i < end; ++i) {
      const Graph& g = corpus[i];
      local.graphs += 1;
      CheckPolicy per_graph = policy;
      per_graph.budget = policy.budget.with_fresh_deadline();
      GraphFacts facts(g, per_graph);
      for (ClaimId claim : claims) {
        ClaimStats& stats = local.claims[claim];
        for (const ClaimBinding& binding : applicable_bindings(g, claim, policy)) {
          stats.checked += 1;
          if (!eval_premise(facts, claim, binding)) {
            stats.vacuous += 1;
            continue;
          }
          if (!eval_conclusion(facts, claim, binding)) {
            stats.violated += 1;
            std::pair<std::string, ClaimBinding> cand{write_graph6(g), binding};
            if (!stats.first_counterexample || cand < *stats.first_counterexample)
              stats.first_counterexample = std::move(cand);
          }
        }
      }
    }
  };

  std::vector<VerifyReport> parts;
  if (jobs <= 1 || corpus.size() < 2) {
    parts.emplace_back();
    run_range(0, corpus.size(), parts.back());
  } else {
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, corpus.size()));
    parts.resize(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    std::size_t chunk = (corpus.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(corpus.size(), begin + chunk);
      threads.emplace_back([&, begin, end, w] {
        try {
          run_range(begin, end, parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : threads) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  VerifyReport report;
  for (ClaimId claim : claims) report.claims[claim];  // present even when untouched
  for (const auto& part : parts) {
    report.graphs += part.graphs;
    for (const auto& [claim, stats] : part.claims) {
      ClaimStats& agg = report.claims[claim];
      agg.checked += stats.checked;
      agg.vacuous += stats.vacuous;
      agg.violated += stats.violated;
      if (stats.first_counterexample &&
          (!agg.first_counterexample || *stats.first_counterexample < *agg.first_counterexample))
        agg.first_counterexample = stats.first_counterexample;
    }
  }
  return report;
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["graphs"] = graphs;
  nlohmann::json jc = nlohmann::json::object();
  for (const auto& [claim, stats] : claims) {
    nlohmann::json s;
    s["checked"] = stats.checked;
    s["vacuous"] = stats.vacuous;
    s["violated"] = stats.violated;
    if (stats.first_counterexample) {
      nlohmann::json ce;
      ce["graph6"] = stats.first_counterexample->first;
      if (stats.first_counterexample->second.k) ce["k"] = *stats.first_counterexample->second.k;
      if (stats.first_counterexample->second.m) ce["m"] = *stats.first_counterexample->second.m;
      s["first_counterexample"] = ce;
    } else {
      s["first_counterexample"] = nullptr;
    }
    jc[claim_name(claim)] = s;
  }
  j["claims"] = jc;
  return j.dump(2);
}

}  // namespace cyclab
