#ifndef CYCLAB_THEOREMS_HPP
#define CYCLAB_THEOREMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclab/cycles.hpp"
#include "cyclab/graph.hpp"

namespace cyclab {

// One machine-checkable implication per statement in the catalog. Claims
// quantified over a parameter (k, or m for BYER_L10) expand into one check
// per applicable binding.
enum class ClaimId {
  T1_2K,             // k-cyclable, k^2 <= n+3            => c >= min(n, 2k)
  T1_KPLUS2,         // k-cyclable, 4k+4 <= 3n            => c >= k+2
  T2_ORDERED,        // k-ordered                         => c >= min(n, 2k)
  T3_EDGE_HAM,       // kappa>=k, n>=2k(k+1), m > C(n-k,2)+k^2 => hamiltonian
  DIRAC_CYCLABLE,    // kappa >= k                        => k-cyclable
  DIRAC_CIRC,        // kappa >= k                        => c >= min(n, 2k)
  CHVATAL_ERDOS,     // alpha <= kappa                    => hamiltonian
  OWW_BOUND,         // kappa>=k>=2, alpha >= k           => c*alpha >= k(n+k-alpha)
  DIRAC_MINDEG,      // kappa >= 2                        => c >= min(2*delta, n)
  BAUER_3CYC,        // 3-cyclable                 => c >= min(n, 3delta-3, n+delta-alpha)
  NG_SCHULTZ_CONN,   // k-ordered                         => kappa >= k-1
  LI_SIGMA_HAM,      // kappa>=k, sigma_{k+1} >= n+(k-1)(alpha-1) => hamiltonian
  BYER_L9_PUBLISHED, // nonham, kappa>=k => 2k<=n-1 and
                     //   mbar >= C(k+1,2) + (k-1)(n-k-1) - sigma_{k+1}
  BYER_L9_DERIVED,   // same premise, edge-counting coefficient k+1
  BYER_L10,          // closed, nonham, m <= alpha => 2*mbar >= m(n-m) (+ m-2, n even)
  CLOSED_DEGREE_BOUND,  // closed, nonham => nonadjacent degree sums <= n-1
  CLOSURE_HAM_EQUIV,    // always => ham(g) == ham(cl(g))
  CLASSICAL_EDGE_HAM,   // m > C(n-1,2)+1 => hamiltonian
};

const char* claim_name(ClaimId id);
std::optional<ClaimId> parse_claim(const std::string& name);
const std::vector<ClaimId>& all_claims();

struct ClaimBinding {
  std::optional<int> k;
  std::optional<int> m;

  bool operator==(const ClaimBinding&) const = default;
  // ordering used for deterministic first-counterexample selection
  bool operator<(const ClaimBinding& o) const {
    return std::pair(k.value_or(-1), m.value_or(-1)) <
           std::pair(o.k.value_or(-1), o.m.value_or(-1));
  }
  std::string to_string() const;
};

struct ClaimWitness {
  std::string kind;           // "cycle", "subset", "sequence"
  std::vector<int> vertices;
};

struct ClaimCheck {
  ClaimId claim{};
  std::string graph6;
  ClaimBinding binding;
  bool premise_holds = false;
  bool conclusion_holds = false;
  bool vacuous = false;  // premise false
  std::optional<ClaimWitness> witness;

  bool violated() const { return premise_holds && !conclusion_holds; }
};

struct CheckPolicy {
  int ordered_k_max = 5;  // largest k for which k-ordered premises are decided
  CycleBudget budget;
};

// Applicable bindings for one claim on one graph (empty for n < 3; every
// hamiltonicity-flavoured statement presumes a cycle can exist at all).
std::vector<ClaimBinding> applicable_bindings(const Graph& g, ClaimId claim,
                                              const CheckPolicy& policy = {});

// Evaluates premise and conclusion independently and fully.
ClaimCheck check_claim(const Graph& g, ClaimId claim, const ClaimBinding& binding,
                       const CheckPolicy& policy = {});

struct ClaimStats {
  long long checked = 0;
  long long vacuous = 0;
  long long violated = 0;
  std::optional<std::pair<std::string, ClaimBinding>> first_counterexample;
};

struct VerifyReport {
  long long graphs = 0;
  std::map<ClaimId, ClaimStats> claims;

  bool any_violation() const {
    for (const auto& [id, s] : claims)
      if (s.violated > 0) return true;
    return false;
  }
  std::string to_json() const;
};

// Runs every claim over the corpus with all applicable bindings. The merge is
// associative and the first counterexample is the minimum under (graph6,
// binding), so the report does not depend on the parallel schedule.
VerifyReport verify_corpus(const std::vector<Graph>& corpus, const std::vector<ClaimId>& claims,
                           const CheckPolicy& policy = {}, unsigned jobs = 1);

}  // namespace cyclab

#endif
