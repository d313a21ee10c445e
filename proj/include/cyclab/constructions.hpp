#ifndef CYCLAB_CONSTRUCTIONS_HPP
#define CYCLAB_CONSTRUCTIONS_HPP

#include <span>
#include <string>
#include <vector>

#include "cyclab/cycles.hpp"
#include "cyclab/graph.hpp"

namespace cyclab {

// The named graph families, with fixed vertex layouts so certificates stay
// reproducible:
//   COMPLETE_BIPARTITE(k, n)  side A = 0..k-1, side B = k..n-1
//   JOIN_K2_2KK(k)            K_2 on {0,1} joined to two K_k blocks
//   EXTREMAL_NONHAM(n, k)     clique on 0..n-k-1; independents n-k..n-1, each
//                             adjacent to clique vertices 0..k-1
//   HALF_JOIN(n)              p = (n-1)/2; K_p on 0..p-1 joined to n-p
//                             independent vertices
struct ConstructionSpec {
  enum class Family {
    COMPLETE_BIPARTITE,
    JOIN_K2_2KK,
    EXTREMAL_NONHAM,
    HALF_JOIN,
    PETERSEN,
    COMPLETE,
  };
  Family family{};
  int n = 0;
  int k = 0;
};

// Parse the CLI grammar: complete-bipartite K N | join-k2-2kk K |
// extremal-nonham N K | half-join N | petersen | complete N
ConstructionSpec parse_construction(const std::vector<std::string>& args);

Graph build(const ConstructionSpec& spec);

// The direct routing procedure for K_{k,n-k}: visit the terminals of T in
// order, bridging same-side neighbours in T through the lowest unused vertex
// of the other side. Requires |T| <= k and k <= n/2; the result is a valid
// cycle visiting T in order.
CycleCertificate route_ordered_cycle_bipartite(int k, int n, std::span<const int> t);

}  // namespace cyclab

#endif
