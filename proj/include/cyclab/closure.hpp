#ifndef CYCLAB_CLOSURE_HPP
#define CYCLAB_CLOSURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cyclab/graph.hpp"

namespace cyclab {

// Bondy-Chvatal closure: repeatedly join nonadjacent x, y with
// d(x) + d(y) >= n until no such pair remains. The fixed point is
// independent of the processing order.
Graph bondy_chvatal_closure(const Graph& g);

// Closure plus the edges it added, in the order they were added. The trace
// is what makes hamiltonian cycles of the closure liftable back into g.
std::pair<Graph, std::vector<std::pair<int, int>>> bondy_chvatal_closure_trace(const Graph& g);

// true <=> bondy_chvatal_closure(g) == g
bool is_closed(const Graph& g);

// true <=> every nonadjacent pair has degree sum <= n-1 (equivalently, g is
// closed)
bool closed_nonadjacent_bound_holds(const Graph& g);

// When cl(g) is complete (n >= 3), returns a hamiltonian cycle of g itself,
// obtained by taking the obvious cycle of K_n and eliminating each closure
// edge in reverse order with the standard degree-sum crossing argument.
// nullopt when the closure does not complete.
std::optional<std::vector<int>> hamiltonian_cycle_from_closure(const Graph& g);

}  // namespace cyclab

#endif
