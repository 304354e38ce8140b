#pragma once

#include "chordality/graph.hpp"
#include "chordality/problem.hpp"
#include "chordality/vco.hpp"

namespace chordality {

// Polynomial-time solvers driven by a vertex cycle ordering.  Every solver
// first checks validate_vco(g, vco) and throws std::invalid_argument if it
// fails.  g must be connected (it is, if the vco validates).
Solution solve_mis(const Graph& g, const Vco& vco);
Solution solve_vertex_cover(const Graph& g, const Vco& vco);
Solution solve_dominating_set(const Graph& g, const Vco& vco);
Solution solve_oct(const Graph& g, const Vco& vco);
Solution solve_ect(const Graph& g, const Vco& vco);
Solution solve_fvs(const Graph& g, const Vco& vco);
// terminals non-empty; throws std::runtime_error if no tree exists.
Solution solve_steiner(const Graph& g, const Vco& vco, const VertexSet& terminals);
Solution solve_connected_dominating_set(const Graph& g, const Vco& vco);

// Convenience wrapper: splits disconnected inputs into components, peels each
// with parameter k, and combines per-component answers (additively for the
// subset problems; Steiner requires all terminals in one component).  Throws
// std::runtime_error if any component is rejected by the recognizer.
Solution solve_sck(const Graph& g, int k, ProblemKind p, const VertexSet& terminals = {});

} // namespace chordality
