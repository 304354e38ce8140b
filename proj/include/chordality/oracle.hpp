#pragma once

#include "chordality/graph.hpp"
#include "chordality/problem.hpp"

namespace chordality::oracle {

// hard size guards: the oracle is exponential by design and refuses larger inputs.
inline constexpr int kMaxVertices = 20;
inline constexpr int kMaxVerticesEct = 16;

// Feasibility predicates, exactly as the problems are defined.  These are the
// ground truth used by tests and by the oracle's own subset scans.
bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_dominating_set(const Graph& g, const VertexSet& s);
bool is_oct(const Graph& g, const VertexSet& s);  // G\s bipartite
bool is_ect(const Graph& g, const VertexSet& s);  // G\s has no even induced cycle
bool is_fvs(const Graph& g, const VertexSet& s);  // G\s acyclic
bool is_steiner_set(const Graph& g, const VertexSet& s, const VertexSet& terminals);
bool is_connected_dominating_set(const Graph& g, const VertexSet& s);

bool feasible(ProblemKind p, const Graph& g, const VertexSet& candidate,
              const VertexSet& terminals = {});

// Exact optimum by brute force (subset scans / Dreyfus-Wagner for Steiner).
// Throws std::invalid_argument when a guard is exceeded, std::runtime_error
// when no feasible solution exists (disconnected Steiner/CDS inputs).
Solution solve(ProblemKind p, const Graph& g, const VertexSet& terminals = {});

// Naive Steiner reference (connected-superset scan), used to cross-check the
// Dreyfus-Wagner implementation on small inputs.
Solution steiner_by_subset_scan(const Graph& g, const VertexSet& terminals);

} // namespace chordality::oracle
