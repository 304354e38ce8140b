#pragma once

#include "chordality/graph.hpp"
#include "chordality/problem.hpp"
#include "chordality/separator.hpp"

namespace chordality {

// Exact solvers on 2K2-free subclasses.  Each checks class membership
// (in_subclass, so narrower inputs such as trees qualify everywhere) and
// throws std::invalid_argument on a mismatch.  d must be the decomposition of
// g; solvers that short-circuit complete graphs accept a default-constructed
// d in that case.  Internal recursions recompute decompositions of subgraphs.
Solution fvs_c3c5(const Graph& g, const SeparatorDecomposition& d);
Solution steiner_c3c5(const Graph& g, const SeparatorDecomposition& d, const VertexSet& terminals);
Solution ds_c3c5(const Graph& g, const SeparatorDecomposition& d);
Solution fvs_split(const Graph& g, const SeparatorDecomposition& d);
Solution fvs_c3(const Graph& g);
Solution steiner_c3(const Graph& g, const SeparatorDecomposition& d, const VertexSet& terminals);
Solution ds_c3(const Graph& g, const SeparatorDecomposition& d);
Solution fvs_c4(const Graph& g, const SeparatorDecomposition& d);

// Dominating set as terminals -> subclass Steiner tree -> union.
// Supported for classes with both solvers (C3C5Free, C3Free and narrower).
Solution connected_ds_2k2(const Graph& g, SubclassTag tag);

// Routes (problem, class) to the solver above; throws std::invalid_argument
// for unsupported combinations.  g must be connected.
Solution solve_twok2(const Graph& g, SubclassTag tag, ProblemKind p, const VertexSet& terminals = {});

} // namespace chordality
