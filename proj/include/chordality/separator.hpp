#pragma once

#include <optional>
#include <string>

#include "chordality/graph.hpp"
#include "chordality/problem.hpp"

namespace chordality {

enum class SubclassTag {
    C3C4Free,       // (2K2, C3, C4)-free: tree or C5
    C3C5Free,       // (2K2, C3, C5)-free: bipartite
    C4C5Free,       // (2K2, C4, C5)-free: split (2K2-free chordal)
    C3Free,         // (2K2, C3)-free, contains C4 and C5
    C4Free,         // (2K2, C4)-free, contains C3 and C5
    General2K2Free, // 2K2-free with C3, C4 and C5 all present
    Not2K2Free,
};

std::string subclass_name(SubclassTag t);
bool parse_subclass(const std::string& s, SubclassTag& out);

struct TwoK2Witness {
    Vertex a = -1, b = -1, c = -1, d = -1; // edges ab and cd, no edge between them
};

bool is_2k2_free(const Graph& g);
bool is_2k2_free(const Graph& g, TwoK2Witness& w);

bool has_induced_c3(const Graph& g);
bool has_induced_c4(const Graph& g);
bool has_induced_c5(const Graph& g);

// Most specific tag by exact forbidden-subgraph tests.
SubclassTag classify_subclass(const Graph& g);

// Class membership (classes nest: e.g. a tree is in every class, a C4-free
// graph qualifies for any solver requiring C4-freeness).
bool in_subclass(const Graph& g, SubclassTag tag);

struct SeparatorDecomposition {
    VertexSet S;                       // a minimal vertex separator
    std::vector<VertexSet> components; // components of G\S, ordered by smallest vertex
    VertexSet T;                       // union of trivial (single-vertex) components
    std::optional<VertexSet> G1;       // the unique non-trivial component, if exactly one
    // Default split of G1 by S-neighbor count: U universal to S, M with no
    // S-neighbor, Uprime the rest.  Theorem modules re-derive their own split
    // from s_neighbor_count when their semantics differ.
    VertexSet U, Uprime, M;
    std::vector<int> s_neighbor_count; // per vertex: |N(v) ∩ S|; -1 for v ∈ S
};

// nullopt iff g is complete.  Deterministic: picks the lexicographically
// smallest non-adjacent pair (a,b), takes C = the component of G \ N[a]
// containing b, and returns S = N(C).  g must be connected.
std::optional<SeparatorDecomposition> find_minimal_separator(const Graph& g);

// Same construction for a caller-chosen non-adjacent pair (fuzz mode).
SeparatorDecomposition find_minimal_separator(const Graph& g, Vertex a, Vertex b);

// Empty list iff every clause of the tag's structure theorem holds for d.
// Violations name the clause and witness vertices.  tag = General2K2Free
// checks the base five-clause separator structure shared by all subclasses.
std::vector<std::string> verify_structure_theorem(const Graph& g, const SeparatorDecomposition& d,
                                                  SubclassTag tag);

} // namespace chordality
