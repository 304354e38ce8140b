#ifndef CHORDALITY_PROBLEM_HPP
#define CHORDALITY_PROBLEM_HPP

#include <string>
#include <vector>

namespace chordality {

using Vertex = int;
// sorted, duplicate-free vertex list (0-indexed internally)
using VertexSet = std::vector<Vertex>;

enum class ProblemKind {
    MIS,
    VertexCover,
    DominatingSet,
    OCT,
    ECT,
    FVS,
    SteinerTree,
    ConnectedDominatingSet,
};

struct Solution {
    ProblemKind problem;
    VertexSet vertices;
    // cardinality of `vertices`; for SteinerTree, number of non-terminal vertices
    int value = 0;
};

std::string problem_name(ProblemKind p);
// accepts canonical names and short cli aliases (mis, vc, ds, oct, ect, fvs, steiner, cds)
bool parse_problem(const std::string& s, ProblemKind& out);

// json line used by the cli: {"problem":...,"value":...,"vertices":[1-indexed]}
std::string solution_to_json(const Solution& s);

} // namespace chordality

#endif
