#include "chordality/problem.hpp"

#include <algorithm>

namespace chordality {

std::string problem_name(ProblemKind p) {
    switch (p) {
        case ProblemKind::MIS: return "MIS";
        case ProblemKind::VertexCover: return "VertexCover";
        case ProblemKind::DominatingSet: return "DominatingSet";
        case ProblemKind::OCT: return "OCT";
        case ProblemKind::ECT: return "ECT";
        case ProblemKind::FVS: return "FVS";
        case ProblemKind::SteinerTree: return "SteinerTree";
        case ProblemKind::ConnectedDominatingSet: return "ConnectedDominatingSet";
    }
    return "?";
}

bool parse_problem(const std::string& s, ProblemKind& out) {
    std::string t;
    t.reserve(s.size());
    for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "mis") out = ProblemKind::MIS;
    else if (t == "vc" || t == "vertexcover" || t == "vertex_cover") out = ProblemKind::VertexCover;
    else if (t == "ds" || t == "dominatingset" || t == "dominating_set") out = ProblemKind::DominatingSet;
    else if (t == "oct") out = ProblemKind::OCT;
    else if (t == "ect") out = ProblemKind::ECT;
    else if (t == "fvs") out = ProblemKind::FVS;
    else if (t == "steiner" || t == "steinertree" || t == "steiner_tree") out = ProblemKind::SteinerTree;
    else if (t == "cds" || t == "connecteddominatingset" || t == "connected_dominating_set")
        out = ProblemKind::ConnectedDominatingSet;
    else return false;
    return true;
}

std::string solution_to_json(const Solution& s) {
    std::string out = "{\"problem\":\"" + problem_name(s.problem) + "\",\"value\":" +
                      std::to_string(s.value) + ",\"vertices\":[";
    for (size_t i = 0; i < s.vertices.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(s.vertices[i] + 1);
    }
    out += "]}";
    return out;
}

} // namespace chordality
