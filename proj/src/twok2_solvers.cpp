#include "chordality/twok2_solvers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chordality {

namespace {

VertexSet all_vertices(int n) {
    VertexSet v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

void require_in_class(const Graph& g, SubclassTag tag, const std::string& who) {
    if (!is_connected(g))
        throw std::invalid_argument(who + ": input graph must be connected");
    if (!in_subclass(g, tag))
        throw std::invalid_argument(who + ": input graph is not in class " + subclass_name(tag));
}

int edges_within(const Graph& g, const VertexSet& verts) {
    int cnt = 0;
    for (Vertex u : verts)
        for (Vertex v : g.neighbors(u))
            if (v > u && set_contains(verts, v)) ++cnt;
    return cnt;
}

bool acyclic_on(const Graph& g, const VertexSet& verts) {
    if (verts.size() < 3) return true;
    return is_acyclic(induced_subgraph(g, verts).graph);
}

bool dominates(const Graph& g, const VertexSet& s) {
    std::vector<char> covered(g.vertex_count(), 0);
    for (Vertex v : s) {
        covered[v] = 1;
        for (Vertex u : g.neighbors(v)) covered[u] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

Solution fvs_result(const Graph& g, const VertexSet& kept) {
    VertexSet removed = set_difference(all_vertices(g.vertex_count()), kept);
    return {ProblemKind::FVS, removed, static_cast<int>(removed.size())};
}

// Bipartite members have nested neighborhoods per side, so some maximum
// induced forest keeps a smallest-degree prefix of each side: enumerate the
// two prefix lengths and keep the first strictly largest acyclic choice.
Solution fvs_chain(const Graph& g) {
    if (is_acyclic(g)) return {ProblemKind::FVS, {}, 0};
    BipartiteResult col = is_bipartite(g);
    if (!col.bipartite)
        throw std::logic_error("fvs_chain: expected a bipartite graph");
    VertexSet side[2];
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        side[col.coloring[v] == col.coloring[0] ? 0 : 1].push_back(v);
    for (VertexSet& s : side)
        std::sort(s.begin(), s.end(), [&g](Vertex a, Vertex b) {
            return std::make_pair(g.degree(a), a) < std::make_pair(g.degree(b), b);
        });
    VertexSet best;
    for (int ca = static_cast<int>(side[0].size()); ca >= 0; --ca) {
        for (int cb = static_cast<int>(side[1].size()); cb >= 0; --cb) {
            VertexSet kept(side[0].begin(), side[0].begin() + ca);
            kept.insert(kept.end(), side[1].begin(), side[1].begin() + cb);
            std::sort(kept.begin(), kept.end());
            if (kept.size() > best.size() && acyclic_on(g, kept)) best = kept;
        }
    }
    return fvs_result(g, best);
}

// Non-bipartite triangle-free members split into five true twin classes:
// trivial vertices (universal to S), the separator halves attached to each
// core side, and the two sides of the completely joined bipartite core.
struct TwinGroups {
    VertexSet T, SX, SY, X, Y;
};

TwinGroups twin_groups(const Graph& g, const SeparatorDecomposition& d, const std::string& who) {
    if (!d.G1)
        throw std::logic_error(who + ": expected a unique non-trivial component");
    const VertexSet& g1 = *d.G1;
    InducedSubgraph core = induced_subgraph(g, g1);
    BipartiteResult col = is_bipartite(core.graph);
    if (!col.bipartite)
        throw std::logic_error(who + ": core of a triangle-free member must be bipartite");
    TwinGroups tg;
    tg.T = d.T;
    // mapping ascends with the sorted input, so X and Y come out sorted
    for (std::size_t i = 0; i < g1.size(); ++i)
        (col.coloring[i] == col.coloring[0] ? tg.X : tg.Y).push_back(core.mapping[i]);
    for (Vertex s : d.S) {
        VertexSet nb = set_intersection(g.neighbors(s), g1);
        if (nb == tg.X)
            tg.SX.push_back(s);
        else if (nb == tg.Y)
            tg.SY.push_back(s);
        else
            throw std::logic_error(who + ": separator vertex must see exactly one full core side");
    }
    for (Vertex t : tg.T)
        if (set_intersection(g.neighbors(t), d.S) != d.S)
            throw std::logic_error(who + ": trivial vertex must see all of the separator");
    for (Vertex x : tg.X)
        for (Vertex y : tg.Y)
            if (!g.has_edge(x, y))
                throw std::logic_error(who + ": core sides must be completely joined");
    if (tg.SX.empty() || tg.SY.empty())
        throw std::logic_error(who + ": both separator sides must be attached");
    return tg;
}

// Within a twin class, keeping all, one or none of its members is enough: a
// cycle through an added twin either avoids some kept twin (swap them) or
// shortens across a chord until it does.
Solution fvs_twin_classes(const Graph& g, const TwinGroups& tg) {
    const std::vector<VertexSet> groups = {tg.T, tg.SX, tg.SY, tg.X, tg.Y};
    std::vector<std::vector<int>> counts;
    for (const VertexSet& grp : groups) {
        std::vector<int> c;
        int sz = static_cast<int>(grp.size());
        for (int k : {sz, 1, 0})
            if (k <= sz && (c.empty() || c.back() != k)) c.push_back(k);
        counts.push_back(c);
    }
    VertexSet best;
    std::vector<std::size_t> pick(groups.size(), 0);
    while (true) {
        VertexSet kept;
        for (std::size_t i = 0; i < groups.size(); ++i)
            kept.insert(kept.end(), groups[i].begin(),
                        groups[i].begin() + counts[i][pick[i]]);
        std::sort(kept.begin(), kept.end());
        if (kept.size() > best.size() && acyclic_on(g, kept)) best = kept;
        std::size_t i = groups.size();
        while (i > 0 && pick[i - 1] + 1 == counts[i - 1].size()) {
            pick[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++pick[i - 1];
    }
    return fvs_result(g, best);
}

// Separator peeling for the chordal-leaning classes.  A clique separator
// keeps at most one vertex in any induced forest, so peel |S|-1 vertices and
// recurse on each choice of survivor plus the core.  clique_only marks the
// split class, whose separators are always cliques; without it the ladder
// also handles independent separators (a plain five-cycle) and mixed ones
// (core is a single edge; drop all separator vertices except one that misses
// a core endpoint).
std::pair<int, VertexSet> fvs_ladder(const Graph& g, const VertexSet& verts,
                                     std::map<VertexSet, std::pair<int, VertexSet>>& memo,
                                     bool clique_only, const std::string& who) {
    auto it = memo.find(verts);
    if (it != memo.end()) return it->second;
    std::pair<int, VertexSet> out{0, {}};
    int k = static_cast<int>(verts.size());
    if (acyclic_on(g, verts)) {
        // keep everything
    } else if (2 * edges_within(g, verts) == k * (k - 1)) {
        out = {k - 2, VertexSet(verts.begin() + 2, verts.end())};
    } else {
        InducedSubgraph sub = induced_subgraph(g, verts);
        auto dec = find_minimal_separator(sub.graph);
        if (!dec)
            throw std::logic_error(who + ": non-complete subgraph without a separator");
        VertexSet s_orig, g1_orig;
        for (Vertex v : dec->S) s_orig.push_back(sub.mapping[v]);
        if (dec->G1)
            for (Vertex v : *dec->G1) g1_orig.push_back(sub.mapping[v]);
        int s_sz = static_cast<int>(s_orig.size());
        int s_edges = edges_within(g, s_orig);
        if (2 * s_edges == s_sz * (s_sz - 1)) {
            if (dec->T.empty())
                throw std::logic_error(who + ": clique separator without trivial components");
            int best = -1;
            VertexSet best_inner;
            Vertex best_j = -1;
            for (Vertex j : s_orig) {
                auto r = fvs_ladder(g, sorted_unique(set_union(g1_orig, {j})), memo,
                                    clique_only, who);
                if (best < 0 || r.first < best) {
                    best = r.first;
                    best_inner = r.second;
                    best_j = j;
                }
            }
            VertexSet removed = set_union(set_difference(s_orig, {best_j}), best_inner);
            out = {static_cast<int>(removed.size()), removed};
        } else if (clique_only) {
            throw std::logic_error(who + ": split-class separator is not a clique");
        } else if (s_edges == 0) {
            if (k != 5 || edges_within(g, verts) != 5 || s_sz != 2)
                throw std::logic_error(who + ": independent separator outside a five-cycle");
            out = {1, {s_orig[1]}};
        } else {
            if (g1_orig.size() != 2)
                throw std::logic_error(who + ": mixed separator without an edge core");
            Vertex keep = -1;
            for (Vertex j : s_orig)
                if (!(g.has_edge(j, g1_orig[0]) && g.has_edge(j, g1_orig[1]))) {
                    keep = j;
                    break;
                }
            if (keep < 0)
                throw std::logic_error(who + ": mixed separator fully attached to the core edge");
            VertexSet removed = set_difference(s_orig, {keep});
            out = {static_cast<int>(removed.size()), removed};
        }
        if (!acyclic_on(g, set_difference(verts, out.second)))
            throw std::logic_error(who + ": peeling left a cycle");
    }
    memo.emplace(verts, out);
    return out;
}

Solution fvs_ladder_result(const Graph& g, bool clique_only, const std::string& who) {
    std::map<VertexSet, std::pair<int, VertexSet>> memo;
    auto r = fvs_ladder(g, all_vertices(g.vertex_count()), memo, clique_only, who);
    return {ProblemKind::FVS, r.second, r.first};
}

// Every member has a dominating set of size at most three: scan vertices,
// then edges (adjacent pairs first, so the connected composition can reuse
// the witness), then non-adjacent pairs, then the structural triple of a
// two-sided member.
Solution ds_scan(const Graph& g, const SeparatorDecomposition& d, bool allow_triple,
                 const std::string& who) {
    int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) return {ProblemKind::DominatingSet, {v}, 1};
    for (const auto& [u, v] : g.edges())
        if (dominates(g, {u, v})) return {ProblemKind::DominatingSet, {u, v}, 2};
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (dominates(g, {u, v})) return {ProblemKind::DominatingSet, {u, v}, 2};
        }
    if (!allow_triple)
        throw std::logic_error(who + ": chain member without a dominating edge");
    TwinGroups tg = twin_groups(g, d, who);
    VertexSet triple = sorted_unique({tg.SX.front(), tg.X.front(), tg.Y.front()});
    if (!dominates(g, triple))
        throw std::logic_error(who + ": structural triple does not dominate");
    return {ProblemKind::DominatingSet, triple, 3};
}

// Zero, one or two additions always suffice to connect terminals in these
// classes; scan them in order and return the first success.
Solution steiner_scan(const Graph& g, const VertexSet& terminals, SubclassTag tag,
                      const std::string& who) {
    require_in_class(g, tag, who);
    if (terminals.empty())
        throw std::invalid_argument(who + ": terminals must be non-empty");
    for (Vertex t : terminals)
        if (t < 0 || t >= g.vertex_count())
            throw std::invalid_argument(who + ": terminal out of range");
    VertexSet terms = sorted_unique(terminals);
    if (induces_connected(g, terms)) return {ProblemKind::SteinerTree, terms, 0};
    VertexSet rest = set_difference(all_vertices(g.vertex_count()), terms);
    for (Vertex v : rest) {
        VertexSet cand = set_union(terms, {v});
        if (induces_connected(g, cand)) return {ProblemKind::SteinerTree, cand, 1};
    }
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            VertexSet cand = set_union(terms, {rest[i], rest[j]});
            if (induces_connected(g, cand)) return {ProblemKind::SteinerTree, cand, 2};
        }
    throw std::logic_error(who + ": no two additions connect the terminals");
}

} // namespace

Solution fvs_c3c5(const Graph& g, const SeparatorDecomposition&) {
    require_in_class(g, SubclassTag::C3C5Free, "fvs_c3c5");
    return fvs_chain(g);
}

Solution steiner_c3c5(const Graph& g, const SeparatorDecomposition&, const VertexSet& terminals) {
    return steiner_scan(g, terminals, SubclassTag::C3C5Free, "steiner_c3c5");
}

Solution ds_c3c5(const Graph& g, const SeparatorDecomposition&) {
    require_in_class(g, SubclassTag::C3C5Free, "ds_c3c5");
    return ds_scan(g, SeparatorDecomposition{}, false, "ds_c3c5");
}

Solution fvs_split(const Graph& g, const SeparatorDecomposition&) {
    require_in_class(g, SubclassTag::C4C5Free, "fvs_split");
    return fvs_ladder_result(g, true, "fvs_split");
}

Solution fvs_c3(const Graph& g) {
    require_in_class(g, SubclassTag::C3Free, "fvs_c3");
    if (is_acyclic(g)) return {ProblemKind::FVS, {}, 0};
    if (is_bipartite(g).bipartite) return fvs_chain(g);
    auto dec = find_minimal_separator(g);
    if (!dec) throw std::logic_error("fvs_c3: a non-bipartite member cannot be complete");
    return fvs_twin_classes(g, twin_groups(g, *dec, "fvs_c3"));
}

Solution steiner_c3(const Graph& g, const SeparatorDecomposition&, const VertexSet& terminals) {
    return steiner_scan(g, terminals, SubclassTag::C3Free, "steiner_c3");
}

Solution ds_c3(const Graph& g, const SeparatorDecomposition& d) {
    require_in_class(g, SubclassTag::C3Free, "ds_c3");
    return ds_scan(g, d, true, "ds_c3");
}

Solution fvs_c4(const Graph& g, const SeparatorDecomposition&) {
    require_in_class(g, SubclassTag::C4Free, "fvs_c4");
    return fvs_ladder_result(g, false, "fvs_c4");
}

Solution connected_ds_2k2(const Graph& g, SubclassTag tag) {
    if (tag != SubclassTag::C3C5Free && tag != SubclassTag::C3Free)
        throw std::invalid_argument("connected_ds_2k2: unsupported class " + subclass_name(tag));
    require_in_class(g, tag, "connected_ds_2k2");
    auto dec = find_minimal_separator(g);
    SeparatorDecomposition d = dec ? *dec : SeparatorDecomposition{};
    Solution ds = (tag == SubclassTag::C3C5Free) ? ds_c3c5(g, d) : ds_c3(g, d);
    Solution st = (tag == SubclassTag::C3C5Free) ? steiner_c3c5(g, d, ds.vertices)
                                                 : steiner_c3(g, d, ds.vertices);
    return {ProblemKind::ConnectedDominatingSet, st.vertices,
            static_cast<int>(st.vertices.size())};
}

Solution solve_twok2(const Graph& g, SubclassTag tag, ProblemKind p, const VertexSet& terminals) {
    if (p == ProblemKind::SteinerTree) {
        if (terminals.empty())
            throw std::invalid_argument("solve_twok2: Steiner tree needs terminals");
    } else if (!terminals.empty()) {
        throw std::invalid_argument("solve_twok2: terminals only apply to the Steiner tree");
    }
    require_in_class(g, tag, "solve_twok2");
    auto decomposed = [&g]() {
        auto dec = find_minimal_separator(g);
        return dec ? *dec : SeparatorDecomposition{};
    };
    switch (p) {
        case ProblemKind::FVS:
            switch (tag) {
                case SubclassTag::C3C4Free:
                case SubclassTag::C3Free: return fvs_c3(g);
                case SubclassTag::C3C5Free: return fvs_c3c5(g, decomposed());
                case SubclassTag::C4C5Free: return fvs_split(g, decomposed());
                case SubclassTag::C4Free: return fvs_c4(g, decomposed());
                default: break;
            }
            break;
        case ProblemKind::DominatingSet:
            switch (tag) {
                case SubclassTag::C3C4Free:
                case SubclassTag::C3Free: return ds_c3(g, decomposed());
                case SubclassTag::C3C5Free: return ds_c3c5(g, decomposed());
                default: break;
            }
            break;
        case ProblemKind::SteinerTree:
            switch (tag) {
                case SubclassTag::C3C4Free:
                case SubclassTag::C3Free: return steiner_c3(g, decomposed(), terminals);
                case SubclassTag::C3C5Free: return steiner_c3c5(g, decomposed(), terminals);
                default: break;
            }
            break;
        case ProblemKind::ConnectedDominatingSet:
            switch (tag) {
                case SubclassTag::C3C4Free:
                case SubclassTag::C3Free: return connected_ds_2k2(g, SubclassTag::C3Free);
                case SubclassTag::C3C5Free: return connected_ds_2k2(g, SubclassTag::C3C5Free);
                default: break;
            }
            break;
        default: break;
    }
    throw std::invalid_argument("solve_twok2: no solver for " + problem_name(p) +
                                " on class " + subclass_name(tag));
}

} // namespace chordality
