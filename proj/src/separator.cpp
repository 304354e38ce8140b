#include "chordality/separator.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chordality {

namespace {

std::string vertex_list(const VertexSet& vs) {
    std::ostringstream out;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out << ' ';
        out << vs[i];
    }
    return out.str();
}

// Edges of the subgraph induced on `verts` (original ids, u < v).
std::vector<std::pair<Vertex, Vertex>> edges_within(const Graph& g, const VertexSet& verts) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u : verts)
        for (Vertex v : g.neighbors(u))
            if (u < v && set_contains(verts, v)) out.push_back({u, v});
    return out;
}

bool universal_to(const Graph& g, Vertex v, const VertexSet& target) {
    for (Vertex s : target)
        if (s != v && !g.has_edge(v, s)) return false;
    return true;
}

// Induced P4 a-b-c-d: edges ab, bc, cd and nothing else among the four.
bool has_induced_p4(const Graph& g) {
    for (const auto& [b, c] : g.edges()) {
        for (int flip = 0; flip < 2; ++flip) {
            Vertex x = flip ? c : b;
            Vertex y = flip ? b : c;
            for (Vertex a : g.neighbors(x)) {
                if (a == y || g.has_edge(a, y)) continue;
                for (Vertex d : g.neighbors(y)) {
                    if (d == x || d == a || g.has_edge(d, x) || g.has_edge(d, a)) continue;
                    return true;
                }
            }
        }
    }
    return false;
}

// BFS distances within g from src.
std::vector<int> bfs_distances(const Graph& g, Vertex src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<Vertex> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

SeparatorDecomposition build_decomposition(const Graph& g, Vertex a, Vertex b) {
    // C = the component of G \ N[a] containing b; S = N(C).
    std::vector<char> blocked(g.vertex_count(), 0);
    blocked[a] = 1;
    for (Vertex w : g.neighbors(a)) blocked[w] = 1;

    std::vector<char> in_c(g.vertex_count(), 0);
    std::deque<Vertex> queue{b};
    in_c[b] = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u))
            if (!blocked[w] && !in_c[w]) {
                in_c[w] = 1;
                queue.push_back(w);
            }
    }

    SeparatorDecomposition d;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in_c[v]) continue;
        bool touches_c = false;
        for (Vertex w : g.neighbors(v))
            if (in_c[w]) touches_c = true;
        if (touches_c) d.S.push_back(v);
    }

    // Components of G \ S, ordered by smallest vertex.
    std::vector<char> in_s(g.vertex_count(), 0);
    for (Vertex s : d.S) in_s[s] = 1;
    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in_s[v] || seen[v]) continue;
        VertexSet comp;
        std::deque<Vertex> q2{v};
        seen[v] = 1;
        while (!q2.empty()) {
            Vertex u = q2.front();
            q2.pop_front();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (!in_s[w] && !seen[w]) {
                    seen[w] = 1;
                    q2.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        d.components.push_back(std::move(comp));
    }

    int non_trivial = 0;
    const VertexSet* g1 = nullptr;
    for (const VertexSet& comp : d.components) {
        if (comp.size() == 1) {
            d.T.push_back(comp[0]);
        } else {
            ++non_trivial;
            g1 = &comp;
        }
    }
    std::sort(d.T.begin(), d.T.end());
    if (non_trivial == 1) d.G1 = *g1;

    d.s_neighbor_count.assign(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in_s[v]) {
            d.s_neighbor_count[v] = -1;
            continue;
        }
        int cnt = 0;
        for (Vertex w : g.neighbors(v))
            if (in_s[w]) ++cnt;
        d.s_neighbor_count[v] = cnt;
    }

    if (d.G1) {
        const int full = static_cast<int>(d.S.size());
        for (Vertex v : *d.G1) {
            if (d.s_neighbor_count[v] == full)
                d.U.push_back(v);
            else if (d.s_neighbor_count[v] == 0)
                d.M.push_back(v);
            else
                d.Uprime.push_back(v);
        }
    }
    return d;
}

} // namespace

std::string subclass_name(SubclassTag t) {
    switch (t) {
        case SubclassTag::C3C4Free: return "c3c4-free";
        case SubclassTag::C3C5Free: return "c3c5-free";
        case SubclassTag::C4C5Free: return "c4c5-free";
        case SubclassTag::C3Free: return "c3-free";
        case SubclassTag::C4Free: return "c4-free";
        case SubclassTag::General2K2Free: return "2k2-free";
        case SubclassTag::Not2K2Free: return "not-2k2-free";
    }
    throw std::logic_error("unknown subclass tag");
}

bool parse_subclass(const std::string& s, SubclassTag& out) {
    if (s == "c3c4-free" || s == "c3c4") {
        out = SubclassTag::C3C4Free;
    } else if (s == "c3c5-free" || s == "c3c5") {
        out = SubclassTag::C3C5Free;
    } else if (s == "c4c5-free" || s == "c4c5" || s == "split") {
        out = SubclassTag::C4C5Free;
    } else if (s == "c3-free" || s == "c3") {
        out = SubclassTag::C3Free;
    } else if (s == "c4-free" || s == "c4") {
        out = SubclassTag::C4Free;
    } else if (s == "2k2-free" || s == "2k2" || s == "general") {
        out = SubclassTag::General2K2Free;
    } else if (s == "not-2k2-free") {
        out = SubclassTag::Not2K2Free;
    } else {
        return false;
    }
    return true;
}

bool is_2k2_free(const Graph& g) {
    TwoK2Witness w;
    return is_2k2_free(g, w);
}

bool is_2k2_free(const Graph& g, TwoK2Witness& w) {
    const auto& es = g.edges();
    for (size_t i = 0; i < es.size(); ++i) {
        const auto [a, b] = es[i];
        for (size_t j = i + 1; j < es.size(); ++j) {
            const auto [c, d] = es[j];
            if (c == a || c == b || d == a || d == b) continue;
            if (g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d))
                continue;
            w = {a, b, c, d};
            return false;
        }
    }
    return true;
}

bool has_induced_c3(const Graph& g) {
    for (const auto& [u, v] : g.edges())
        for (Vertex w : g.neighbors(u))
            if (w != v && g.has_edge(w, v)) return true;
    return false;
}

bool has_induced_c4(const Graph& g) {
    // u-a-v-b-u with u,v and a,b the non-adjacent diagonals.
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            if (g.has_edge(u, v)) continue;
            VertexSet common;
            for (Vertex w : g.neighbors(u))
                if (g.has_edge(w, v)) common.push_back(w);
            for (size_t i = 0; i < common.size(); ++i)
                for (size_t j = i + 1; j < common.size(); ++j)
                    if (!g.has_edge(common[i], common[j])) return true;
        }
    }
    return false;
}

bool has_induced_c5(const Graph& g) {
    // a-b-c-d-e-a with all five diagonals absent.
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b : g.neighbors(a)) {
            for (Vertex c : g.neighbors(b)) {
                if (c == a || g.has_edge(c, a)) continue;
                for (Vertex d : g.neighbors(c)) {
                    if (d == a || d == b || g.has_edge(d, a) || g.has_edge(d, b)) continue;
                    for (Vertex e : g.neighbors(d)) {
                        if (e == a || e == b || e == c) continue;
                        if (g.has_edge(e, b) || g.has_edge(e, c)) continue;
                        if (g.has_edge(e, a)) return true;
                    }
                }
            }
        }
    }
    return false;
}

SubclassTag classify_subclass(const Graph& g) {
    if (!is_2k2_free(g)) return SubclassTag::Not2K2Free;
    const bool c3 = has_induced_c3(g);
    const bool c4 = has_induced_c4(g);
    const bool c5 = has_induced_c5(g);
    if (!c3 && !c4) return SubclassTag::C3C4Free;
    if (!c3 && !c5) return SubclassTag::C3C5Free;
    if (!c4 && !c5) return SubclassTag::C4C5Free;
    if (!c3) return SubclassTag::C3Free;
    if (!c4) return SubclassTag::C4Free;
    return SubclassTag::General2K2Free;
}

bool in_subclass(const Graph& g, SubclassTag tag) {
    if (tag == SubclassTag::Not2K2Free) return !is_2k2_free(g);
    if (!is_2k2_free(g)) return false;
    switch (tag) {
        case SubclassTag::C3C4Free: return !has_induced_c3(g) && !has_induced_c4(g);
        case SubclassTag::C3C5Free: return !has_induced_c3(g) && !has_induced_c5(g);
        case SubclassTag::C4C5Free: return !has_induced_c4(g) && !has_induced_c5(g);
        case SubclassTag::C3Free: return !has_induced_c3(g);
        case SubclassTag::C4Free: return !has_induced_c4(g);
        case SubclassTag::General2K2Free: return true;
        default: throw std::logic_error("unknown subclass tag");
    }
}

std::optional<SeparatorDecomposition> find_minimal_separator(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("find_minimal_separator: graph disconnected");
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        if (g.degree(a) == g.vertex_count() - 1) continue;
        for (Vertex b = 0; b < g.vertex_count(); ++b) {
            if (b == a || g.has_edge(a, b)) continue;
            return build_decomposition(g, a, b);
        }
    }
    return std::nullopt; // complete graph
}

SeparatorDecomposition find_minimal_separator(const Graph& g, Vertex a, Vertex b) {
    if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count())
        throw std::invalid_argument("find_minimal_separator: vertex out of range");
    if (a == b) throw std::invalid_argument("find_minimal_separator: vertices equal");
    if (g.has_edge(a, b)) throw std::invalid_argument("find_minimal_separator: vertices adjacent");
    if (!is_connected(g)) throw std::invalid_argument("find_minimal_separator: graph disconnected");
    return build_decomposition(g, a, b);
}

namespace {

void check_base_theorem(const Graph& g, const SeparatorDecomposition& d,
                        std::vector<std::string>& out) {
    int non_trivial = 0;
    for (const VertexSet& comp : d.components)
        if (comp.size() >= 2) ++non_trivial;
    if (non_trivial > 1)
        out.push_back("(i) more than one non-trivial component outside the separator");

    for (Vertex t : d.T)
        for (Vertex s : d.S)
            if (!g.has_edge(t, s)) {
                out.push_back("(ii) trivial component vertex " + std::to_string(t) +
                              " is not universal to the separator (misses " + std::to_string(s) +
                              ")");
                break;
            }

    if (d.G1) {
        for (const auto& [u, v] : edges_within(g, *d.G1)) {
            for (Vertex s : d.S)
                if (!g.has_edge(s, u) && !g.has_edge(s, v)) {
                    out.push_back("(iii) component edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") is not universal to the separator (" +
                                  std::to_string(s) + " sees neither endpoint)");
                    break;
                }
        }
    }

    InducedSubgraph gs = induced_subgraph(g, d.S);
    std::vector<VertexSet> s_comps = connected_components(gs.graph);
    int s_non_trivial = 0;
    const VertexSet* s1_local = nullptr;
    for (const VertexSet& comp : s_comps)
        if (comp.size() >= 2) {
            ++s_non_trivial;
            s1_local = &comp;
        }
    if (s_non_trivial > 1)
        out.push_back("(iv) separator induces more than one non-trivial component");

    if (s1_local && d.G1) {
        VertexSet rest; // G1 minus its separator-blind part M
        for (Vertex v : *d.G1)
            if (d.s_neighbor_count[v] > 0) rest.push_back(v);
        VertexSet s1;
        for (Vertex local : *s1_local) s1.push_back(gs.mapping[local]);
        std::sort(s1.begin(), s1.end());
        for (const auto& [x, y] : edges_within(g, s1)) {
            for (Vertex w : rest)
                if (!g.has_edge(w, x) && !g.has_edge(w, y)) {
                    out.push_back("(v) separator edge (" + std::to_string(x) + "," +
                                  std::to_string(y) + ") is not universal to vertex " +
                                  std::to_string(w) + " of the non-trivial component");
                    break;
                }
        }
    }
}

void check_independent_separator(const Graph& g, const SeparatorDecomposition& d,
                                 std::vector<std::string>& out) {
    for (size_t i = 0; i < d.S.size(); ++i)
        for (size_t j = i + 1; j < d.S.size(); ++j)
            if (g.has_edge(d.S[i], d.S[j])) {
                out.push_back("(i) separator vertices " + std::to_string(d.S[i]) + " and " +
                              std::to_string(d.S[j]) + " are adjacent");
                return;
            }
}

void check_c3c4(const Graph& g, const SeparatorDecomposition& d, std::vector<std::string>& out) {
    check_independent_separator(g, d, out);

    if (d.S.size() >= 2) {
        int trivial = 0;
        for (const VertexSet& comp : d.components)
            if (comp.size() == 1) ++trivial;
        if (trivial != 1)
            out.push_back("(ii) expected exactly one trivial component, found " +
                          std::to_string(trivial));
    }

    if (d.G1) {
        for (const auto& [u, v] : edges_within(g, *d.G1)) {
            VertexSet su, sv;
            for (Vertex s : d.S) {
                if (g.has_edge(s, u)) su.push_back(s);
                if (g.has_edge(s, v)) sv.push_back(s);
            }
            if (!set_intersection(su, sv).empty() || set_union(su, sv) != d.S) {
                out.push_back("(iii) component edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") does not split the separator neighborhood");
                break;
            }
        }
        const int want = static_cast<int>(d.S.size()) >= 2 ? 1 : -1;
        for (Vertex v : *d.G1) {
            int cnt = d.s_neighbor_count[v];
            bool bad = want == 1 ? cnt != 1 : cnt > 1;
            if (bad) {
                out.push_back("(iv) component vertex " + std::to_string(v) + " has " +
                              std::to_string(cnt) + " separator neighbors");
                break;
            }
        }
    }
}

void check_c3c5(const Graph& g, const SeparatorDecomposition& d, std::vector<std::string>& out) {
    check_independent_separator(g, d, out);

    if (d.G1) {
        for (Vertex x : d.S) {
            VertexSet nbrs;
            for (Vertex v : *d.G1)
                if (g.has_edge(x, v)) nbrs.push_back(v);
            for (size_t i = 0; i < nbrs.size() && out.size() < 64; ++i)
                for (size_t j = i + 1; j < nbrs.size(); ++j)
                    if (g.has_edge(nbrs[i], nbrs[j])) {
                        out.push_back("(ii) separator vertex " + std::to_string(x) +
                                      " has adjacent component neighbors " +
                                      std::to_string(nbrs[i]) + "," + std::to_string(nbrs[j]));
                        i = nbrs.size();
                        break;
                    }
        }

        const int full = static_cast<int>(d.S.size());
        for (const auto& [u, v] : edges_within(g, *d.G1)) {
            const int cu = d.s_neighbor_count[u];
            const int cv = d.s_neighbor_count[v];
            if (!((cu == full && cv == 0) || (cv == full && cu == 0))) {
                out.push_back("(iii) component edge (" + std::to_string(u) + "," +
                              std::to_string(v) +
                              ") lacks the universal/blind endpoint split");
                break;
            }
        }
    }

    for (Vertex t : d.T)
        for (Vertex s : d.S)
            if (!g.has_edge(t, s)) {
                out.push_back("(iv) trivial vertices and separator do not induce a complete "
                              "bipartite graph: (" +
                              std::to_string(t) + "," + std::to_string(s) + ") missing");
                goto done_iv;
            }
done_iv:

    if (d.G1) {
        VertexSet u_full, u_rest;
        for (Vertex v : *d.G1) {
            if (d.s_neighbor_count[v] == static_cast<int>(d.S.size()))
                u_full.push_back(v);
            else
                u_rest.push_back(v);
        }
        if (!u_rest.empty()) {
            bool found = false;
            for (Vertex u : u_full)
                if (universal_to(g, u, u_rest)) found = true;
            if (!found)
                out.push_back("(v) no separator-universal component vertex is universal to the "
                              "non-universal part {" +
                              vertex_list(u_rest) + "}");
        }
    }
}

void check_c4c5(const Graph& g, const SeparatorDecomposition& d, std::vector<std::string>& out) {
    for (size_t i = 0; i < d.S.size(); ++i)
        for (size_t j = i + 1; j < d.S.size(); ++j)
            if (!g.has_edge(d.S[i], d.S[j])) {
                out.push_back("(i) separator is not a clique: " + std::to_string(d.S[i]) +
                              " and " + std::to_string(d.S[j]) + " are non-adjacent");
                return;
            }
}

void check_c3(const Graph& g, const SeparatorDecomposition& d, std::vector<std::string>& out) {
    check_independent_separator(g, d, out);

    if (d.G1) {
        InducedSubgraph sub = induced_subgraph(g, *d.G1);
        std::vector<int> local_of(g.vertex_count(), -1);
        for (size_t i = 0; i < sub.mapping.size(); ++i) local_of[sub.mapping[i]] = static_cast<int>(i);

        for (Vertex x : d.S) {
            VertexSet nbrs;
            for (Vertex v : *d.G1)
                if (g.has_edge(x, v)) nbrs.push_back(v);
            bool flagged = false;
            for (size_t i = 0; i < nbrs.size() && !flagged; ++i) {
                std::vector<int> dist = bfs_distances(sub.graph, local_of[nbrs[i]]);
                for (size_t j = i + 1; j < nbrs.size(); ++j)
                    if (dist[local_of[nbrs[j]]] != 2) {
                        out.push_back("(ii) separator vertex " + std::to_string(x) +
                                      " has component neighbors " + std::to_string(nbrs[i]) +
                                      "," + std::to_string(nbrs[j]) +
                                      " at component distance != 2");
                        flagged = true;
                        break;
                    }
            }
        }

        if (d.S.size() >= 2) {
            VertexSet m, core;
            for (Vertex v : *d.G1)
                (d.s_neighbor_count[v] == 0 ? m : core).push_back(v);
            if (has_induced_p4(induced_subgraph(g, core).graph))
                out.push_back("(iii) component minus its separator-blind part contains an "
                              "induced P4");
            for (size_t i = 0; i < m.size(); ++i)
                for (size_t j = i + 1; j < m.size(); ++j)
                    if (g.has_edge(m[i], m[j])) {
                        out.push_back("(iii) separator-blind vertices " + std::to_string(m[i]) +
                                      "," + std::to_string(m[j]) + " are adjacent");
                        i = m.size();
                        break;
                    }
            if (!m.empty()) {
                bool found = false;
                for (Vertex u : core)
                    if (universal_to(g, u, m)) found = true;
                if (!found)
                    out.push_back("(iii) no component vertex is universal to the "
                                  "separator-blind part {" +
                                  vertex_list(m) + "}");
            }
        }

        if (has_induced_c5(sub.graph))
            out.push_back("(iv) non-trivial component contains an induced C5");
        if (has_induced_c5(induced_subgraph(g, set_union(*d.G1, d.S)).graph))
            out.push_back("(iv) component plus separator contains an induced C5");
    }
}

void check_c4(const Graph& g, const SeparatorDecomposition& d, std::vector<std::string>& out) {
    const int n = g.vertex_count();

    bool s_connected = !d.S.empty() && induces_connected(g, d.S);
    if (!s_connected) {
        bool is_c5 = n == 5 && g.edge_count() == 5;
        for (Vertex v = 0; v < n && is_c5; ++v) is_c5 = g.degree(v) == 2;
        bool is_star = g.edge_count() == n - 1 && n >= 3;
        if (is_star) {
            bool hub = false;
            for (Vertex v = 0; v < n; ++v)
                if (g.degree(v) == n - 1) hub = true;
            is_star = hub;
        }
        if (!is_c5 && !is_star)
            out.push_back("(i) separator disconnected and graph is neither C5 nor a star");
    }

    bool s_clique = true;
    for (size_t i = 0; i < d.S.size() && s_clique; ++i)
        for (size_t j = i + 1; j < d.S.size(); ++j)
            if (!g.has_edge(d.S[i], d.S[j])) {
                s_clique = false;
                break;
            }

    if (!s_clique) {
        int trivial = 0;
        for (const VertexSet& comp : d.components)
            if (comp.size() == 1) ++trivial;
        if (trivial != 1)
            out.push_back("(iii) separator not a clique yet trivial component count is " +
                          std::to_string(trivial));
        for (const VertexSet& comp : d.components) {
            if (comp.size() < 2) continue;
            for (Vertex w : comp) {
                VertexSet sn;
                for (Vertex s : d.S)
                    if (g.has_edge(w, s)) sn.push_back(s);
                for (size_t i = 0; i < sn.size(); ++i)
                    for (size_t j = i + 1; j < sn.size(); ++j)
                        if (!g.has_edge(sn[i], sn[j])) {
                            out.push_back("(iii) component vertex " + std::to_string(w) +
                                          " is universal to the non-adjacent separator pair " +
                                          std::to_string(sn[i]) + "," + std::to_string(sn[j]));
                            goto done_iii;
                        }
            }
        }
    done_iii:
        for (const VertexSet& comp : d.components)
            if (comp.size() >= 2 &&
                (comp.size() != 2 || !g.has_edge(comp[0], comp[1]))) {
                out.push_back("(iv) non-trivial component {" + vertex_list(comp) +
                              "} is not a single edge");
                break;
            }
    }

    for (size_t i = 0; i < d.S.size(); ++i)
        for (size_t j = i + 1; j < d.S.size(); ++j)
            for (size_t k = j + 1; k < d.S.size(); ++k)
                if (!g.has_edge(d.S[i], d.S[j]) && !g.has_edge(d.S[i], d.S[k]) &&
                    !g.has_edge(d.S[j], d.S[k])) {
                    out.push_back("(v) separator contains the independent triple " +
                                  std::to_string(d.S[i]) + "," + std::to_string(d.S[j]) + "," +
                                  std::to_string(d.S[k]));
                    goto done_v;
                }
done_v:

    if (!d.S.empty() && has_induced_p4(induced_subgraph(g, d.S).graph))
        out.push_back("(vi) separator contains an induced P4");
}

} // namespace

std::vector<std::string> verify_structure_theorem(const Graph& g, const SeparatorDecomposition& d,
                                                  SubclassTag tag) {
    if (tag == SubclassTag::Not2K2Free || !in_subclass(g, tag))
        throw std::invalid_argument("verify_structure_theorem: graph is not in class " +
                                    subclass_name(tag));
    std::vector<std::string> out;
    switch (tag) {
        case SubclassTag::General2K2Free: check_base_theorem(g, d, out); break;
        case SubclassTag::C3C4Free: check_c3c4(g, d, out); break;
        case SubclassTag::C3C5Free: check_c3c5(g, d, out); break;
        case SubclassTag::C4C5Free: check_c4c5(g, d, out); break;
        case SubclassTag::C3Free: check_c3(g, d, out); break;
        case SubclassTag::C4Free: check_c4(g, d, out); break;
        default: break;
    }
    return out;
}

} // namespace chordality
