#include "chordality/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>

namespace chordality {

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(n, {});
    for (auto& e : edges) {
        if (e.first == e.second) throw std::invalid_argument("self-loop");
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= n) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex w = (&a == &adj_[u]) ? v : u;
    return std::binary_search(a.begin(), a.end(), w);
}

namespace {

// splits a line into whitespace tokens
std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

bool parse_int(const std::string& s, long& out) {
    if (s.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stol(s, &pos);
    } catch (...) {
        return false;
    }
    return pos == s.size();
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long n = 0, m = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::pair<Vertex, Vertex>> seen; // normalized, for duplicate detection
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header)
                throw ParseError(ParseErrorKind::MalformedHeader, lineno, "duplicate header");
            if (toks.size() != 3 || !parse_int(toks[1], n) || !parse_int(toks[2], m) || n < 0 || m < 0)
                throw ParseError(ParseErrorKind::MalformedHeader, lineno, "malformed header");
            have_header = true;
            continue;
        }
        if (toks[0] == "e") {
            if (!have_header)
                throw ParseError(ParseErrorKind::MalformedHeader, lineno, "edge before header");
            long u, v;
            if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v))
                throw ParseError(ParseErrorKind::MalformedLine, lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(ParseErrorKind::VertexOutOfRange, lineno, "vertex id out of range");
            if (u == v)
                throw ParseError(ParseErrorKind::SelfLoop, lineno, "self-loop");
            Vertex a = static_cast<Vertex>(u - 1), b = static_cast<Vertex>(v - 1);
            if (a > b) std::swap(a, b);
            seen.emplace_back(a, b);
            edges.emplace_back(a, b);
            continue;
        }
        throw ParseError(ParseErrorKind::MalformedLine, lineno, "unknown record '" + toks[0] + "'");
    }
    if (!have_header)
        throw ParseError(ParseErrorKind::MalformedHeader, lineno, "missing header");
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw ParseError(ParseErrorKind::DuplicateEdge, lineno, "duplicate edge");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError(ParseErrorKind::WrongEdgeCount, lineno,
                         "header promises " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph_string(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    return parse_graph(f);
}

std::string serialize_graph(const Graph& g) {
    std::string out = "p " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.push_back({});
        std::vector<Vertex> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (Vertex w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() > 0 && connected_components(g).size() == 1;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    VertexSet vs = sorted_unique(vertices);
    if (vs.size() != vertices.size())
        throw std::invalid_argument("induced_subgraph: duplicate vertices");
    std::vector<int> idx(g.vertex_count(), -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        idx[vs[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v : vs)
        for (Vertex w : g.neighbors(v))
            if (v < w && idx[w] != -1) edges.emplace_back(idx[v], idx[w]);
    InducedSubgraph out;
    out.graph = Graph(static_cast<int>(vs.size()), std::move(edges));
    out.mapping = vs;
    return out;
}

std::vector<std::vector<Vertex>> enumerate_induced_cycles(const Graph& g, int max_n) {
    if (g.vertex_count() > max_n)
        throw std::invalid_argument("enumerate_induced_cycles: graph exceeds guard of " +
                                    std::to_string(max_n) + " vertices");
    std::vector<std::vector<Vertex>> out;
    int n = g.vertex_count();
    std::vector<Vertex> path;
    std::vector<char> in_path(n, 0);
    // each chordless cycle is found once: rooted at its smallest vertex s,
    // built as an induced path over vertices > s, closed back to s, with the
    // reflection fixed by path[1] < last.
    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        in_path.assign(n, 0);
        in_path[s] = 1;
        // dfs over induced-path extensions
        std::vector<size_t> iter(1, 0);
        while (!iter.empty()) {
            Vertex tail = path.back();
            const auto& cand = g.neighbors(tail);
            if (iter.back() >= cand.size()) {
                iter.pop_back();
                in_path[tail] = 0;
                path.pop_back();
                continue;
            }
            Vertex w = cand[iter.back()++];
            if (w <= s || in_path[w]) continue;
            // w must not be adjacent to any path vertex except tail (keeps path induced);
            // adjacency to s is allowed only when closing.
            bool adj_s = g.has_edge(w, s);
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(w, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (adj_s && path.size() >= 2) {
                // close the cycle s, path[1..], w  (length >= 3 by construction... need >= 3 edges)
                if (path.size() + 1 >= 3 && path[1] < w) {
                    std::vector<Vertex> cyc(path.begin(), path.end());
                    cyc.push_back(w);
                    out.push_back(std::move(cyc));
                }
                // w may still extend longer cycles as long as it is not adjacent to s...
                // for an induced cycle, an interior vertex must not be adjacent to s.
                continue;
            }
            if (adj_s && path.size() == 1) {
                // first step along an edge of s: fine, w is allowed adjacent to s
                path.push_back(w);
                in_path[w] = 1;
                iter.push_back(0);
                continue;
            }
            path.push_back(w);
            in_path[w] = 1;
            iter.push_back(0);
        }
    }
    return out;
}

BipartiteResult is_bipartite(const Graph& g) {
    BipartiteResult res;
    int n = g.vertex_count();
    res.coloring.assign(n, -1);
    std::vector<Vertex> parent(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (res.coloring[s] != -1) continue;
        res.coloring[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (res.coloring[w] == -1) {
                    res.coloring[w] = static_cast<int8_t>(1 - res.coloring[v]);
                    parent[w] = v;
                    q.push(w);
                } else if (res.coloring[w] == res.coloring[v]) {
                    // odd closed walk: v -> root, w -> root, plus edge vw
                    std::vector<Vertex> pv{v}, pw{w};
                    while (parent[pv.back()] != -1) pv.push_back(parent[pv.back()]);
                    while (parent[pw.back()] != -1) pw.push_back(parent[pw.back()]);
                    std::reverse(pv.begin(), pv.end());
                    std::reverse(pw.begin(), pw.end());
                    size_t i = 0;
                    while (i + 1 < pv.size() && i + 1 < pw.size() && pv[i + 1] == pw[i + 1]) ++i;
                    std::vector<Vertex> walk(pv.begin() + i, pv.end());
                    for (size_t j = pw.size(); j-- > i;) walk.push_back(pw[j]);
                    walk.pop_back(); // drop repeated meeting vertex at the end
                    res.bipartite = false;
                    res.odd_cycle = std::move(walk);
                    res.coloring.clear();
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    return res;
}

bool is_acyclic(const Graph& g) {
    return g.edge_count() ==
           g.vertex_count() - static_cast<int>(connected_components(g).size());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet sorted_unique(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool induces_connected(const Graph& g, const VertexSet& vertices) {
    if (vertices.empty()) return false;
    VertexSet vs = sorted_unique(vertices);
    std::vector<char> in(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (Vertex v : vs) in[v] = 1;
    std::vector<Vertex> stack{vs[0]};
    seen[vs[0]] = 1;
    size_t cnt = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++cnt;
        for (Vertex w : g.neighbors(v))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return cnt == vs.size();
}

std::vector<Vertex> find_shortest_cycle(const Graph& g) {
    // bfs from every vertex; the shortest cycle through a vertex on a globally
    // shortest cycle splits into two bfs branches meeting only at that vertex,
    // so the minimum over roots is exact.  shortest cycles are chordless.
    int n = g.vertex_count();
    std::vector<Vertex> best;
    std::vector<int> dist(n), parent(n);
    std::vector<char> mark(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v))
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                }
        }
        for (auto [u, v] : g.edges()) {
            if (dist[u] == -1 || dist[v] == -1) continue;
            if (parent[u] == v || parent[v] == u) continue;
            size_t len = static_cast<size_t>(dist[u]) + dist[v] + 1;
            if (!best.empty() && len >= best.size()) continue;
            std::vector<Vertex> pu{u}, pv{v};
            while (pu.back() != s) pu.push_back(parent[pu.back()]);
            while (pv.back() != s) pv.push_back(parent[pv.back()]);
            std::fill(mark.begin(), mark.end(), 0);
            for (Vertex x : pu) mark[x] = 1;
            bool disjoint = true;
            for (size_t i = 0; i + 1 < pv.size(); ++i)
                if (mark[pv[i]]) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            std::reverse(pu.begin(), pu.end());            // s .. u
            pu.insert(pu.end(), pv.begin(), pv.end() - 1); // v .. (s excluded)
            best = pu;
        }
    }
    return best;
}

} // namespace chordality
