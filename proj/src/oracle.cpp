#include "chordality/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

namespace chordality::oracle {

namespace {

VertexSet complement_set(const Graph& g, const VertexSet& s) {
    VertexSet all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    return set_difference(all, s);
}

// enumerates subsets of {0..n-1} of the given cardinality in lexicographic
// order, calling cb(subset) until it returns true; returns the accepted subset
// or nullopt semantics via empty + found flag.
template <typename Cb>
bool scan_cardinality(int n, int c, const Cb& cb, VertexSet& out) {
    if (c > n) return false;
    VertexSet idx(c);
    for (int i = 0; i < c; ++i) idx[i] = i;
    while (true) {
        if (cb(idx)) {
            out = idx;
            return true;
        }
        // next combination
        int i = c - 1;
        while (i >= 0 && idx[i] == n - c + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void check_guard(ProblemKind p, const Graph& g) {
    int cap = (p == ProblemKind::ECT) ? kMaxVerticesEct : kMaxVertices;
    if (g.vertex_count() > cap)
        throw std::invalid_argument("oracle guard exceeded: " + problem_name(p) + " needs n <= " +
                                    std::to_string(cap) + ", got " +
                                    std::to_string(g.vertex_count()));
}

std::vector<uint32_t> open_masks(const Graph& g) {
    std::vector<uint32_t> m(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        m[u] |= 1u << v;
        m[v] |= 1u << u;
    }
    return m;
}

uint32_t to_mask(const VertexSet& s) {
    uint32_t m = 0;
    for (Vertex v : s) m |= 1u << v;
    return m;
}

} // namespace

bool is_independent_set(const Graph& g, const VertexSet& s) {
    if (s.size() < 64) {
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (g.has_edge(s[i], s[j])) return false;
        return true;
    }
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) in[v] = 1;
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v))
            if (in[w]) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    for (auto [u, v] : g.edges())
        if (!set_contains(s, u) && !set_contains(s, v)) return false;
    return true;
}

bool is_dominating_set(const Graph& g, const VertexSet& s) {
    std::vector<char> dom(g.vertex_count(), 0);
    for (Vertex v : s) {
        dom[v] = 1;
        for (Vertex w : g.neighbors(v)) dom[w] = 1;
    }
    return std::find(dom.begin(), dom.end(), 0) == dom.end();
}

bool is_oct(const Graph& g, const VertexSet& s) {
    return is_bipartite(induced_subgraph(g, complement_set(g, s)).graph).bipartite;
}

bool is_ect(const Graph& g, const VertexSet& s) {
    Graph rest = induced_subgraph(g, complement_set(g, s)).graph;
    for (const auto& cyc : enumerate_induced_cycles(rest))
        if (cyc.size() % 2 == 0) return false;
    return true;
}

bool is_fvs(const Graph& g, const VertexSet& s) {
    return is_acyclic(induced_subgraph(g, complement_set(g, s)).graph);
}

bool is_steiner_set(const Graph& g, const VertexSet& s, const VertexSet& terminals) {
    if (terminals.empty()) throw std::invalid_argument("steiner: empty terminal set");
    if (!set_difference(terminals, s).empty()) return false;
    return induces_connected(g, s);
}

bool is_connected_dominating_set(const Graph& g, const VertexSet& s) {
    return is_dominating_set(g, s) && induces_connected(g, s);
}

bool feasible(ProblemKind p, const Graph& g, const VertexSet& candidate,
              const VertexSet& terminals) {
    switch (p) {
        case ProblemKind::MIS: return is_independent_set(g, candidate);
        case ProblemKind::VertexCover: return is_vertex_cover(g, candidate);
        case ProblemKind::DominatingSet: return is_dominating_set(g, candidate);
        case ProblemKind::OCT: return is_oct(g, candidate);
        case ProblemKind::ECT: return is_ect(g, candidate);
        case ProblemKind::FVS: return is_fvs(g, candidate);
        case ProblemKind::SteinerTree: return is_steiner_set(g, candidate, terminals);
        case ProblemKind::ConnectedDominatingSet: return is_connected_dominating_set(g, candidate);
    }
    throw std::logic_error("unknown problem kind");
}

namespace {

Solution solve_mis_oracle(const Graph& g) {
    int n = g.vertex_count();
    auto adj = open_masks(g);
    VertexSet best;
    for (int c = n; c >= 0; --c) {
        auto ok = [&](const VertexSet& s) {
            uint32_t m = to_mask(s);
            for (Vertex v : s)
                if (adj[v] & m) return false;
            return true;
        };
        if (scan_cardinality(n, c, ok, best)) break;
    }
    return {ProblemKind::MIS, best, static_cast<int>(best.size())};
}

Solution solve_by_min_scan(ProblemKind p, const Graph& g, const VertexSet& terminals) {
    int n = g.vertex_count();
    VertexSet best;
    for (int c = 0; c <= n; ++c) {
        auto ok = [&](const VertexSet& s) { return feasible(p, g, s, terminals); };
        if (scan_cardinality(n, c, ok, best))
            return {p, best, static_cast<int>(best.size())};
    }
    throw std::runtime_error("no feasible solution: " + problem_name(p));
}

Solution solve_ds_oracle(const Graph& g) {
    int n = g.vertex_count();
    auto adj = open_masks(g);
    std::vector<uint32_t> closed(n);
    for (int v = 0; v < n; ++v) closed[v] = adj[v] | (1u << v);
    uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    VertexSet best;
    for (int c = 0; c <= n; ++c) {
        auto ok = [&](const VertexSet& s) {
            uint32_t dom = 0;
            for (Vertex v : s) dom |= closed[v];
            return dom == all;
        };
        if (scan_cardinality(n, c, ok, best)) break;
    }
    return {ProblemKind::DominatingSet, best, static_cast<int>(best.size())};
}

// Node-weighted Dreyfus-Wagner: w(v) = 0 for terminals, 1 otherwise; the cost
// of a connected vertex set is its total weight = its Steiner-vertex count.
Solution solve_steiner_dw(const Graph& g, const VertexSet& terminals) {
    if (terminals.empty()) throw std::invalid_argument("steiner: empty terminal set");
    for (Vertex t : terminals)
        if (t < 0 || t >= g.vertex_count())
            throw std::invalid_argument("steiner: terminal out of range");
    int n = g.vertex_count();
    VertexSet R = sorted_unique(terminals);
    if (R.size() == 1) return {ProblemKind::SteinerTree, R, 0};
    std::vector<int> w(n, 1);
    for (Vertex t : R) w[t] = 0;

    Vertex t0 = R[0];
    std::vector<Vertex> rest(R.begin() + 1, R.end());
    int r = static_cast<int>(rest.size());
    int full = (1 << r) - 1;
    const int INF = std::numeric_limits<int>::max() / 4;

    struct Choice {
        enum Tag { None, Base, Grow, Merge } tag = None;
        int arg = -1; // Grow: neighbor vertex; Merge: submask A
    };
    std::vector<std::vector<int>> dp(full + 1, std::vector<int>(n, INF));
    std::vector<std::vector<Choice>> ch(full + 1, std::vector<Choice>(n));

    auto dijkstra = [&](int S) {
        using Item = std::pair<int, Vertex>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> q;
        for (int v = 0; v < n; ++v)
            if (dp[S][v] < INF) q.emplace(dp[S][v], v);
        while (!q.empty()) {
            auto [d, v] = q.top();
            q.pop();
            if (d > dp[S][v]) continue;
            for (Vertex u : g.neighbors(v)) {
                int nd = d + w[u];
                if (nd < dp[S][u]) {
                    dp[S][u] = nd;
                    ch[S][u] = {Choice::Grow, v};
                    q.emplace(nd, u);
                }
            }
        }
    };

    for (int i = 0; i < r; ++i) {
        int S = 1 << i;
        dp[S][rest[i]] = 0; // w(rest[i]) = 0, terminals are free
        ch[S][rest[i]] = {Choice::Base, -1};
        dijkstra(S);
    }
    for (int S = 1; S <= full; ++S) {
        if ((S & (S - 1)) == 0) continue; // singletons done
        for (int v = 0; v < n; ++v)
            for (int A = (S - 1) & S; A > (S ^ A); A = (A - 1) & S) {
                int B = S ^ A;
                if (dp[A][v] >= INF || dp[B][v] >= INF) continue;
                int cand = dp[A][v] + dp[B][v] - w[v];
                if (cand < dp[S][v]) {
                    dp[S][v] = cand;
                    ch[S][v] = {Choice::Merge, A};
                }
            }
        dijkstra(S);
    }
    if (dp[full][t0] >= INF)
        throw std::runtime_error("no Steiner tree: terminals are disconnected");

    std::vector<char> used(n, 0);
    // iterative reconstruction over (S, v) states
    std::vector<std::pair<int, Vertex>> stack{{full, t0}};
    while (!stack.empty()) {
        auto [S, v] = stack.back();
        stack.pop_back();
        used[v] = 1;
        const Choice& c = ch[S][v];
        switch (c.tag) {
            case Choice::Base: break;
            case Choice::Grow: stack.emplace_back(S, c.arg); break;
            case Choice::Merge:
                stack.emplace_back(c.arg, v);
                stack.emplace_back(S ^ c.arg, v);
                break;
            case Choice::None: throw std::logic_error("steiner: broken backtrack state");
        }
    }
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (used[v]) out.push_back(v);
    out = set_union(out, R);
    if (!is_steiner_set(g, out, R))
        throw std::logic_error("steiner oracle produced an infeasible set");
    int value = static_cast<int>(set_difference(out, R).size());
    if (value != dp[full][t0])
        throw std::logic_error("steiner oracle value/set mismatch");
    return {ProblemKind::SteinerTree, out, value};
}

} // namespace

Solution steiner_by_subset_scan(const Graph& g, const VertexSet& terminals) {
    if (terminals.empty()) throw std::invalid_argument("steiner: empty terminal set");
    VertexSet R = sorted_unique(terminals);
    VertexSet others = set_difference(complement_set(g, {}), R);
    int pool = static_cast<int>(others.size());
    for (int c = 0; c <= pool; ++c) {
        VertexSet picked;
        auto ok = [&](const VertexSet& idx) {
            VertexSet s = R;
            for (Vertex i : idx) s.push_back(others[i]);
            std::sort(s.begin(), s.end());
            return induces_connected(g, s);
        };
        if (scan_cardinality(pool, c, ok, picked)) {
            VertexSet s = R;
            for (Vertex i : picked) s.push_back(others[i]);
            std::sort(s.begin(), s.end());
            return {ProblemKind::SteinerTree, s, c};
        }
    }
    throw std::runtime_error("no Steiner tree: terminals are disconnected");
}

Solution solve(ProblemKind p, const Graph& g, const VertexSet& terminals) {
    check_guard(p, g);
    switch (p) {
        case ProblemKind::MIS: return solve_mis_oracle(g);
        case ProblemKind::VertexCover: {
            Solution mis = solve_mis_oracle(g);
            VertexSet cover = set_difference(complement_set(g, {}), mis.vertices);
            return {ProblemKind::VertexCover, cover, static_cast<int>(cover.size())};
        }
        case ProblemKind::DominatingSet: return solve_ds_oracle(g);
        case ProblemKind::OCT:
        case ProblemKind::ECT:
        case ProblemKind::FVS:
        case ProblemKind::ConnectedDominatingSet: return solve_by_min_scan(p, g, {});
        case ProblemKind::SteinerTree: return solve_steiner_dw(g, terminals);
    }
    throw std::logic_error("unknown problem kind");
}

} // namespace chordality::oracle
