#pragma once

#include <random>
#include <utility>
#include <vector>

#include "chordality/graph.hpp"

namespace testutil {

using chordality::Graph;
using chordality::Vertex;
using chordality::VertexSet;
using Edges = std::vector<std::pair<Vertex, Vertex>>;

inline Graph make_cycle(int n) {
    Edges e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph make_path(int n) {
    Edges e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph make_star(int leaves) {
    Edges e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

inline Graph make_complete(int n) {
    Edges e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph make_complete_bipartite(int a, int b) {
    Edges e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

// two C6 sharing the edge 0-1: cycle 0,1,2,3,4,5 and cycle 0,1,6,7,8,9
inline Graph double_c6_shared_edge() {
    Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
            {1, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 0}};
    return Graph(10, e);
}

// two C5 sharing the edge 0-1: cycle 0,1,2,3,4 and cycle 0,1,5,6,7
inline Graph double_c5_shared_edge() {
    Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 5}, {5, 6}, {6, 7}, {7, 0}};
    return Graph(8, e);
}

// cycle of length n with one pendant vertex n attached at vertex 0
inline Graph cycle_with_pendant(int n) {
    Edges e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    e.emplace_back(0, n);
    return Graph(n + 1, e);
}

// C6 on 0..5 plus one pendant 6+i on each cycle vertex i
inline Graph c6_pendant_per_vertex() {
    Edges e;
    for (int i = 0; i < 6; ++i) e.emplace_back(i, (i + 1) % 6);
    for (int i = 0; i < 6; ++i) e.emplace_back(i, 6 + i);
    return Graph(12, e);
}

// CAGE(p, k/2+1): hubs 0 and 1, p parallel paths of k/2-1 internal vertices
inline Graph make_cage(int p, int k) {
    Edges e;
    int next = 2, inner = k / 2 - 1;
    for (int path = 0; path < p; ++path) {
        int prev = 0;
        for (int i = 0; i < inner; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, 1);
    }
    return Graph(next, e);
}

inline Graph random_graph(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Edges e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, e);
}

// random graph made connected by chaining components with extra edges
inline Graph random_connected_graph(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Edges e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    Graph g(n, e);
    auto comps = chordality::connected_components(g);
    for (size_t c = 1; c < comps.size(); ++c) e.emplace_back(comps[c - 1][0], comps[c][0]);
    return Graph(n, e);
}

inline Graph delete_vertex(const Graph& g, Vertex v) {
    VertexSet keep;
    for (int i = 0; i < g.vertex_count(); ++i)
        if (i != v) keep.push_back(i);
    return chordality::induced_subgraph(g, keep).graph;
}

// checks that `cycle` lists a chordless cycle of g in cyclic order
inline bool is_chordless_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
    size_t L = cycle.size();
    if (L < 3) return false;
    VertexSet uniq = chordality::sorted_unique(cycle);
    if (uniq.size() != L) return false;
    for (size_t i = 0; i < L; ++i)
        for (size_t j = i + 1; j < L; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == L - 1);
            if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

} // namespace testutil
