#include "chordality/instance_gen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace chordality {

namespace {

struct SckBuilder {
    int k;
    std::mt19937_64 rng;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<int> deg;
    std::vector<char> on_cycle;
    std::vector<std::vector<Vertex>> cycles; // registered C_k's, cyclic order
    std::vector<VcoUnit> construction;       // forward (build) order
    int n = 0;

    SckBuilder(int k_, uint64_t seed) : k(k_), rng(seed) {}

    Vertex add_vertex() {
        deg.push_back(0);
        on_cycle.push_back(0);
        return n++;
    }

    void add_edge(Vertex a, Vertex b) {
        edges.emplace_back(a, b);
        ++deg[a];
        ++deg[b];
    }

    Vertex random_vertex() {
        return std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    }

    std::vector<Vertex> new_chain(int len) {
        std::vector<Vertex> chain;
        for (int i = 0; i < len; ++i) chain.push_back(add_vertex());
        for (int i = 0; i + 1 < len; ++i) add_edge(chain[i], chain[i + 1]);
        return chain;
    }

    void register_cycle(const std::vector<Vertex>& order) {
        cycles.push_back(order);
        for (Vertex v : order) on_cycle[v] = 1;
    }

    void op_pendant() {
        Vertex u = random_vertex();
        Vertex v = add_vertex();
        add_edge(u, v);
        VcoUnit unit;
        unit.kind = UnitKind::PendantVertex;
        unit.vertices = {v};
        unit.removed = {v};
        unit.attachment = {u};
        construction.push_back(std::move(unit));
    }

    void op_pendant_cycle() {
        Vertex u = random_vertex();
        auto chain = new_chain(k - 1);
        add_edge(u, chain.front());
        add_edge(chain.back(), u);
        VcoUnit unit;
        unit.kind = on_cycle[u] ? UnitKind::OnePendantCycle : UnitKind::ZeroPendantCycle;
        unit.attachment = {u};
        unit.removed = chain; // fresh ids are increasing, hence sorted
        unit.cycle_order.push_back(u);
        unit.cycle_order.insert(unit.cycle_order.end(), chain.begin(), chain.end());
        unit.vertices = sorted_unique(unit.cycle_order);
        register_cycle(unit.cycle_order);
        construction.push_back(std::move(unit));
    }

    void op_two_pendant_cycle() {
        auto [u, v] = edges[std::uniform_int_distribution<size_t>(0, edges.size() - 1)(rng)];
        auto chain = new_chain(k - 2);
        add_edge(u, chain.front());
        add_edge(chain.back(), v);
        VcoUnit unit;
        unit.kind = UnitKind::TwoPendantCycle;
        Vertex a = std::min(u, v), b = std::max(u, v);
        unit.attachment = {a, b};
        unit.removed = chain;
        std::vector<Vertex> oriented = chain;
        if (u != a) std::reverse(oriented.begin(), oriented.end());
        unit.cycle_order.push_back(a);
        unit.cycle_order.insert(unit.cycle_order.end(), oriented.begin(), oriented.end());
        unit.cycle_order.push_back(b);
        unit.vertices = sorted_unique(unit.cycle_order);
        register_cycle(unit.cycle_order);
        construction.push_back(std::move(unit));
    }

    // add a parallel chain across an antipodal arc whose interior is plain
    // (degree 2); the far arc keeps the hubs at distance exactly k/2
    bool try_op_cage() {
        for (int attempt = 0; attempt < 8; ++attempt) {
            const auto& cyc = cycles[std::uniform_int_distribution<size_t>(0, cycles.size() - 1)(rng)];
            int i = std::uniform_int_distribution<int>(0, k - 1)(rng);
            bool plain = true;
            for (int j = 1; j < k / 2; ++j)
                if (deg[cyc[(i + j) % k]] != 2) { plain = false; break; }
            if (!plain) continue;
            Vertex w = cyc[i], z = cyc[(i + k / 2) % k];
            std::vector<Vertex> arc_int;
            for (int j = 1; j < k / 2; ++j) arc_int.push_back(cyc[(i + j) % k]);
            auto chain = new_chain(k / 2 - 1);
            add_edge(w, chain.front());
            add_edge(chain.back(), z);
            VcoUnit unit;
            unit.kind = UnitKind::HalfPlusOnePendantCycle;
            Vertex a = std::min(w, z), b = std::max(w, z);
            unit.attachment = {a, b};
            unit.removed = chain;
            if (w == a) {
                unit.cycle_order.push_back(w);
                unit.cycle_order.insert(unit.cycle_order.end(), chain.begin(), chain.end());
                unit.cycle_order.push_back(z);
                unit.cycle_order.insert(unit.cycle_order.end(), arc_int.rbegin(), arc_int.rend());
            } else {
                unit.cycle_order.push_back(z);
                unit.cycle_order.insert(unit.cycle_order.end(), chain.rbegin(), chain.rend());
                unit.cycle_order.push_back(w);
                unit.cycle_order.insert(unit.cycle_order.end(), arc_int.begin(), arc_int.end());
            }
            unit.vertices = sorted_unique(unit.cycle_order);
            register_cycle(unit.cycle_order);
            construction.push_back(std::move(unit));
            return true;
        }
        return false;
    }
};

} // namespace

GeneratedSck gen_sck(int k, int ops, uint64_t seed) {
    if (k < 5) throw std::invalid_argument("k must be at least 5");
    if (ops < 0) throw std::invalid_argument("ops must be non-negative");
    SckBuilder b(k, seed);

    VertexSet core;
    if (std::uniform_int_distribution<int>(0, 1)(b.rng) == 0) {
        core = {b.add_vertex()};
    } else {
        std::vector<Vertex> cyc;
        for (int i = 0; i < k; ++i) cyc.push_back(b.add_vertex());
        for (int i = 0; i < k; ++i) b.add_edge(cyc[i], cyc[(i + 1) % k]);
        b.register_cycle(cyc);
        core = cyc;
    }

    for (int op = 0; op < ops; ++op) {
        while (true) {
            int kind = std::uniform_int_distribution<int>(0, 3)(b.rng);
            if (kind == 0) { b.op_pendant(); break; }
            if (kind == 1) { b.op_pendant_cycle(); break; }
            if (kind == 2 && !b.edges.empty()) { b.op_two_pendant_cycle(); break; }
            if (kind == 3 && k % 2 == 0 && !b.cycles.empty() && b.try_op_cage()) break;
        }
    }

    GeneratedSck out{Graph(b.n, b.edges), Vco{}};
    out.trace.k = k;
    out.trace.core = std::move(core);
    out.trace.units.assign(b.construction.rbegin(), b.construction.rend());
    return out;
}

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

int subclass_min_order(SubclassTag tag) {
    switch (tag) {
        case SubclassTag::C3C4Free: return 1;
        case SubclassTag::C3C5Free: return 4;
        case SubclassTag::C4C5Free: return 3;
        case SubclassTag::C3Free: return 6;
        case SubclassTag::C4Free: return 6;
        case SubclassTag::General2K2Free: return 7;
        default:
            throw std::invalid_argument("gen_2k2_subclass: cannot generate this tag");
    }
}

VertexSet id_range(Vertex lo, int len) {
    VertexSet out;
    for (int i = 0; i < len; ++i) out.push_back(lo + i);
    return out;
}

void add_join(EdgeList& e, const VertexSet& a, const VertexSet& b) {
    for (Vertex x : a)
        for (Vertex y : b) e.emplace_back(x, y);
}

void add_clique(EdgeList& e, const VertexSet& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) e.emplace_back(a[i], a[j]);
}

void add_cycle(EdgeList& e, const VertexSet& a) {
    for (size_t i = 0; i < a.size(); ++i) e.emplace_back(a[i], a[(i + 1) % a.size()]);
}

int pick(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Splits n into parts.size() groups, each at least its listed minimum.
std::vector<int> split_counts(std::mt19937_64& rng, int n, std::vector<int> parts) {
    int spare = n;
    for (int p : parts) spare -= p;
    for (int i = 0; i < spare; ++i) ++parts[pick(rng, 0, static_cast<int>(parts.size()) - 1)];
    return parts;
}

// Tree of diameter <= 3 (two adjacent centers, leaves on either), or C5.
Graph build_c3c4(int n, std::mt19937_64& rng) {
    if (n == 1) return Graph(1, {});
    if (n == 5 && pick(rng, 0, 1) == 0) {
        EdgeList e;
        add_cycle(e, id_range(0, 5));
        return Graph(5, e);
    }
    EdgeList e{{0, 1}};
    for (Vertex v = 2; v < n; ++v) e.emplace_back(pick(rng, 0, 1), v);
    return Graph(n, e);
}

// Complete bipartite T x S, optionally extended by separator-universal
// vertices U whose private tails M attach along prefixes (so any two tail
// neighborhoods nest, which keeps the graph free of independent edge pairs).
Graph build_c3c5(int n, std::mt19937_64& rng) {
    std::vector<int> counts;
    if (n < 6 || pick(rng, 0, 3) == 0)
        counts = split_counts(rng, n, {2, 2}); // plain complete bipartite
    else
        counts = split_counts(rng, n, {2, 2, 1, 1});
    counts.resize(4, 0);
    const int t = counts[0], s = counts[1], u = counts[2], m = counts[3];
    VertexSet T = id_range(0, t), S = id_range(t, s), U = id_range(t + s, u),
              M = id_range(t + s + u, m);
    EdgeList e;
    add_join(e, T, S);
    add_join(e, U, S);
    for (int i = 0; i < u; ++i) {
        const int len = i == 0 ? m : pick(rng, 1, m);
        for (int j = 0; j < len; ++j) e.emplace_back(U[i], M[j]);
    }
    return Graph(n, e);
}

// Split graph: clique prefix plus independent vertices attached along clique
// prefixes of nondecreasing length (nested neighborhoods, ids to match).
Graph build_c4c5(int n, std::mt19937_64& rng) {
    const int q = n == 3 ? 3 : pick(rng, 3, n - 1);
    VertexSet K = id_range(0, q);
    EdgeList e;
    add_clique(e, K);
    std::vector<int> lens;
    for (int i = q; i < n; ++i) lens.push_back(pick(rng, 1, q));
    std::sort(lens.begin(), lens.end());
    for (size_t i = 0; i < lens.size(); ++i)
        for (int j = 0; j < lens[i]; ++j) e.emplace_back(q + static_cast<int>(i), j);
    return Graph(n, e);
}

// Five groups T, SX, SY, X, Y with T joined to SX u SY, SX to X, SY to Y,
// and X to Y; triangle-free with both C4 and C5 present once n >= 6.
Graph build_c3(int n, std::mt19937_64& rng) {
    std::vector<int> counts = split_counts(rng, n, {1, 1, 1, 1, 1});
    const int t = counts[0], sx = counts[1], sy = counts[2], x = counts[3];
    VertexSet T = id_range(0, t), SX = id_range(t, sx), SY = id_range(t + sx, sy),
              X = id_range(t + sx + sy, x), Y = id_range(t + sx + sy + x, counts[4]);
    EdgeList e;
    add_join(e, T, SX);
    add_join(e, T, SY);
    add_join(e, SX, X);
    add_join(e, SY, Y);
    add_join(e, X, Y);
    return Graph(n, e);
}

// Clique joined to a 5-cycle, plus pendants on clique vertices. Pendants
// need a clique of size >= 2: hanging one off a lone hub leaves the pendant
// in a trivial component that misses part of the separator.
Graph build_c4(int n, std::mt19937_64& rng) {
    const int q = n == 6 ? 1 : pick(rng, 2, n - 5);
    VertexSet K = id_range(0, q), rim = id_range(q, 5);
    EdgeList e;
    add_clique(e, K);
    add_cycle(e, rim);
    add_join(e, K, rim);
    for (Vertex v = q + 5; v < n; ++v) e.emplace_back(pick(rng, 0, q - 1), v);
    return Graph(n, e);
}

// 5-cycle joined to a clique plus an independent set (no edges between the
// two): the rim supplies C5, the clique C3, and both together C4.
Graph build_general(int n, std::mt19937_64& rng) {
    std::vector<int> counts = split_counts(rng, n - 5, {1, 1});
    VertexSet rim = id_range(0, 5), K = id_range(5, counts[0]),
              I = id_range(5 + counts[0], counts[1]);
    EdgeList e;
    add_cycle(e, rim);
    add_clique(e, K);
    add_join(e, K, rim);
    add_join(e, I, rim);
    return Graph(n, e);
}

Graph build_subclass(SubclassTag tag, int n, std::mt19937_64& rng) {
    switch (tag) {
        case SubclassTag::C3C4Free: return build_c3c4(n, rng);
        case SubclassTag::C3C5Free: return build_c3c5(n, rng);
        case SubclassTag::C4C5Free: return build_c4c5(n, rng);
        case SubclassTag::C3Free: return build_c3(n, rng);
        case SubclassTag::C4Free: return build_c4(n, rng);
        default: return build_general(n, rng);
    }
}

} // namespace

Graph gen_2k2_subclass(SubclassTag tag, int n_target, uint64_t seed) {
    const int n = std::max(n_target, subclass_min_order(tag));
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Graph g = build_subclass(tag, n, rng);
        if (!is_connected(g) || classify_subclass(g) != tag) continue;
        if (auto d = find_minimal_separator(g)) {
            if (!verify_structure_theorem(g, *d, tag).empty()) continue;
            if (tag != SubclassTag::General2K2Free &&
                !verify_structure_theorem(g, *d, SubclassTag::General2K2Free).empty())
                continue;
        }
        return g;
    }
    throw std::runtime_error("gen_2k2_subclass: retry cap exhausted for " + subclass_name(tag));
}

} // namespace chordality
