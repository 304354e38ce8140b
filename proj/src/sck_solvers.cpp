#include "chordality/sck_solvers.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chordality/oracle.hpp"

namespace chordality {

namespace {

// ---------------------------------------------------------------------------
// State keys: one 4-bit substate per bag position (bags stay tiny), plus a
// high "done" flag used by the connectivity-tracking problems.
// ---------------------------------------------------------------------------

using Key = uint64_t;
using Val = int64_t;

constexpr int kSubBits = 4;
constexpr Key kSubMask = (Key(1) << kSubBits) - 1;
constexpr Key kLowMask = (Key(1) << 48) - 1;
constexpr Key kDone = Key(1) << 60;
constexpr Val kInf = std::numeric_limits<Val>::max() / 4;

Key key_get(Key k, int pos) { return (k >> (kSubBits * pos)) & kSubMask; }

Key key_set(Key k, int pos, Key sub) {
    Key shift = Key(kSubBits) * pos;
    return (k & ~(kSubMask << shift)) | (sub << shift);
}

Key key_insert(Key k, int pos, Key sub) {
    Key flags = k & ~kLowMask, low = k & kLowMask;
    Key below = low & ((Key(1) << (kSubBits * pos)) - 1);
    Key above = low >> (kSubBits * pos);
    return flags | below | (sub << (kSubBits * pos)) | ((above << (kSubBits * (pos + 1))) & kLowMask);
}

Key key_remove(Key k, int pos, Key* sub) {
    Key flags = k & ~kLowMask, low = k & kLowMask;
    *sub = key_get(k, pos);
    Key below = low & ((Key(1) << (kSubBits * pos)) - 1);
    Key above = low >> (kSubBits * (pos + 1));
    return flags | below | (above << (kSubBits * pos));
}

// Relabels block ids (substates >= off) in first-appearance order.
Key canonical_blocks(Key k, int bag_size, Key off) {
    int map[16];
    std::fill(std::begin(map), std::end(map), -1);
    int next = 0;
    Key out = k & ~kLowMask;
    for (int pos = 0; pos < bag_size; ++pos) {
        Key s = key_get(k, pos);
        if (s >= off) {
            int b = static_cast<int>(s - off);
            if (map[b] < 0) map[b] = next++;
            s = off + map[b];
        }
        out |= s << (kSubBits * pos);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tree decomposition by min-degree elimination.  Accepted graphs reduce by
// degree-<=2 elimination (they are built from cycles glued along vertices,
// edges, and hub pairs), giving width-2 bags; fill edges keep the
// construction a valid decomposition for any elimination order, and the bag
// cap guards the state encoding.
// ---------------------------------------------------------------------------

constexpr size_t kMaxBag = 12;

struct Decomp {
    std::vector<VertexSet> bags;  // sorted
    std::vector<int> parent;      // -1 at the root
    std::vector<std::vector<std::pair<Vertex, Vertex>>> bag_edges;  // each edge once
    int root = -1;
};

void validate_decomp(const Graph& g, const Decomp& d) {
    int nb = static_cast<int>(d.bags.size());
    std::vector<int> tops(g.vertex_count(), 0);
    std::vector<std::pair<Vertex, Vertex>> covered;
    for (int b = 0; b < nb; ++b) {
        if (d.bags[b].size() > kMaxBag) throw std::logic_error("internal: decomposition bag too large");
        for (Vertex v : d.bags[b]) {
            int p = d.parent[b];
            if (p < 0 || !set_contains(d.bags[p], v)) ++tops[v];
        }
        for (auto [x, y] : d.bag_edges[b]) {
            if (!set_contains(d.bags[b], x) || !set_contains(d.bags[b], y))
                throw std::logic_error("internal: edge assigned outside its bag");
            covered.emplace_back(x, y);
        }
    }
    for (int c : tops)
        if (c != 1) throw std::logic_error("internal: vertex occurrences not a subtree");
    std::sort(covered.begin(), covered.end());
    if (covered != g.edges()) throw std::logic_error("internal: edge coverage mismatch");
}

Decomp build_decomp(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    std::priority_queue<std::pair<int, Vertex>, std::vector<std::pair<int, Vertex>>,
                        std::greater<>> pq;
    for (Vertex v = 0; v < n; ++v) pq.emplace(static_cast<int>(adj[v].size()), v);

    Decomp d;
    d.bags.reserve(n);
    d.parent.assign(n, -1);
    d.bag_edges.resize(n);
    std::vector<int> elim_time(n, -1);
    std::vector<char> gone(n, 0);
    std::vector<VertexSet> elim_nbrs(n);

    for (int step = 0; step < n; ++step) {
        Vertex v = -1;
        while (!pq.empty()) {
            auto [deg, u] = pq.top();
            pq.pop();
            if (!gone[u] && deg == static_cast<int>(adj[u].size())) {
                v = u;
                break;
            }
        }
        if (v < 0) throw std::logic_error("internal: elimination ran out of vertices");
        gone[v] = 1;
        elim_time[v] = step;
        VertexSet nbrs = adj[v];
        std::sort(nbrs.begin(), nbrs.end());
        if (nbrs.size() + 1 > kMaxBag) throw std::logic_error("internal: decomposition bag too large");
        elim_nbrs[v] = nbrs;
        for (Vertex w : nbrs) adj[w].erase(std::find(adj[w].begin(), adj[w].end(), v));
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                Vertex a = nbrs[i], b = nbrs[j];
                if (std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end()) {
                    adj[a].push_back(b);
                    adj[b].push_back(a);
                }
            }
        for (Vertex w : nbrs) pq.emplace(static_cast<int>(adj[w].size()), w);
    }

    // bag of v = {v} + neighbors at elimination; parent = the bag of the
    // earliest-eliminated such neighbor (all of them survive v)
    std::vector<int> bag_of(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        VertexSet bag = elim_nbrs[v];
        bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
        bag_of[v] = v;
        d.bags.push_back(std::move(bag));
    }
    int roots = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (elim_nbrs[v].empty()) {
            d.parent[v] = -1;
            d.root = v;
            ++roots;
            continue;
        }
        Vertex best = elim_nbrs[v][0];
        for (Vertex w : elim_nbrs[v])
            if (elim_time[w] < elim_time[best]) best = w;
        d.parent[v] = bag_of[best];
    }
    if (roots != 1) throw std::logic_error("internal: elimination produced multiple roots");
    for (auto [u, v] : g.edges()) {
        Vertex first = elim_time[u] < elim_time[v] ? u : v;
        d.bag_edges[bag_of[first]].emplace_back(std::min(u, v), std::max(u, v));
    }
    validate_decomp(g, d);
    return d;
}

// ---------------------------------------------------------------------------
// Nice decomposition: leaf / introduce-vertex / introduce-edge / forget / join
// nodes, children stored before parents, each graph edge introduced once.
// ---------------------------------------------------------------------------

struct NiceNode {
    enum Kind : uint8_t { Leaf, IntroV, IntroE, Forget, Join } kind;
    Vertex a = -1, b = -1;
    int child1 = -1, child2 = -1;
    VertexSet bag;  // after this node's operation
};

struct NiceTd {
    std::vector<NiceNode> nodes;
    int root = -1;
};

NiceTd make_nice(const Decomp& d) {
    NiceTd td;
    auto push = [&](NiceNode n) {
        td.nodes.push_back(std::move(n));
        return static_cast<int>(td.nodes.size()) - 1;
    };
    auto chain_to = [&](int from, const VertexSet& target) {
        int cur = from;
        VertexSet bag = td.nodes[cur].bag;
        for (Vertex v : set_difference(bag, target)) {
            VertexSet nb = set_difference(td.nodes[cur].bag, {v});
            cur = push({NiceNode::Forget, v, -1, cur, -1, std::move(nb)});
        }
        for (Vertex v : set_difference(target, td.nodes[cur].bag)) {
            VertexSet nb = set_union(td.nodes[cur].bag, {v});
            cur = push({NiceNode::IntroV, v, -1, cur, -1, std::move(nb)});
        }
        return cur;
    };

    int nb = static_cast<int>(d.bags.size());
    std::vector<std::vector<int>> kids(nb);
    for (int b = 0; b < nb; ++b)
        if (d.parent[b] >= 0) kids[d.parent[b]].push_back(b);

    // iterative post-order over decomposition bags
    std::vector<int> result(nb, -1);
    std::vector<std::pair<int, size_t>> stack{{d.root, 0}};
    while (!stack.empty()) {
        auto& [bag, idx] = stack.back();
        if (idx < kids[bag].size()) {
            int child = kids[bag][idx++];
            stack.emplace_back(child, 0);
            continue;
        }
        int cur;
        if (kids[bag].empty()) {
            cur = push({NiceNode::Leaf, -1, -1, -1, -1, {}});
            cur = chain_to(cur, d.bags[bag]);
        } else {
            cur = chain_to(result[kids[bag][0]], d.bags[bag]);
            for (size_t i = 1; i < kids[bag].size(); ++i) {
                int other = chain_to(result[kids[bag][i]], d.bags[bag]);
                cur = push({NiceNode::Join, -1, -1, cur, other, d.bags[bag]});
            }
        }
        for (auto [x, y] : d.bag_edges[bag])
            cur = push({NiceNode::IntroE, x, y, cur, -1, td.nodes[cur].bag});
        result[bag] = cur;
        stack.pop_back();
    }
    td.root = chain_to(result[d.root], {});
    return td;
}

// ---------------------------------------------------------------------------
// Shared DP machinery: tables are sorted (key -> min value) vectors; witness
// extraction replays each node's forward transition against the chosen entry.
// ---------------------------------------------------------------------------

struct Table {
    std::vector<std::pair<Key, Val>> e;
    void emit(Key k, Val v) { e.emplace_back(k, v); }
    void finalize() {
        std::sort(e.begin(), e.end());
        size_t w = 0;
        for (size_t i = 0; i < e.size();) {
            size_t j = i;
            Val best = kInf;
            for (; j < e.size() && e[j].first == e[i].first; ++j) best = std::min(best, e[j].second);
            e[w++] = {e[i].first, best};
            i = j;
        }
        e.resize(w);
    }
};

int pos_of(const VertexSet& bag, Vertex v) {
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    if (it == bag.end() || *it != v) throw std::logic_error("internal: vertex missing from bag");
    return static_cast<int>(it - bag.begin());
}

template <class Policy>
class DpEngine {
  public:
    DpEngine(const NiceTd& td, Policy& pol) : td_(td), pol_(pol) {}

    Val solve() {
        tables_.resize(td_.nodes.size());
        for (size_t i = 0; i < td_.nodes.size(); ++i) {
            const NiceNode& n = td_.nodes[i];
            Table& out = tables_[i];
            auto emit = [&](Key k, Val v) { out.emit(k, v); };
            switch (n.kind) {
                case NiceNode::Leaf:
                    out.emit(0, 0);
                    break;
                case NiceNode::IntroV: {
                    int pos = pos_of(n.bag, n.a);
                    for (auto [k, v] : tables_[n.child1].e) pol_.intro_v(n.a, pos, k, v, emit);
                    break;
                }
                case NiceNode::IntroE: {
                    int pu = pos_of(n.bag, n.a), pv = pos_of(n.bag, n.b);
                    for (auto [k, v] : tables_[n.child1].e)
                        pol_.intro_e(pu, pv, static_cast<int>(n.bag.size()), k, v, emit);
                    break;
                }
                case NiceNode::Forget: {
                    int pos = pos_of(td_.nodes[n.child1].bag, n.a);
                    int cbs = static_cast<int>(td_.nodes[n.child1].bag.size());
                    for (auto [k, v] : tables_[n.child1].e) pol_.forget(pos, cbs, k, v, emit);
                    break;
                }
                case NiceNode::Join:
                    join_tables(tables_[n.child1], tables_[n.child2], n.bag, out);
                    break;
            }
            out.finalize();
        }
        const Table& root = tables_[td_.root];
        best_key_ = 0;
        Val best = kInf;
        for (auto [k, v] : root.e)
            if (pol_.accept(k) && v < best) best = v, best_key_ = k;
        if (best >= kInf) throw std::runtime_error("no feasible solution");
        best_val_ = best;
        return best;
    }

    void extract() {
        std::vector<std::optional<std::pair<Key, Val>>> want(td_.nodes.size());
        want[td_.root] = {{best_key_, best_val_}};
        for (int i = static_cast<int>(td_.nodes.size()) - 1; i >= 0; --i) {
            if (!want[i]) continue;
            auto [tk, tv] = *want[i];
            const NiceNode& n = td_.nodes[i];
            bool found = false;
            auto match = [&](Key k, Val v) {
                if (!found && k == tk && v == tv) found = true;
            };
            switch (n.kind) {
                case NiceNode::Leaf:
                    found = (tk == 0 && tv == 0);
                    break;
                case NiceNode::IntroV: {
                    int pos = pos_of(n.bag, n.a);
                    pol_.record(n.a, key_get(tk, pos));
                    for (auto [k, v] : tables_[n.child1].e) {
                        pol_.intro_v(n.a, pos, k, v, match);
                        if (found) {
                            want[n.child1] = {{k, v}};
                            break;
                        }
                    }
                    break;
                }
                case NiceNode::IntroE: {
                    int pu = pos_of(n.bag, n.a), pv = pos_of(n.bag, n.b);
                    for (auto [k, v] : tables_[n.child1].e) {
                        pol_.intro_e(pu, pv, static_cast<int>(n.bag.size()), k, v, match);
                        if (found) {
                            want[n.child1] = {{k, v}};
                            break;
                        }
                    }
                    break;
                }
                case NiceNode::Forget: {
                    int pos = pos_of(td_.nodes[n.child1].bag, n.a);
                    int cbs = static_cast<int>(td_.nodes[n.child1].bag.size());
                    for (auto [k, v] : tables_[n.child1].e) {
                        pol_.forget(pos, cbs, k, v, match);
                        if (found) {
                            want[n.child1] = {{k, v}};
                            break;
                        }
                    }
                    break;
                }
                case NiceNode::Join: {
                    for (auto [k1, v1] : tables_[n.child1].e) {
                        for (auto [k2, v2] : tables_[n.child2].e) {
                            pol_.join(k1, v1, k2, v2, n.bag, match);
                            if (found) {
                                want[n.child1] = {{k1, v1}};
                                want[n.child2] = {{k2, v2}};
                                break;
                            }
                        }
                        if (found) break;
                    }
                    break;
                }
            }
            if (!found) throw std::logic_error("internal: witness extraction failed");
        }
    }

  private:
    void join_tables(const Table& t1, const Table& t2, const VertexSet& bag, Table& out) {
        std::unordered_map<uint32_t, std::vector<size_t>> by_mask;
        by_mask.reserve(t2.e.size());
        for (size_t i = 0; i < t2.e.size(); ++i)
            by_mask[pol_.join_mask(t2.e[i].first, static_cast<int>(bag.size()))].push_back(i);
        auto emit = [&](Key k, Val v) { out.emit(k, v); };
        for (auto [k1, v1] : t1.e) {
            auto it = by_mask.find(pol_.join_mask(k1, static_cast<int>(bag.size())));
            if (it == by_mask.end()) continue;
            for (size_t j : it->second) pol_.join(k1, v1, t2.e[j].first, t2.e[j].second, bag, emit);
        }
    }

    const NiceTd& td_;
    Policy& pol_;
    std::vector<Table> tables_;
    Key best_key_ = 0;
    Val best_val_ = 0;
};

// ---------------------------------------------------------------------------
// Problem policies.
// ---------------------------------------------------------------------------

// substates: 0 = out, 1 = in (cost -1: minimization encodes the maximum)
struct MisPolicy {
    std::vector<char> picked;
    explicit MisPolicy(int n) : picked(n, 0) {}

    template <class E> void intro_v(Vertex, int pos, Key k, Val v, E emit) {
        emit(key_insert(k, pos, 0), v);
        emit(key_insert(k, pos, 1), v - 1);
    }
    template <class E> void intro_e(int pu, int pv, int, Key k, Val v, E emit) {
        if (key_get(k, pu) == 1 && key_get(k, pv) == 1) return;
        emit(k, v);
    }
    template <class E> void forget(int pos, int, Key k, Val v, E emit) {
        Key s;
        emit(key_remove(k, pos, &s), v);
    }
    uint32_t join_mask(Key k, int) const { return static_cast<uint32_t>(k & 0xffffffffu); }
    template <class E> void join(Key k1, Val v1, Key k2, Val v2, const VertexSet& bag, E emit) {
        if (k1 != k2) return;
        Val local = 0;
        for (int pos = 0; pos < static_cast<int>(bag.size()); ++pos)
            if (key_get(k1, pos) == 1) local -= 1;
        emit(k1, v1 + v2 - local);
    }
    bool accept(Key) const { return true; }
    void record(Vertex v, Key s) {
        if (s == 1) picked[v] = 1;
    }
};

// substates: 0 = in, 1 = out & dominated, 2 = out & waiting
struct DsPolicy {
    std::vector<char> picked;
    explicit DsPolicy(int n) : picked(n, 0) {}

    template <class E> void intro_v(Vertex, int pos, Key k, Val v, E emit) {
        emit(key_insert(k, pos, 0), v + 1);
        emit(key_insert(k, pos, 2), v);
    }
    template <class E> void intro_e(int pu, int pv, int, Key k, Val v, E emit) {
        emit(k, v);
        Key su = key_get(k, pu), sv = key_get(k, pv);
        if (su == 0 && sv == 2) emit(key_set(k, pv, 1), v);
        if (sv == 0 && su == 2) emit(key_set(k, pu, 1), v);
    }
    template <class E> void forget(int pos, int, Key k, Val v, E emit) {
        Key s;
        Key nk = key_remove(k, pos, &s);
        if (s == 2) return;  // never dominated
        emit(nk, v);
    }
    uint32_t join_mask(Key k, int bag_size) const {
        uint32_t m = 0;
        for (int pos = 0; pos < bag_size; ++pos)
            if (key_get(k, pos) == 0) m |= 1u << pos;
        return m;
    }
    template <class E> void join(Key k1, Val v1, Key k2, Val v2, const VertexSet& bag, E emit) {
        Key k = 0;
        Val local = 0;
        for (int pos = 0; pos < static_cast<int>(bag.size()); ++pos) {
            Key s1 = key_get(k1, pos), s2 = key_get(k2, pos);
            if ((s1 == 0) != (s2 == 0)) return;
            Key s = (s1 == 0) ? 0 : ((s1 == 1 || s2 == 1) ? 1 : 2);
            if (s == 0) local += 1;
            k = key_set(k, pos, s);
        }
        emit(k, v1 + v2 - local);
    }
    bool accept(Key) const { return true; }
    void record(Vertex v, Key s) {
        if (s == 0) picked[v] = 1;
    }
};

// substates: 0 = removed, 1+b = kept in forest block b
struct FvsPolicy {
    std::vector<char> picked;  // removed vertices
    explicit FvsPolicy(int n) : picked(n, 0) {}

    template <class E> void intro_v(Vertex, int pos, Key k, Val v, E emit) {
        emit(key_insert(k, pos, 0), v + 1);
        int bs = 0;
        for (int p = 0; p < 12; ++p) bs = std::max<int>(bs, static_cast<int>(key_get(k, p)));
        emit(canonical_blocks(key_insert(k, pos, Key(bs) + 1), 12, 1), v);
    }
    template <class E> void intro_e(int pu, int pv, int bag_size, Key k, Val v, E emit) {
        Key su = key_get(k, pu), sv = key_get(k, pv);
        if (su == 0 || sv == 0) {
            emit(k, v);
            return;
        }
        if (su == sv) return;  // closes a cycle among kept vertices
        Key merged = k;
        for (int pos = 0; pos < bag_size; ++pos)
            if (key_get(merged, pos) == sv) merged = key_set(merged, pos, su);
        emit(canonical_blocks(merged, bag_size, 1), v);
    }
    template <class E> void forget(int pos, int cbs, Key k, Val v, E emit) {
        Key s;
        emit(canonical_blocks(key_remove(k, pos, &s), cbs - 1, 1), v);
    }
    uint32_t join_mask(Key k, int bag_size) const {
        uint32_t m = 0;
        for (int pos = 0; pos < bag_size; ++pos)
            if (key_get(k, pos) != 0) m |= 1u << pos;
        return m;
    }
    template <class E> void join(Key k1, Val v1, Key k2, Val v2, const VertexSet& bag, E emit) {
        int bs = static_cast<int>(bag.size());
        Val local = 0;
        int uf[32];
        for (int i = 0; i < 32; ++i) uf[i] = i;
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (int pos = 0; pos < bs; ++pos) {
            Key s1 = key_get(k1, pos), s2 = key_get(k2, pos);
            if ((s1 == 0) != (s2 == 0)) return;
            if (s1 == 0) {
                local += 1;
                continue;
            }
            int x = find(static_cast<int>(s1) - 1), y = find(16 + static_cast<int>(s2) - 1);
            if (x == y) return;  // gluing the forests closes a cycle
            uf[x] = y;
        }
        Key k = 0;
        int label[32];
        std::fill(std::begin(label), std::end(label), -1);
        int next = 0;
        for (int pos = 0; pos < bs; ++pos) {
            Key s1 = key_get(k1, pos);
            if (s1 == 0) continue;
            int r = find(static_cast<int>(s1) - 1);
            if (label[r] < 0) label[r] = next++;
            k = key_set(k, pos, Key(label[r]) + 1);
        }
        emit(k, v1 + v2 - local);
    }
    bool accept(Key) const { return true; }
    void record(Vertex v, Key s) {
        if (s == 0) picked[v] = 1;
    }
};

// substates: 0 = out, 1+b = in connectivity block b; kDone set once the single
// solution component has been completed (no in-vertices may follow).
struct SteinerPolicy {
    const std::vector<char>& terminal;
    std::vector<char> picked;
    explicit SteinerPolicy(const std::vector<char>& term)
        : terminal(term), picked(term.size(), 0) {}

    Val vertex_cost(Vertex v) const { return terminal[v] ? 0 : 1; }

    template <class E> void intro_v(Vertex v, int pos, Key k, Val val, E emit) {
        bool done = (k & kDone) != 0;
        if (!terminal[v]) emit(key_insert(k, pos, 0), val);
        if (done) return;  // a completed component can never be extended
        int bs = 0;
        for (int p = 0; p < 12; ++p) bs = std::max<int>(bs, static_cast<int>(key_get(k, p)));
        emit(canonical_blocks(key_insert(k, pos, Key(bs) + 1), 12, 1), val + vertex_cost(v));
    }
    template <class E> void intro_e(int pu, int pv, int bag_size, Key k, Val v, E emit) {
        Key su = key_get(k, pu), sv = key_get(k, pv);
        if (su == 0 || sv == 0 || su == sv) {
            emit(k, v);
            return;
        }
        Key merged = k;  // both chosen: the edge joins their blocks
        for (int pos = 0; pos < bag_size; ++pos)
            if (key_get(merged, pos) == sv) merged = key_set(merged, pos, su);
        emit(canonical_blocks(merged, bag_size, 1), v);
    }
    template <class E> void forget(int pos, int cbs, Key k, Val v, E emit) {
        Key s;
        Key nk = key_remove(k, pos, &s);
        if (s == 0) {
            emit(nk, v);
            return;
        }
        bool last_of_block = true, others = false;
        for (int p = 0; p < cbs; ++p) {
            if (p == pos) continue;
            Key sp = key_get(k, p);
            if (sp == 0) continue;
            others = true;
            if (sp == s) last_of_block = false;
        }
        if (!last_of_block) {
            emit(canonical_blocks(nk, cbs - 1, 1), v);
        } else if (!others) {
            emit(nk | kDone, v);  // the single component is complete
        }
        // dropping the last vertex of one of several blocks strands it
    }
    uint32_t join_mask(Key k, int bag_size) const {
        uint32_t m = 0;
        for (int pos = 0; pos < bag_size; ++pos)
            if (key_get(k, pos) != 0) m |= 1u << pos;
        return m;
    }
    template <class E> void join(Key k1, Val v1, Key k2, Val v2, const VertexSet& bag, E emit) {
        bool d1 = (k1 & kDone) != 0, d2 = (k2 & kDone) != 0;
        if (d1 && d2) return;
        int bs = static_cast<int>(bag.size());
        Val local = 0;
        int uf[32];
        for (int i = 0; i < 32; ++i) uf[i] = i;
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (int pos = 0; pos < bs; ++pos) {
            Key s1 = key_get(k1, pos), s2 = key_get(k2, pos);
            if ((s1 == 0) != (s2 == 0)) return;
            if (s1 == 0) continue;
            local += vertex_cost(bag[pos]);
            uf[find(static_cast<int>(s1) - 1)] = find(16 + static_cast<int>(s2) - 1);
        }
        Key k = 0;
        int label[32];
        std::fill(std::begin(label), std::end(label), -1);
        int next = 0;
        for (int pos = 0; pos < bs; ++pos) {
            Key s1 = key_get(k1, pos);
            if (s1 == 0) continue;
            int r = find(static_cast<int>(s1) - 1);
            if (label[r] < 0) label[r] = next++;
            k = key_set(k, pos, Key(label[r]) + 1);
        }
        if (d1 || d2) k |= kDone;
        emit(k, v1 + v2 - local);
    }
    bool accept(Key k) const { return (k & kDone) != 0; }
    void record(Vertex v, Key s) {
        if (s >= 1) picked[v] = 1;
    }
};

// substates: 0 = out & waiting, 1 = out & dominated, 2+b = in block b
struct CdsPolicy {
    std::vector<char> picked;
    explicit CdsPolicy(int n) : picked(n, 0) {}

    template <class E> void intro_v(Vertex, int pos, Key k, Val v, E emit) {
        if (k & kDone) return;  // nothing may dominate or join a later vertex
        emit(key_insert(k, pos, 0), v);
        int bs = 0;
        for (int p = 0; p < 12; ++p) bs = std::max<int>(bs, std::max(0, static_cast<int>(key_get(k, p)) - 1));
        emit(canonical_blocks(key_insert(k, pos, Key(bs) + 2), 12, 2), v + 1);
    }
    template <class E> void intro_e(int pu, int pv, int bag_size, Key k, Val v, E emit) {
        Key su = key_get(k, pu), sv = key_get(k, pv);
        if (su >= 2 && sv >= 2 && su != sv) {
            Key merged = k;
            for (int pos = 0; pos < bag_size; ++pos)
                if (key_get(merged, pos) == sv) merged = key_set(merged, pos, su);
            emit(canonical_blocks(merged, bag_size, 2), v);
            return;
        }
        emit(k, v);
        if (su >= 2 && sv == 0) emit(key_set(k, pv, 1), v);
        if (sv >= 2 && su == 0) emit(key_set(k, pu, 1), v);
    }
    template <class E> void forget(int pos, int cbs, Key k, Val v, E emit) {
        Key s;
        Key nk = key_remove(k, pos, &s);
        if (s == 0) return;  // never dominated
        if (s == 1) {
            emit(nk, v);
            return;
        }
        bool last_of_block = true, others = false;
        for (int p = 0; p < cbs; ++p) {
            if (p == pos) continue;
            Key sp = key_get(k, p);
            if (sp < 2) continue;
            others = true;
            if (sp == s) last_of_block = false;
        }
        if (!last_of_block) emit(canonical_blocks(nk, cbs - 1, 2), v);
        else if (!others) emit(nk | kDone, v);
    }
    uint32_t join_mask(Key k, int bag_size) const {
        uint32_t m = 0;
        for (int pos = 0; pos < bag_size; ++pos)
            if (key_get(k, pos) >= 2) m |= 1u << pos;
        return m;
    }
    template <class E> void join(Key k1, Val v1, Key k2, Val v2, const VertexSet& bag, E emit) {
        bool d1 = (k1 & kDone) != 0, d2 = (k2 & kDone) != 0;
        if (d1 && d2) return;
        int bs = static_cast<int>(bag.size());
        Val local = 0;
        int uf[32];
        for (int i = 0; i < 32; ++i) uf[i] = i;
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        Key k = 0;
        for (int pos = 0; pos < bs; ++pos) {
            Key s1 = key_get(k1, pos), s2 = key_get(k2, pos);
            if ((s1 >= 2) != (s2 >= 2)) return;
            if (s1 >= 2) {
                local += 1;
                uf[find(static_cast<int>(s1) - 2)] = find(16 + static_cast<int>(s2) - 2);
            } else {
                k = key_set(k, pos, (s1 == 1 || s2 == 1) ? 1 : 0);
            }
        }
        int label[32];
        std::fill(std::begin(label), std::end(label), -1);
        int next = 0;
        for (int pos = 0; pos < bs; ++pos) {
            Key s1 = key_get(k1, pos);
            if (s1 < 2) continue;
            int r = find(static_cast<int>(s1) - 2);
            if (label[r] < 0) label[r] = next++;
            k = key_set(k, pos, Key(label[r]) + 2);
        }
        if (d1 || d2) k |= kDone;
        emit(k, v1 + v2 - local);
    }
    bool accept(Key k) const { return (k & kDone) != 0; }
    void record(Vertex v, Key s) {
        if (s >= 2) picked[v] = 1;
    }
};

// ---------------------------------------------------------------------------
// Plumbing.
// ---------------------------------------------------------------------------

void require_valid(const Graph& g, const Vco& vco) {
    if (!validate_vco(g, vco)) throw std::invalid_argument("ordering does not validate against the graph");
}

VertexSet picked_set(const std::vector<char>& picked) {
    VertexSet out;
    for (size_t v = 0; v < picked.size(); ++v)
        if (picked[v]) out.push_back(static_cast<Vertex>(v));
    return out;
}

template <class Policy>
VertexSet run_policy(const Graph& g, const Vco&, Policy& pol, Val* value) {
    Decomp d = build_decomp(g);
    NiceTd td = make_nice(d);
    DpEngine<Policy> eng(td, pol);
    *value = eng.solve();
    eng.extract();
    return picked_set(pol.picked);
}

void check_feasible(bool ok) {
    if (!ok) throw std::logic_error("internal: solver produced an infeasible witness");
}

Solution transversal(const Graph& g, const Vco& vco, ProblemKind p) {
    FvsPolicy pol(g.vertex_count());
    Val value = 0;
    VertexSet s = run_policy(g, vco, pol, &value);
    VertexSet kept;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!set_contains(s, v)) kept.push_back(v);
    check_feasible(kept.empty() || is_acyclic(induced_subgraph(g, kept).graph));
    check_feasible(static_cast<Val>(s.size()) == value);
    return {p, std::move(s), static_cast<int>(value)};
}

} // namespace

Solution solve_mis(const Graph& g, const Vco& vco) {
    require_valid(g, vco);
    MisPolicy pol(g.vertex_count());
    Val value = 0;
    VertexSet s = run_policy(g, vco, pol, &value);
    check_feasible(oracle::is_independent_set(g, s));
    check_feasible(static_cast<Val>(s.size()) == -value);
    return {ProblemKind::MIS, std::move(s), static_cast<int>(-value)};
}

Solution solve_vertex_cover(const Graph& g, const Vco& vco) {
    Solution mis = solve_mis(g, vco);
    VertexSet cover;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!set_contains(mis.vertices, v)) cover.push_back(v);
    check_feasible(oracle::is_vertex_cover(g, cover));
    return {ProblemKind::VertexCover, std::move(cover), g.vertex_count() - mis.value};
}

Solution solve_dominating_set(const Graph& g, const Vco& vco) {
    require_valid(g, vco);
    DsPolicy pol(g.vertex_count());
    Val value = 0;
    VertexSet s = run_policy(g, vco, pol, &value);
    check_feasible(oracle::is_dominating_set(g, s));
    check_feasible(static_cast<Val>(s.size()) == value);
    return {ProblemKind::DominatingSet, std::move(s), static_cast<int>(value)};
}

Solution solve_oct(const Graph& g, const Vco& vco) {
    require_valid(g, vco);
    if (vco.k % 2 == 0) return {ProblemKind::OCT, {}, 0};
    return transversal(g, vco, ProblemKind::OCT);
}

Solution solve_ect(const Graph& g, const Vco& vco) {
    require_valid(g, vco);
    if (vco.k % 2 == 1) return {ProblemKind::ECT, {}, 0};
    return transversal(g, vco, ProblemKind::ECT);
}

Solution solve_fvs(const Graph& g, const Vco& vco) {
    require_valid(g, vco);
    // every induced cycle has length k, so hitting them all is exactly fvs
    // whichever parity k has
    return transversal(g, vco, ProblemKind::FVS);
}

Solution solve_steiner(const Graph& g, const Vco& vco, const VertexSet& terminals) {
    require_valid(g, vco);
    VertexSet terms = sorted_unique(terminals);
    if (terms.empty()) throw std::invalid_argument("terminal set must be non-empty");
    for (Vertex t : terms)
        if (t < 0 || t >= g.vertex_count())
            throw std::invalid_argument("terminal outside the graph");
    std::vector<char> is_term(g.vertex_count(), 0);
    for (Vertex t : terms) is_term[t] = 1;
    SteinerPolicy pol(is_term);
    Val value = 0;
    VertexSet s = run_policy(g, vco, pol, &value);
    check_feasible(oracle::is_steiner_set(g, s, terms));
    check_feasible(static_cast<Val>(s.size() - terms.size()) == value);
    return {ProblemKind::SteinerTree, std::move(s), static_cast<int>(value)};
}

Solution solve_connected_dominating_set(const Graph& g, const Vco& vco) {
    require_valid(g, vco);
    CdsPolicy pol(g.vertex_count());
    Val value = 0;
    VertexSet s = run_policy(g, vco, pol, &value);
    check_feasible(oracle::is_connected_dominating_set(g, s));
    check_feasible(static_cast<Val>(s.size()) == value);
    return {ProblemKind::ConnectedDominatingSet, std::move(s), static_cast<int>(value)};
}

Solution solve_sck(const Graph& g, int k, ProblemKind p, const VertexSet& terminals) {
    std::vector<VertexSet> comps = connected_components(g);
    if (p == ProblemKind::ConnectedDominatingSet && comps.size() > 1)
        throw std::runtime_error("connected dominating set needs a connected graph");

    VertexSet terms;
    int term_comp = -1;
    if (p == ProblemKind::SteinerTree) {
        terms = sorted_unique(terminals);
        if (terms.empty()) throw std::invalid_argument("terminal set must be non-empty");
        for (Vertex t : terms)
            if (t < 0 || t >= g.vertex_count())
                throw std::invalid_argument("terminal outside the graph");
        for (size_t c = 0; c < comps.size(); ++c)
            if (set_contains(comps[c], terms[0])) term_comp = static_cast<int>(c);
        for (Vertex t : terms)
            if (!set_contains(comps[term_comp], t))
                throw std::runtime_error("terminals span multiple components");
    }

    Solution total{p, {}, 0};
    for (size_t c = 0; c < comps.size(); ++c) {
        if (p == ProblemKind::SteinerTree && static_cast<int>(c) != term_comp) continue;
        InducedSubgraph sub = induced_subgraph(g, comps[c]);
        RecognitionResult rec = compute_vco(sub.graph, k);
        if (!rec.accepted)
            throw std::runtime_error("component rejected: graph is not strictly chordality-" +
                                     std::to_string(k));
        Solution part{p, {}, 0};
        switch (p) {
            case ProblemKind::MIS: part = solve_mis(sub.graph, rec.vco); break;
            case ProblemKind::VertexCover: part = solve_vertex_cover(sub.graph, rec.vco); break;
            case ProblemKind::DominatingSet: part = solve_dominating_set(sub.graph, rec.vco); break;
            case ProblemKind::OCT: part = solve_oct(sub.graph, rec.vco); break;
            case ProblemKind::ECT: part = solve_ect(sub.graph, rec.vco); break;
            case ProblemKind::FVS: part = solve_fvs(sub.graph, rec.vco); break;
            case ProblemKind::ConnectedDominatingSet:
                part = solve_connected_dominating_set(sub.graph, rec.vco);
                break;
            case ProblemKind::SteinerTree: {
                VertexSet local;
                for (Vertex t : terms) local.push_back(pos_of(comps[c], t));
                part = solve_steiner(sub.graph, rec.vco, local);
                break;
            }
        }
        for (Vertex v : part.vertices) total.vertices.push_back(sub.mapping[v]);
        total.value += part.value;
    }
    total.vertices = sorted_unique(total.vertices);
    return total;
}

} // namespace chordality
