#include "chordality/vco.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

namespace chordality {

std::string unit_kind_name(UnitKind k) {
    switch (k) {
    case UnitKind::PendantVertex: return "pendant";
    case UnitKind::ZeroPendantCycle: return "zero_pendant_cycle";
    case UnitKind::OnePendantCycle: return "one_pendant_cycle";
    case UnitKind::TwoPendantCycle: return "two_pendant_cycle";
    case UnitKind::HalfPlusOnePendantCycle: return "half_plus_one_pendant_cycle";
    }
    throw std::logic_error("unknown unit kind");
}

namespace {

// ---- working-state peeler -------------------------------------------------

struct RunClass {
    enum Action { Reject, PeelSingleHub, PeelTwoPendant, PeelHalfPlusOne, Dormant };
    Action action = Dormant;
    std::vector<Vertex> run;     // the maximal degree-2 chain, in path order
    Vertex left = -1, right = -1; // boundary vertices (degree != 2)
    std::vector<Vertex> host;    // PeelHalfPlusOne: shortest left-right path avoiding run
    std::vector<Vertex> cycle;   // Reject: chordless cycle of length != k
};

class Peeler {
public:
    Peeler(const Graph& g, int k, uint64_t tie_seed)
        : g_(g), k_(k), seed_(tie_seed), rng_(tie_seed),
          alive_(g.vertex_count(), 1), deg_(g.vertex_count(), 0) {
        alive_count_ = g_.vertex_count();
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            deg_[v] = g_.degree(v);
            if (deg_[v] == 1) pend_.insert(v);
            if (deg_[v] == 2) {
                dirty_.insert(v);
                ++deg2_count_;
            }
        }
    }

    RecognitionResult run() {
        return seed_ == 0 ? run_deterministic() : run_seeded();
    }

private:
    const Graph& g_;
    int k_;
    uint64_t seed_;
    std::mt19937_64 rng_;
    std::vector<char> alive_;
    std::vector<int> deg_;
    int alive_count_ = 0;
    int deg2_count_ = 0;
    std::set<Vertex> pend_, dirty_;
    std::vector<VcoUnit> units_;
    mutable std::vector<int> bp_seen_, bp_block_, bp_dist_;
    mutable std::vector<Vertex> bp_parent_;
    mutable int bp_stamp_ = 0;

    void remove_vertex(Vertex v) {
        if (deg_[v] == 2) --deg2_count_;
        alive_[v] = 0;
        --alive_count_;
        pend_.erase(v);
        dirty_.erase(v);
        for (Vertex x : g_.neighbors(v)) {
            if (!alive_[x]) continue;
            if (deg_[x] == 2) --deg2_count_;
            --deg_[x];
            switch (deg_[x]) {
            case 2: ++deg2_count_; dirty_.insert(x); break;
            case 1: dirty_.erase(x); pend_.insert(x); break;
            case 0: pend_.erase(x); break;
            default: break;
            }
        }
    }

    Vertex only_alive_neighbor(Vertex v) const {
        for (Vertex x : g_.neighbors(v))
            if (alive_[x]) return x;
        throw std::logic_error("pendant without alive neighbor");
    }

    Vertex next_on_chain(Vertex prev, Vertex cur) const {
        for (Vertex x : g_.neighbors(cur))
            if (alive_[x] && x != prev) return x;
        throw std::logic_error("chain walk fell off");
    }

    // maximal degree-2 run through s; boundaries have degree != 2.  Never
    // called when the whole residual is 2-regular (the stop check runs first).
    void walk_run(Vertex s, RunClass& out) const {
        std::vector<Vertex> before, after;
        std::vector<Vertex> nbs;
        for (Vertex x : g_.neighbors(s))
            if (alive_[x]) nbs.push_back(x);
        Vertex prev = s, cur = nbs[0];
        while (deg_[cur] == 2) {
            before.push_back(cur);
            Vertex nx = next_on_chain(prev, cur);
            prev = cur;
            cur = nx;
        }
        out.left = cur;
        prev = s;
        cur = nbs[1];
        while (deg_[cur] == 2) {
            after.push_back(cur);
            Vertex nx = next_on_chain(prev, cur);
            prev = cur;
            cur = nx;
        }
        out.right = cur;
        out.run.assign(before.rbegin(), before.rend());
        out.run.push_back(s);
        out.run.insert(out.run.end(), after.begin(), after.end());
        // path order runs from the before-walk boundary (left) to the
        // after-walk boundary (right): run.front() is adjacent to out.left
    }

    // BFS from a towards b in the residual minus `run`, depth-limited to k/2.
    // Returns the path a..b if found within the limit, else empty.  Scratch
    // arrays are stamped so repeated calls stay proportional to the ball size.
    std::vector<Vertex> bounded_path(Vertex a, Vertex b, const std::vector<Vertex>& run) const {
        if (bp_seen_.empty()) {
            bp_seen_.assign(g_.vertex_count(), 0);
            bp_block_.assign(g_.vertex_count(), 0);
            bp_dist_.assign(g_.vertex_count(), 0);
            bp_parent_.assign(g_.vertex_count(), -1);
        }
        int s = ++bp_stamp_;
        for (Vertex r : run) bp_block_[r] = s;
        std::vector<Vertex> queue{a};
        bp_seen_[a] = s;
        bp_dist_[a] = 0;
        bp_parent_[a] = -1;
        int limit = k_ / 2;
        for (size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            if (u == b) break;
            if (bp_dist_[u] == limit) continue;
            for (Vertex x : g_.neighbors(u)) {
                if (!alive_[x] || bp_block_[x] == s || bp_seen_[x] == s) continue;
                bp_seen_[x] = s;
                bp_dist_[x] = bp_dist_[u] + 1;
                bp_parent_[x] = u;
                queue.push_back(x);
            }
        }
        if (bp_seen_[b] != s) return {};
        std::vector<Vertex> path;
        for (Vertex v = b; v != -1; v = bp_parent_[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
    }

    RunClass classify_run(Vertex s) const {
        RunClass rc;
        walk_run(s, rc);
        int len = static_cast<int>(rc.run.size());
        if (rc.left == rc.right) {
            // closes a chordless cycle of length len+1 on a single hub
            if (len + 1 == k_) {
                rc.action = RunClass::PeelSingleHub;
            } else {
                rc.action = RunClass::Reject;
                rc.cycle.push_back(rc.left);
                rc.cycle.insert(rc.cycle.end(), rc.run.begin(), rc.run.end());
            }
            return rc;
        }
        if (g_.has_edge(rc.left, rc.right)) {
            // closes a chordless cycle of length len+2
            if (len + 2 == k_) {
                rc.action = RunClass::PeelTwoPendant;
            } else {
                rc.action = RunClass::Reject;
                rc.cycle.push_back(rc.left);
                rc.cycle.insert(rc.cycle.end(), rc.run.begin(), rc.run.end());
                rc.cycle.push_back(rc.right);
            }
            return rc;
        }
        if (k_ % 2 == 0 && len == k_ / 2 - 1) {
            auto host = bounded_path(rc.left, rc.right, rc.run);
            if (!host.empty()) {
                int d = static_cast<int>(host.size()) - 1;
                if (d == k_ / 2) {
                    rc.action = RunClass::PeelHalfPlusOne;
                    rc.host = std::move(host);
                } else {
                    // chain + shortest path is a chordless cycle of length
                    // k/2 + d != k (the path is shortest, the chain interior
                    // has degree 2, and left/right are non-adjacent)
                    rc.action = RunClass::Reject;
                    rc.cycle.push_back(rc.left);
                    rc.cycle.insert(rc.cycle.end(), rc.run.begin(), rc.run.end());
                    for (size_t i = host.size() - 1; i >= 1; --i) rc.cycle.push_back(host[i]);
                }
                return rc;
            }
        }
        rc.action = RunClass::Dormant;
        return rc;
    }

    void apply_pendant(Vertex u) {
        VcoUnit unit;
        unit.kind = UnitKind::PendantVertex;
        unit.vertices = {u};
        unit.removed = {u};
        unit.attachment = {only_alive_neighbor(u)};
        units_.push_back(std::move(unit));
        remove_vertex(u);
    }

    void apply_cycle_unit(const RunClass& rc) {
        VcoUnit unit;
        unit.removed = rc.run;
        std::sort(unit.removed.begin(), unit.removed.end());
        std::vector<Vertex> chain = rc.run;
        switch (rc.action) {
        case RunClass::PeelSingleHub: {
            unit.kind = UnitKind::ZeroPendantCycle; // relabeled after the peel
            unit.attachment = {rc.left};
            // orient so the chain end with the smaller id comes first
            if (chain.front() > chain.back()) std::reverse(chain.begin(), chain.end());
            unit.cycle_order.push_back(rc.left);
            unit.cycle_order.insert(unit.cycle_order.end(), chain.begin(), chain.end());
            break;
        }
        case RunClass::PeelTwoPendant: {
            unit.kind = UnitKind::TwoPendantCycle;
            Vertex a = std::min(rc.left, rc.right), b = std::max(rc.left, rc.right);
            unit.attachment = {a, b};
            if (rc.left != a) std::reverse(chain.begin(), chain.end());
            unit.cycle_order.push_back(a);
            unit.cycle_order.insert(unit.cycle_order.end(), chain.begin(), chain.end());
            unit.cycle_order.push_back(b);
            break;
        }
        case RunClass::PeelHalfPlusOne: {
            unit.kind = UnitKind::HalfPlusOnePendantCycle;
            Vertex a = std::min(rc.left, rc.right), b = std::max(rc.left, rc.right);
            unit.attachment = {a, b};
            std::vector<Vertex> host = rc.host; // rc.left .. rc.right
            if (rc.left != a) {
                std::reverse(chain.begin(), chain.end());
                std::reverse(host.begin(), host.end());
            }
            unit.cycle_order.push_back(a);
            unit.cycle_order.insert(unit.cycle_order.end(), chain.begin(), chain.end());
            unit.cycle_order.push_back(b);
            for (size_t i = host.size() - 2; i >= 1; --i) unit.cycle_order.push_back(host[i]);
            unit.vertices = sorted_unique(unit.cycle_order);
            break;
        }
        default:
            throw std::logic_error("apply_cycle_unit on non-peel action");
        }
        if (unit.vertices.empty())
            unit.vertices = sorted_unique(unit.cycle_order);
        units_.push_back(unit);
        for (Vertex r : rc.run) remove_vertex(r);
    }

    VertexSet alive_set() const {
        VertexSet s;
        for (Vertex v = 0; v < g_.vertex_count(); ++v)
            if (alive_[v]) s.push_back(v);
        return s;
    }

    // walk the 2-regular connected residual as a cycle from its smallest vertex
    std::vector<Vertex> residual_cycle() const {
        Vertex start = alive_set().front();
        std::vector<Vertex> cyc{start};
        Vertex prev = start, cur = only_first_neighbor(start);
        while (cur != start) {
            cyc.push_back(cur);
            Vertex nx = next_on_chain(prev, cur);
            prev = cur;
            cur = nx;
        }
        return cyc;
    }

    Vertex only_first_neighbor(Vertex v) const {
        for (Vertex x : g_.neighbors(v))
            if (alive_[x]) return x;
        throw std::logic_error("isolated vertex in residual cycle walk");
    }

    RecognitionResult reject_cycle(std::vector<Vertex> cycle) const {
        RecognitionResult res;
        res.accepted = false;
        res.witness.kind = WitnessKind::WrongLengthCycle;
        res.witness.cycle = std::move(cycle);
        return res;
    }

    RecognitionResult stuck_fallback() {
        // no pendant, no candidate run fired, residual is not a terminal core:
        // the shortest cycle of the residual (an induced cycle of g) decides
        auto sub = induced_subgraph(g_, alive_set());
        auto local = find_shortest_cycle(sub.graph);
        if (!local.empty() && static_cast<int>(local.size()) != k_) {
            std::vector<Vertex> cyc;
            for (Vertex v : local) cyc.push_back(sub.mapping[v]);
            return reject_cycle(std::move(cyc));
        }
        RecognitionResult res;
        res.accepted = false;
        res.witness.kind = WitnessKind::UnpeelableResidual;
        res.witness.residual = alive_set();
        return res;
    }

    RecognitionResult accept() {
        Vco vco;
        vco.k = k_;
        vco.core = alive_set();
        vco.units = std::move(units_);
        assign_pendant_cycle_labels(vco);
        return RecognitionResult{true, std::move(vco), {}};
    }

    // zero- vs one-pendant: replay in construction order, marking cycle
    // vertices; a single-hub cycle is one-pendant iff its attachment vertex
    // already lies on a marked cycle when the unit is added
    void assign_pendant_cycle_labels(Vco& vco) const {
        std::vector<char> on_cycle(g_.vertex_count(), 0);
        if (vco.core.size() > 1)
            for (Vertex v : vco.core) on_cycle[v] = 1;
        for (auto it = vco.units.rbegin(); it != vco.units.rend(); ++it) {
            VcoUnit& u = *it;
            if (u.kind == UnitKind::PendantVertex) continue;
            if (u.kind == UnitKind::ZeroPendantCycle || u.kind == UnitKind::OnePendantCycle)
                u.kind = on_cycle[u.attachment[0]] ? UnitKind::OnePendantCycle
                                                   : UnitKind::ZeroPendantCycle;
            for (Vertex v : u.vertices) on_cycle[v] = 1;
        }
    }

    // ---- deterministic order: pendants first, then lowest removed id ----

    RecognitionResult run_deterministic() {
        while (true) {
            if (!pend_.empty()) {
                apply_pendant(*pend_.begin());
                continue;
            }
            if (alive_count_ == 1) return accept();
            if (deg2_count_ == alive_count_ && alive_count_ >= 3) {
                auto cyc = residual_cycle();
                if (static_cast<int>(cyc.size()) == k_) return accept();
                return reject_cycle(std::move(cyc));
            }
            if (dirty_.empty()) return stuck_fallback();
            Vertex s = *dirty_.begin();
            dirty_.erase(dirty_.begin());
            if (!alive_[s] || deg_[s] != 2) continue;
            RunClass rc = classify_run(s);
            for (Vertex r : rc.run) dirty_.erase(r); // processed (revived by degree events)
            if (rc.action == RunClass::Reject) return reject_cycle(std::move(rc.cycle));
            if (rc.action == RunClass::Dormant) continue;
            apply_cycle_unit(rc);
        }
    }

    // ---- seeded order: uniform choice among all currently peelable units ----

    RecognitionResult run_seeded() {
        while (true) {
            if (alive_count_ == 1) return accept();
            if (deg2_count_ == alive_count_ && alive_count_ >= 3) {
                auto cyc = residual_cycle();
                if (static_cast<int>(cyc.size()) == k_) return accept();
                return reject_cycle(std::move(cyc));
            }
            std::vector<Vertex> pendants(pend_.begin(), pend_.end());
            std::vector<RunClass> peelable;
            std::vector<char> seen(g_.vertex_count(), 0);
            for (Vertex s = 0; s < g_.vertex_count(); ++s) {
                if (!alive_[s] || deg_[s] != 2 || seen[s]) continue;
                RunClass rc = classify_run(s);
                for (Vertex r : rc.run) seen[r] = 1;
                if (rc.action == RunClass::Reject) return reject_cycle(std::move(rc.cycle));
                if (rc.action != RunClass::Dormant) peelable.push_back(std::move(rc));
            }
            size_t total = pendants.size() + peelable.size();
            if (total == 0) return stuck_fallback();
            size_t pick = std::uniform_int_distribution<size_t>(0, total - 1)(rng_);
            if (pick < pendants.size())
                apply_pendant(pendants[pick]);
            else
                apply_cycle_unit(peelable[pick - pendants.size()]);
        }
    }
};

// chordless cycle of g in cyclic order?
bool is_chordless_cycle_of(const Graph& g, const std::vector<Vertex>& cyc) {
    size_t len = cyc.size();
    if (len < 3) return false;
    std::set<Vertex> distinct(cyc.begin(), cyc.end());
    if (distinct.size() != len) return false;
    for (Vertex v : cyc)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (size_t i = 0; i < len; ++i)
        for (size_t j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.has_edge(cyc[i], cyc[j]) != consecutive) return false;
        }
    return true;
}

// does the residual graph h admit any peel step (pendant or cycle unit)?
bool any_unit_peelable(const Graph& h, int k) {
    int n = h.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if (h.degree(v) == 1) return true;
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (h.degree(s) != 2 || seen[s]) continue;
        // walk the maximal run through s
        std::vector<Vertex> run;
        auto extend = [&](Vertex start_prev, Vertex start) {
            Vertex prev = start_prev, cur = start;
            std::vector<Vertex> part;
            while (h.degree(cur) == 2 && cur != s) {
                part.push_back(cur);
                Vertex nx = -1;
                for (Vertex x : h.neighbors(cur))
                    if (x != prev) { nx = x; break; }
                prev = cur;
                cur = nx;
            }
            return std::make_pair(part, cur);
        };
        auto [before, left] = extend(s, h.neighbors(s)[0]);
        if (left == s) continue; // 2-regular component: no unit, handled by caller
        auto [after, right] = extend(s, h.neighbors(s)[1]);
        run.assign(before.rbegin(), before.rend());
        run.push_back(s);
        run.insert(run.end(), after.begin(), after.end());
        for (Vertex r : run) seen[r] = 1;
        int len = static_cast<int>(run.size());
        if (left == right) {
            if (len + 1 == k) return true;
            continue;
        }
        if (h.has_edge(left, right)) {
            if (len + 2 == k) return true;
            continue;
        }
        if (k % 2 == 0 && len == k / 2 - 1) {
            // depth-limited BFS distance between the boundaries avoiding run
            std::vector<int> dist(n, -1);
            for (Vertex r : run) dist[r] = -2;
            std::deque<Vertex> q{left};
            dist[left] = 0;
            while (!q.empty()) {
                Vertex u = q.front();
                q.pop_front();
                if (u == right || dist[u] == k / 2) continue;
                for (Vertex x : h.neighbors(u)) {
                    if (dist[x] != -1) continue;
                    dist[x] = dist[u] + 1;
                    q.push_back(x);
                }
            }
            if (dist[right] == k / 2) return true;
        }
    }
    return false;
}

} // namespace

RecognitionResult compute_vco(const Graph& g, int k, uint64_t tie_seed) {
    if (k < 5) throw std::invalid_argument("k must be at least 5");
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    Peeler peeler(g, k, tie_seed);
    RecognitionResult res = peeler.run();
    if (res.accepted) {
        if (!validate_vco(g, res.vco))
            throw std::logic_error("computed vco failed self-validation");
    }
    return res;
}

bool validate_vco(const Graph& g, const Vco& vco) {
    int n = g.vertex_count();
    int k = vco.k;
    if (k < 5) return false;
    if (vco.units.size() > static_cast<size_t>(n)) return false;

    // presence is mutated in place; per-unit membership uses stamped arrays so
    // validation stays linear in the graph size
    std::vector<char> in_cur(n, 0), on_cycle(n, 0);
    std::vector<int> unit_at(n, -1), rem_at(n, -1), seen_at(n, -1), dist(n, 0);
    int stamp = 0;

    // core: K1 or a single induced C_k
    if (vco.core.empty()) return false;
    for (Vertex v : vco.core) {
        if (v < 0 || v >= n) return false;
        if (in_cur[v]) return false;
        in_cur[v] = 1;
    }

    // 2-regular on the set plus a full cycle walk == a single chordless C_k
    auto is_unit_cycle = [&](const VertexSet& verts, int s) {
        for (Vertex v : verts) {
            int c = 0;
            for (Vertex x : g.neighbors(v))
                if (unit_at[x] == s) ++c;
            if (c != 2) return false;
        }
        Vertex v0 = verts[0], prev = -1, cur = v0;
        int steps = 0;
        do {
            Vertex nxt = -1;
            for (Vertex x : g.neighbors(cur))
                if (unit_at[x] == s && x != prev) {
                    nxt = x;
                    break;
                }
            prev = cur;
            cur = nxt;
            ++steps;
        } while (cur != v0 && steps <= k);
        return cur == v0 && steps == static_cast<int>(verts.size());
    };

    if (vco.core.size() > 1) {
        if (vco.core.size() != static_cast<size_t>(k)) return false;
        ++stamp;
        for (Vertex v : vco.core) unit_at[v] = stamp;
        if (!is_unit_cycle(vco.core, stamp)) return false;
        for (Vertex v : vco.core) on_cycle[v] = 1;
    }

    size_t cur_size = vco.core.size();
    for (auto it = vco.units.rbegin(); it != vco.units.rend(); ++it) {
        const VcoUnit& u = *it;
        if (u.removed.empty()) return false;
        for (Vertex v : u.removed) {
            if (v < 0 || v >= n) return false;
            if (in_cur[v]) return false;
        }

        if (u.kind == UnitKind::PendantVertex) {
            if (u.removed.size() != 1 || u.attachment.size() != 1) return false;
            if (u.vertices != u.removed) return false;
            Vertex p = u.removed[0], a = u.attachment[0];
            if (a < 0 || a >= n || !in_cur[a]) return false;
            in_cur[p] = 1;
            int c = 0;
            bool hit = false;
            for (Vertex x : g.neighbors(p))
                if (in_cur[x]) {
                    ++c;
                    hit |= (x == a);
                }
            if (c != 1 || !hit) return false;
            cur_size += 1;
            continue;
        }

        // a cycle unit: vertices must induce a chordless C_k containing
        // removed plus the attachment side, with no stray edges from the
        // removed chain into the older graph
        if (u.vertices.size() != static_cast<size_t>(k)) return false;
        ++stamp;
        for (Vertex v : u.vertices) {
            if (v < 0 || v >= n) return false;
            if (unit_at[v] == stamp) return false;
            unit_at[v] = stamp;
        }
        for (Vertex v : u.removed) {
            if (unit_at[v] != stamp) return false;
            rem_at[v] = stamp;
        }
        for (Vertex a : u.attachment)
            if (a < 0 || a >= n || !in_cur[a] || unit_at[a] != stamp) return false;
        if (!is_unit_cycle(u.vertices, stamp)) return false;

        switch (u.kind) {
        case UnitKind::ZeroPendantCycle:
        case UnitKind::OnePendantCycle: {
            if (u.removed.size() != static_cast<size_t>(k - 1)) return false;
            if (u.attachment.size() != 1) return false;
            bool one = on_cycle[u.attachment[0]];
            if (one != (u.kind == UnitKind::OnePendantCycle)) return false;
            break;
        }
        case UnitKind::TwoPendantCycle: {
            if (u.removed.size() != static_cast<size_t>(k - 2)) return false;
            if (u.attachment.size() != 2) return false;
            if (!g.has_edge(u.attachment[0], u.attachment[1])) return false;
            break;
        }
        case UnitKind::HalfPlusOnePendantCycle: {
            if (k % 2 != 0) return false;
            if (u.removed.size() != static_cast<size_t>(k / 2 - 1)) return false;
            if (u.attachment.size() != 2) return false;
            Vertex a = u.attachment[0], b = u.attachment[1];
            if (g.has_edge(a, b)) return false;
            // host side lives in the older graph
            for (Vertex v : u.vertices)
                if (rem_at[v] != stamp && !in_cur[v]) return false;
            // the hubs must be at distance exactly k/2 in the older graph;
            // the search is depth-capped so it only touches a small ball
            std::vector<Vertex> queue{a};
            seen_at[a] = stamp;
            dist[a] = 0;
            bool found = false;
            for (size_t head = 0; head < queue.size() && !found; ++head) {
                Vertex x = queue[head];
                if (dist[x] >= k / 2) continue;
                for (Vertex y : g.neighbors(x)) {
                    if (!in_cur[y] || seen_at[y] == stamp) continue;
                    seen_at[y] = stamp;
                    dist[y] = dist[x] + 1;
                    if (y == b) {
                        found = true;
                        break;
                    }
                    queue.push_back(y);
                }
            }
            if (!found || dist[b] != k / 2) return false;
            break;
        }
        default: return false;
        }

        // cycle_order, when present, must spell out the unit's C_k
        if (!u.cycle_order.empty()) {
            if (u.cycle_order.size() != static_cast<size_t>(k)) return false;
            for (Vertex v : u.cycle_order) {
                if (v < 0 || v >= n || unit_at[v] != stamp) return false;
                if (seen_at[v] == -stamp - 2) return false;  // duplicate
                seen_at[v] = -stamp - 2;
            }
            for (size_t i = 0; i < u.cycle_order.size(); ++i) {
                Vertex x = u.cycle_order[i];
                Vertex y = u.cycle_order[(i + 1) % u.cycle_order.size()];
                if (!g.has_edge(x, y)) return false;
            }
        }

        for (Vertex r : u.removed) in_cur[r] = 1;
        // removed vertices see exactly their two cycle neighbors among
        // everything present after this unit is added
        for (Vertex r : u.removed) {
            int c = 0;
            for (Vertex x : g.neighbors(r)) {
                if (!in_cur[x]) continue;
                ++c;
                if (unit_at[x] != stamp) return false;
            }
            if (c != 2) return false;
        }
        for (Vertex v : u.vertices) on_cycle[v] = 1;
        cur_size += u.removed.size();
    }
    if (cur_size != static_cast<size_t>(n)) return false;
    for (Vertex v = 0; v < n; ++v)
        if (!in_cur[v]) return false;
    return true;
}

bool verify_rejection(const Graph& g, int k, const RejectionWitness& w) {
    if (k < 5) return false;
    if (w.kind == WitnessKind::WrongLengthCycle) {
        if (static_cast<int>(w.cycle.size()) == k) return false;
        return is_chordless_cycle_of(g, w.cycle);
    }
    // UnpeelableResidual: connected, not K1, not a C_k, and no unit applies
    if (w.residual.empty()) return false;
    for (Vertex v : w.residual)
        if (v < 0 || v >= g.vertex_count()) return false;
    VertexSet res = w.residual;
    if (sorted_unique(res) != res) return false;
    if (res.size() == 1) return false;
    auto sub = induced_subgraph(g, res);
    if (!is_connected(sub.graph)) return false;
    bool two_regular = true;
    for (Vertex v = 0; v < sub.graph.vertex_count(); ++v)
        if (sub.graph.degree(v) != 2) two_regular = false;
    if (two_regular && sub.graph.vertex_count() == k) return false; // it IS a core
    return !any_unit_peelable(sub.graph, k);
}

std::vector<CageOccurrence> detect_cage(const Graph& g, int k) {
    if (k < 6 || k % 2 != 0)
        throw std::invalid_argument("cage detection needs even k >= 6");
    int inner = k / 2 - 1;
    std::vector<CageOccurrence> out;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        if (g.degree(w) < 3) continue;
        for (Vertex z = w + 1; z < g.vertex_count(); ++z) {
            if (g.degree(z) < 3) continue;
            std::vector<std::vector<Vertex>> paths;
            for (Vertex x : g.neighbors(w)) {
                std::vector<Vertex> path;
                Vertex prev = w, cur = x;
                bool ok = true;
                for (int step = 0; step < inner; ++step) {
                    if (g.degree(cur) != 2) { ok = false; break; }
                    path.push_back(cur);
                    Vertex nx = -1;
                    for (Vertex y : g.neighbors(cur))
                        if (y != prev) { nx = y; break; }
                    prev = cur;
                    cur = nx;
                }
                if (ok && cur == z) paths.push_back(std::move(path));
            }
            if (paths.size() >= 2) out.push_back({w, z, std::move(paths)});
        }
    }
    return out;
}

std::string vco_to_text(const Vco& vco) {
    std::string out = "k " + std::to_string(vco.k) + "\n";
    auto ids = [](const VertexSet& vs) {
        std::string s;
        for (size_t i = 0; i < vs.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(vs[i] + 1);
        }
        return s;
    };
    for (const VcoUnit& u : vco.units)
        out += "u " + unit_kind_name(u.kind) + " attach=" + ids(u.attachment) +
               " removed=" + ids(u.removed) + "\n";
    out += "core";
    for (Vertex v : vco.core) out += " " + std::to_string(v + 1);
    out += "\n";
    return out;
}

} // namespace chordality
