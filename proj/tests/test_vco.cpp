#include "chordality/vco.hpp"

#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"

using namespace chordality;
using namespace testutil;

namespace {

Graph petersen() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

// base C5 on 10..14; pendant 4 at 10 carrying the C5 {4,0,1,2,3};
// pendant 9 at 12 carrying the C5 {9,5,6,7,8}
Graph two_zero_pendant_cycles() {
    return Graph(15, {{10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 10},
                      {10, 4}, {4, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 4},
                      {12, 9}, {9, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
}

} // namespace

TEST_CASE("compute_vco base cases") {
    auto r = compute_vco(make_cycle(5), 5);
    REQUIRE(r.accepted);
    CHECK(r.vco.k == 5);
    CHECK(r.vco.units.empty());
    CHECK(r.vco.core == VertexSet{0, 1, 2, 3, 4});
    CHECK(validate_vco(make_cycle(5), r.vco));

    auto k1 = compute_vco(Graph(1, {}), 5);
    REQUIRE(k1.accepted);
    CHECK(k1.vco.units.empty());
    CHECK(k1.vco.core == VertexSet{0});

    auto k2 = compute_vco(Graph(2, {{0, 1}}), 5);
    REQUIRE(k2.accepted);
    REQUIRE(k2.vco.units.size() == 1);
    CHECK(k2.vco.units[0].kind == UnitKind::PendantVertex);
    CHECK(k2.vco.units[0].removed == VertexSet{0});
    CHECK(k2.vco.units[0].attachment == VertexSet{1});
    CHECK(k2.vco.core == VertexSet{1});

    CHECK_THROWS_AS(compute_vco(make_cycle(5), 4), std::invalid_argument);
    CHECK_THROWS_AS(compute_vco(Graph(4, {{0, 1}, {2, 3}}), 5), std::invalid_argument);
}

TEST_CASE("compute_vco strips pendant paths in id order") {
    auto r = compute_vco(make_path(4), 5);
    REQUIRE(r.accepted);
    REQUIRE(r.vco.units.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(r.vco.units[i].kind == UnitKind::PendantVertex);
        CHECK(r.vco.units[i].removed == VertexSet{i});
        CHECK(r.vco.units[i].attachment == VertexSet{i + 1});
    }
    CHECK(r.vco.core == VertexSet{3});
    CHECK(validate_vco(make_path(4), r.vco));
}

TEST_CASE("compute_vco peels a two-pendant cycle") {
    Graph g = double_c6_shared_edge();
    auto r = compute_vco(g, 6);
    REQUIRE(r.accepted);
    REQUIRE(r.vco.units.size() == 1);
    const VcoUnit& u = r.vco.units[0];
    CHECK(u.kind == UnitKind::TwoPendantCycle);
    CHECK(u.removed == VertexSet{2, 3, 4, 5});
    CHECK(u.attachment == VertexSet{0, 1});
    CHECK(u.vertices == VertexSet{0, 1, 2, 3, 4, 5});
    CHECK(r.vco.core == VertexSet{0, 1, 6, 7, 8, 9});
    CHECK(validate_vco(g, r.vco));
}

TEST_CASE("compute_vco peels pendant vertex then cycle core") {
    Graph g = cycle_with_pendant(6);
    auto r = compute_vco(g, 6);
    REQUIRE(r.accepted);
    REQUIRE(r.vco.units.size() == 1);
    CHECK(r.vco.units[0].kind == UnitKind::PendantVertex);
    CHECK(r.vco.units[0].removed == VertexSet{6});
    CHECK(r.vco.units[0].attachment == VertexSet{0});
    CHECK(r.vco.core.size() == 6);
    CHECK(vco_to_text(r.vco) == "k 6\nu pendant attach=1 removed=7\ncore 1 2 3 4 5 6\n");
}

TEST_CASE("zero- vs one-pendant labels") {
    // two C5 sharing vertex 0 is strictly chordality-5; the first peeled
    // cycle's attachment still lies on the second cycle
    Graph shared(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                     {0, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}});
    auto r = compute_vco(shared, 5);
    REQUIRE(r.accepted);
    REQUIRE(r.vco.units.size() == 1);
    CHECK(r.vco.units[0].kind == UnitKind::OnePendantCycle);
    CHECK(r.vco.units[0].removed == VertexSet{1, 2, 3, 4});
    CHECK(r.vco.units[0].attachment == VertexSet{0});
    CHECK(r.vco.core == VertexSet{0, 5, 6, 7, 8});
    CHECK(validate_vco(shared, r.vco));

    // C5 core, pendant 5 at 0, C5 through 5: the base cycle peels first
    // (lowest removed id) and its attachment 0 then lies on no cycle
    Graph zp(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5},
                  {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}});
    auto rz = compute_vco(zp, 5);
    REQUIRE(rz.accepted);
    REQUIRE(rz.vco.units.size() == 2);
    CHECK(rz.vco.units[0].kind == UnitKind::ZeroPendantCycle);
    CHECK(rz.vco.units[0].removed == VertexSet{1, 2, 3, 4});
    CHECK(rz.vco.units[0].attachment == VertexSet{0});
    CHECK(rz.vco.units[1].kind == UnitKind::PendantVertex);
    CHECK(rz.vco.units[1].removed == VertexSet{0});
    CHECK(rz.vco.units[1].attachment == VertexSet{5});
    CHECK(rz.vco.core == VertexSet{5, 6, 7, 8, 9});
    CHECK(validate_vco(zp, rz.vco));

    // flipping a label must break validation
    Vco bad = rz.vco;
    bad.units[0].kind = UnitKind::OnePendantCycle;
    CHECK_FALSE(validate_vco(zp, bad));
}

TEST_CASE("compute_vco peels cage chains") {
    Graph g = make_cage(3, 6);
    auto r = compute_vco(g, 6);
    REQUIRE(r.accepted);
    REQUIRE(r.vco.units.size() == 1);
    const VcoUnit& u = r.vco.units[0];
    CHECK(u.kind == UnitKind::HalfPlusOnePendantCycle);
    CHECK(u.removed == VertexSet{2, 3});
    CHECK(u.attachment == VertexSet{0, 1});
    CHECK(u.vertices == VertexSet{0, 1, 2, 3, 4, 5});
    CHECK(r.vco.core == VertexSet{0, 1, 4, 5, 6, 7});
    CHECK(validate_vco(g, r.vco));

    // larger cage: all chains but two peel away
    Graph g5 = make_cage(5, 6);
    auto r5 = compute_vco(g5, 6);
    REQUIRE(r5.accepted);
    CHECK(r5.vco.units.size() == 3);
    for (const auto& unit : r5.vco.units)
        CHECK(unit.kind == UnitKind::HalfPlusOnePendantCycle);
    CHECK(validate_vco(g5, r5.vco));
}

TEST_CASE("compute_vco rejects with verifiable witnesses") {
    auto r = compute_vco(make_cycle(5), 6);
    REQUIRE_FALSE(r.accepted);
    CHECK(r.witness.kind == WitnessKind::WrongLengthCycle);
    CHECK(r.witness.cycle.size() == 5);
    CHECK(verify_rejection(make_cycle(5), 6, r.witness));

    auto r2 = compute_vco(make_cycle(6), 5);
    REQUIRE_FALSE(r2.accepted);
    CHECK(r2.witness.cycle.size() == 6);
    CHECK(verify_rejection(make_cycle(6), 5, r2.witness));

    // K_{2,3}: stuck immediately, the girth fallback finds a C4
    auto r3 = compute_vco(make_complete_bipartite(2, 3), 6);
    REQUIRE_FALSE(r3.accepted);
    CHECK(r3.witness.kind == WitnessKind::WrongLengthCycle);
    CHECK(r3.witness.cycle.size() == 4);
    CHECK(verify_rejection(make_complete_bipartite(2, 3), 6, r3.witness));

    // Petersen: girth 5 but contains induced 6-cycles; with k=5 the residual
    // is stuck (every vertex has degree 3), with k=6 the girth betrays it
    auto rp5 = compute_vco(petersen(), 5);
    REQUIRE_FALSE(rp5.accepted);
    CHECK(rp5.witness.kind == WitnessKind::UnpeelableResidual);
    CHECK(rp5.witness.residual.size() == 10);
    CHECK(verify_rejection(petersen(), 5, rp5.witness));

    auto rp6 = compute_vco(petersen(), 6);
    REQUIRE_FALSE(rp6.accepted);
    CHECK(rp6.witness.kind == WitnessKind::WrongLengthCycle);
    CHECK(rp6.witness.cycle.size() == 5);
    CHECK(verify_rejection(petersen(), 6, rp6.witness));

    // double-C5 under k=6: wrong-length chain closure found during peeling
    auto rd = compute_vco(double_c5_shared_edge(), 6);
    REQUIRE_FALSE(rd.accepted);
    CHECK(rd.witness.kind == WitnessKind::WrongLengthCycle);
    CHECK(rd.witness.cycle.size() == 5);
    CHECK(verify_rejection(double_c5_shared_edge(), 6, rd.witness));
}

TEST_CASE("verify_rejection rejects bogus witnesses") {
    Graph c5 = make_cycle(5);
    RejectionWitness w;
    w.kind = WitnessKind::WrongLengthCycle;
    w.cycle = {0, 1, 2, 3, 4}; // length k: not a witness for k=5
    CHECK_FALSE(verify_rejection(c5, 5, w));
    CHECK(verify_rejection(c5, 6, w));
    w.cycle = {0, 1, 3, 2, 4}; // not a cycle in order
    CHECK_FALSE(verify_rejection(c5, 6, w));
    w.cycle = {0, 1, 2};
    CHECK_FALSE(verify_rejection(c5, 6, w));

    RejectionWitness u;
    u.kind = WitnessKind::UnpeelableResidual;
    u.residual = {0, 1, 2, 3, 4};
    CHECK_FALSE(verify_rejection(c5, 5, u)); // residual IS a C_5
    Graph pet = petersen();
    u.residual = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(verify_rejection(pet, 5, u));
    u.residual = {0, 1, 2};
    CHECK_FALSE(verify_rejection(pet, 5, u)); // peelable (degree-1 vertices)
}

TEST_CASE("validate_vco rejects tampered orderings") {
    Graph g = two_zero_pendant_cycles();
    auto r = compute_vco(g, 5);
    REQUIRE(r.accepted);
    REQUIRE(r.vco.units.size() == 4);
    CHECK(r.vco.units[0].kind == UnitKind::ZeroPendantCycle);
    CHECK(r.vco.units[0].removed == VertexSet{0, 1, 2, 3});
    CHECK(r.vco.units[0].attachment == VertexSet{4});
    CHECK(r.vco.units[1].kind == UnitKind::PendantVertex);
    CHECK(r.vco.units[1].removed == VertexSet{4});
    CHECK(r.vco.units[2].kind == UnitKind::ZeroPendantCycle);
    CHECK(r.vco.units[2].removed == VertexSet{5, 6, 7, 8});
    CHECK(r.vco.units[3].kind == UnitKind::PendantVertex);
    CHECK(r.vco.units[3].removed == VertexSet{9});
    CHECK(r.vco.core == VertexSet{10, 11, 12, 13, 14});
    CHECK(validate_vco(g, r.vco));

    // swapping the two independent (cycle, pendant) blocks stays valid
    Vco swapped = r.vco;
    std::swap(swapped.units[0], swapped.units[2]);
    std::swap(swapped.units[1], swapped.units[3]);
    CHECK(validate_vco(g, swapped));

    // moving a removed vertex between units breaks validation
    Vco moved = r.vco;
    moved.units[0].removed = {0, 1, 2};
    moved.units[1].removed = {3, 4};
    CHECK_FALSE(validate_vco(g, moved));

    Vco wrong_attach = r.vco;
    wrong_attach.units[1].attachment = {11};
    CHECK_FALSE(validate_vco(g, wrong_attach));

    Vco dropped = r.vco;
    dropped.units.pop_back();
    CHECK_FALSE(validate_vco(g, dropped));

    Vco bad_core = r.vco;
    bad_core.core = {0, 1, 2, 3};
    CHECK_FALSE(validate_vco(g, bad_core));

    Vco wrong_k = r.vco;
    wrong_k.k = 6;
    CHECK_FALSE(validate_vco(g, wrong_k));
}

TEST_CASE("tie seeds permute the peel but preserve validity") {
    Graph g = two_zero_pendant_cycles();
    for (uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        auto r = compute_vco(g, 5, seed);
        REQUIRE(r.accepted);
        // different peel orders may leave a C5 core (4 units) or unravel one
        // further cycle and end on a K1 core (5 units); both are valid
        CHECK(r.vco.units.size() >= 4);
        CHECK(r.vco.units.size() <= static_cast<size_t>(g.vertex_count()));
        CHECK(validate_vco(g, r.vco));
        // the same seed must reproduce the same ordering
        auto again = compute_vco(g, 5, seed);
        REQUIRE(again.accepted);
        CHECK(again.vco.units.size() == r.vco.units.size());
        for (size_t i = 0; i < r.vco.units.size(); ++i) {
            CHECK(again.vco.units[i].kind == r.vco.units[i].kind);
            CHECK(again.vco.units[i].removed == r.vco.units[i].removed);
        }
    }
}

TEST_CASE("detect_cage") {
    CHECK_THROWS_AS(detect_cage(make_cycle(6), 5), std::invalid_argument);
    CHECK(detect_cage(make_cycle(6), 6).empty());

    auto occ = detect_cage(make_cage(3, 6), 6);
    REQUIRE(occ.size() == 1);
    CHECK(occ[0].w == 0);
    CHECK(occ[0].z == 1);
    REQUIRE(occ[0].paths.size() == 3);
    CHECK(occ[0].paths[0] == std::vector<Vertex>{2, 3});
    CHECK(occ[0].paths[1] == std::vector<Vertex>{4, 5});
    CHECK(occ[0].paths[2] == std::vector<Vertex>{6, 7});

    // a C6 whose two antipodal vertices have pendant hairs: a CAGE(2,4)
    Graph hairy(8, {{0, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 0}, {0, 6}, {1, 7}});
    auto occ2 = detect_cage(hairy, 6);
    REQUIRE(occ2.size() == 1);
    CHECK(occ2[0].w == 0);
    CHECK(occ2[0].z == 1);
    CHECK(occ2[0].paths.size() == 2);

    // CAGE(3,5) for k=8: three parallel paths of 3 internal vertices
    auto occ8 = detect_cage(make_cage(3, 8), 8);
    REQUIRE(occ8.size() == 1);
    CHECK(occ8[0].paths.size() == 3);
    CHECK(occ8[0].paths[0].size() == 3);
}
