#include "chordality/twok2_solvers.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "chordality/oracle.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace chordality;
using namespace testutil;
namespace orc = chordality::oracle;

namespace {

SeparatorDecomposition decomp_of(const Graph& g) {
    auto d = find_minimal_separator(g);
    return d ? *d : SeparatorDecomposition{};
}

// Connected bipartite graph whose trivial component is not universal to S
// (pendant 1 hangs off 0, pendant 5 off 2): decomposition S={2,3}, T={4,5}.
Graph make_chain_skew_6() {
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {2, 5}, {3, 4}});
}

// Chain graph with both trivial vertices universal to S={2,3}.
Graph make_chain_compliant_6() {
    return Graph(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}});
}

// Skew chain with the second pendant moved: still bipartite, C4 present.
Graph make_chain_bent_6() {
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 4}, {3, 5}});
}

// Smallest non-bipartite triangle-free member beyond C5.
Graph make_c3free_6() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
}

// Two trivial vertices, independent S of four, complete-bipartite core.
Graph make_c3free_10() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex t : {0, 1})
        for (Vertex s : {2, 3, 4, 5}) e.push_back({t, s});
    for (Vertex s : {2, 3})
        for (Vertex x : {6, 7}) e.push_back({s, x});
    for (Vertex s : {4, 5})
        for (Vertex y : {8, 9}) e.push_back({s, y});
    for (Vertex x : {6, 7})
        for (Vertex y : {8, 9}) e.push_back({x, y});
    return Graph(10, e);
}

Graph make_w5() {
    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                     {0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
}

Graph make_k5_minus_e() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v)
            if (!(u == 3 && v == 4)) e.push_back({u, v});
    return Graph(5, e);
}

Graph make_clique_plus_pendant(int q) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < q; ++u)
        for (Vertex v = u + 1; v < q; ++v) e.push_back({u, v});
    e.push_back({0, static_cast<Vertex>(q)});
    return Graph(q + 1, e);
}

// Pendant 0 on hub 1; rim 2..6 forms a five-cycle cone'd by the hub.
Graph make_wheel_with_pendant() {
    return Graph(7, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                     {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 6}});
}

Graph make_double_star() {
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

void check_fvs_witness(const Graph& g, const Solution& s) {
    CHECK(s.problem == ProblemKind::FVS);
    CHECK(static_cast<int>(s.vertices.size()) == s.value);
    CHECK(orc::is_fvs(g, s.vertices));
}

void check_ds_witness(const Graph& g, const Solution& s) {
    CHECK(s.problem == ProblemKind::DominatingSet);
    CHECK(static_cast<int>(s.vertices.size()) == s.value);
    CHECK(orc::is_dominating_set(g, s.vertices));
}

} // namespace

TEST_CASE("fvs_c3c5 frozen values and witnesses") {
    Graph k23 = make_complete_bipartite(2, 3);
    Solution s = fvs_c3c5(k23, decomp_of(k23));
    CHECK(s.value == 1);
    CHECK(s.vertices == VertexSet{1});
    check_fvs_witness(k23, s);

    Graph c4 = make_cycle(4);
    Solution s2 = fvs_c3c5(c4, decomp_of(c4));
    CHECK(s2.value == 1);
    CHECK(s2.vertices == VertexSet{3});
    check_fvs_witness(c4, s2);

    Graph skew = make_chain_skew_6();
    Solution s3 = fvs_c3c5(skew, decomp_of(skew));
    CHECK(s3.value == 1);
    CHECK(s3.vertices == VertexSet{2});
    check_fvs_witness(skew, s3);

    Graph cc6 = make_chain_compliant_6();
    Solution s4 = fvs_c3c5(cc6, decomp_of(cc6));
    CHECK(s4.value == 1);
    CHECK(s4.vertices == VertexSet{3});
    check_fvs_witness(cc6, s4);

    Graph p4 = make_path(4);
    CHECK(fvs_c3c5(p4, decomp_of(p4)).value == 0);
    Graph star = make_star(4);
    CHECK(fvs_c3c5(star, decomp_of(star)).value == 0);

    // values agree with brute force on every golden
    CHECK(orc::solve(ProblemKind::FVS, k23).value == 1);
    CHECK(orc::solve(ProblemKind::FVS, skew).value == 1);
    CHECK(orc::solve(ProblemKind::FVS, cc6).value == 1);
}

TEST_CASE("fvs_c3c5 rejects out-of-class and disconnected inputs") {
    Graph c5 = make_cycle(5);
    CHECK_THROWS_AS(fvs_c3c5(c5, decomp_of(c5)), std::invalid_argument);
    Graph k3 = make_complete(3);
    CHECK_THROWS_AS(fvs_c3c5(k3, decomp_of(k3)), std::invalid_argument);
    Graph p5 = make_path(5); // contains 2K2
    CHECK_THROWS_AS(fvs_c3c5(p5, decomp_of(p5)), std::invalid_argument);
    Graph iso(2, {});
    CHECK_THROWS_AS(fvs_c3c5(iso, SeparatorDecomposition{}), std::invalid_argument);
}

TEST_CASE("fvs_c3 frozen values and witnesses") {
    Graph c5 = make_cycle(5);
    Solution s = fvs_c3(c5);
    CHECK(s.value == 1);
    CHECK(s.vertices == VertexSet{3});
    check_fvs_witness(c5, s);

    Graph g6 = make_c3free_6();
    Solution s2 = fvs_c3(g6);
    CHECK(s2.value == 1);
    CHECK(s2.vertices == VertexSet{3});
    check_fvs_witness(g6, s2);
    CHECK(orc::solve(ProblemKind::FVS, g6).value == 1);

    Graph g10 = make_c3free_10();
    Solution s3 = fvs_c3(g10);
    CHECK(s3.value == 4);
    CHECK(s3.vertices == VertexSet{3, 4, 5, 7});
    check_fvs_witness(g10, s3);
    CHECK(orc::solve(ProblemKind::FVS, g10).value == 4);

    // bipartite members route through the chain enumerator
    Graph k23 = make_complete_bipartite(2, 3);
    Solution s4 = fvs_c3(k23);
    CHECK(s4.value == 1);
    CHECK(s4.vertices == VertexSet{1});
    check_fvs_witness(k23, s4);
    CHECK(fvs_c3(make_double_star()).value == 0);

    CHECK_THROWS_AS(fvs_c3(make_complete(3)), std::invalid_argument);
    CHECK_THROWS_AS(fvs_c3(make_w5()), std::invalid_argument);
}

TEST_CASE("fvs_split frozen values and witnesses") {
    Graph k5 = make_complete(5);
    Solution s = fvs_split(k5, SeparatorDecomposition{});
    CHECK(s.value == 3);
    CHECK(s.vertices == VertexSet{2, 3, 4});
    check_fvs_witness(k5, s);

    Graph k5e = make_k5_minus_e();
    Solution s2 = fvs_split(k5e, decomp_of(k5e));
    CHECK(s2.value == 2);
    CHECK(s2.vertices == VertexSet{1, 2});
    check_fvs_witness(k5e, s2);
    CHECK(orc::solve(ProblemKind::FVS, k5e).value == 2);

    Graph k3p = make_clique_plus_pendant(3);
    Solution s3 = fvs_split(k3p, decomp_of(k3p));
    CHECK(s3.value == 1);
    CHECK(s3.vertices == VertexSet{2});
    check_fvs_witness(k3p, s3);

    Graph k4p = make_clique_plus_pendant(4);
    Solution s4 = fvs_split(k4p, decomp_of(k4p));
    CHECK(s4.value == 2);
    CHECK(s4.vertices == VertexSet{2, 3});
    check_fvs_witness(k4p, s4);
    CHECK(orc::solve(ProblemKind::FVS, k4p).value == 2);

    CHECK(fvs_split(make_complete(2), SeparatorDecomposition{}).value == 0);
    Graph k3 = make_complete(3);
    Solution s5 = fvs_split(k3, SeparatorDecomposition{});
    CHECK(s5.value == 1);
    CHECK(s5.vertices == VertexSet{2});

    Graph c4 = make_cycle(4);
    CHECK_THROWS_AS(fvs_split(c4, decomp_of(c4)), std::invalid_argument);
    Graph c5 = make_cycle(5);
    CHECK_THROWS_AS(fvs_split(c5, decomp_of(c5)), std::invalid_argument);
}

TEST_CASE("fvs_c4 frozen values and witnesses") {
    Graph c5 = make_cycle(5);
    Solution s = fvs_c4(c5, decomp_of(c5));
    CHECK(s.value == 1);
    CHECK(s.vertices == VertexSet{4});
    check_fvs_witness(c5, s);

    Graph w5 = make_w5();
    Solution s2 = fvs_c4(w5, decomp_of(w5));
    CHECK(s2.value == 2);
    CHECK(s2.vertices == VertexSet{4, 5});
    check_fvs_witness(w5, s2);
    CHECK(orc::solve(ProblemKind::FVS, w5).value == 2);

    Graph k4 = make_complete(4);
    Solution s3 = fvs_c4(k4, SeparatorDecomposition{});
    CHECK(s3.value == 2);
    CHECK(s3.vertices == VertexSet{2, 3});

    CHECK(fvs_c4(make_star(5), decomp_of(make_star(5))).value == 0);

    Graph wp = make_wheel_with_pendant();
    Solution s4 = fvs_c4(wp, decomp_of(wp));
    CHECK(s4.value == 2);
    CHECK(s4.vertices == VertexSet{1, 6});
    check_fvs_witness(wp, s4);
    CHECK(orc::solve(ProblemKind::FVS, wp).value == 2);

    // split members qualify through class nesting
    Graph k4p = make_clique_plus_pendant(4);
    Solution s5 = fvs_c4(k4p, decomp_of(k4p));
    CHECK(s5.value == 2);
    check_fvs_witness(k4p, s5);

    Graph k23 = make_complete_bipartite(2, 3);
    CHECK_THROWS_AS(fvs_c4(k23, decomp_of(k23)), std::invalid_argument);
    Graph c4 = make_cycle(4);
    CHECK_THROWS_AS(fvs_c4(c4, decomp_of(c4)), std::invalid_argument);
}

TEST_CASE("steiner_c3c5 frozen values") {
    Graph skew = make_chain_skew_6();
    Solution s = steiner_c3c5(skew, decomp_of(skew), {1, 5});
    CHECK(s.value == 2);
    CHECK(s.vertices == VertexSet{0, 1, 2, 5});
    CHECK(orc::is_steiner_set(skew, s.vertices, {1, 5}));

    Graph k23 = make_complete_bipartite(2, 3);
    Solution s2 = steiner_c3c5(k23, decomp_of(k23), {0, 1});
    CHECK(s2.value == 1);
    CHECK(s2.vertices == VertexSet{0, 1, 2});
    Solution s3 = steiner_c3c5(k23, decomp_of(k23), {2, 3});
    CHECK(s3.value == 1);
    CHECK(s3.vertices == VertexSet{0, 2, 3});
    Solution s4 = steiner_c3c5(k23, decomp_of(k23), {0, 2});
    CHECK(s4.value == 0);
    CHECK(s4.vertices == VertexSet{0, 2});

    CHECK(steiner_c3c5(skew, decomp_of(skew), {3}).value == 0);
    CHECK(steiner_c3c5(skew, decomp_of(skew), {3}).vertices == VertexSet{3});

    // oracle agreement on the non-trivial golden
    CHECK(orc::solve(ProblemKind::SteinerTree, skew, {1, 5}).value == 2);

    CHECK_THROWS_AS(steiner_c3c5(k23, decomp_of(k23), {}), std::invalid_argument);
    CHECK_THROWS_AS(steiner_c3c5(k23, decomp_of(k23), {0, 9}), std::invalid_argument);
    Graph c5 = make_cycle(5);
    CHECK_THROWS_AS(steiner_c3c5(c5, decomp_of(c5), {0, 2}), std::invalid_argument);
}

TEST_CASE("steiner_c3 frozen values") {
    Graph p4 = make_path(4);
    Solution s = steiner_c3(p4, decomp_of(p4), {0, 3});
    CHECK(s.value == 2);
    CHECK(s.vertices == VertexSet{0, 1, 2, 3});
    CHECK(orc::is_steiner_set(p4, s.vertices, {0, 3}));

    Graph c5 = make_cycle(5);
    Solution s2 = steiner_c3(c5, decomp_of(c5), {0, 2});
    CHECK(s2.value == 1);
    CHECK(s2.vertices == VertexSet{0, 1, 2});

    Graph g10 = make_c3free_10();
    Solution s3 = steiner_c3(g10, decomp_of(g10), {0, 6, 8});
    CHECK(s3.value == 1);
    CHECK(s3.vertices == VertexSet{0, 2, 6, 8});
    CHECK(orc::is_steiner_set(g10, s3.vertices, {0, 6, 8}));
    CHECK(orc::solve(ProblemKind::SteinerTree, g10, {0, 6, 8}).value == 1);

    Graph bent = make_chain_bent_6();
    Solution s4 = steiner_c3(bent, decomp_of(bent), {1, 5});
    CHECK(s4.value == 2);
    CHECK(s4.vertices == VertexSet{0, 1, 3, 5});
    CHECK(orc::solve(ProblemKind::SteinerTree, bent, {1, 5}).value == 2);

    CHECK(steiner_c3(c5, decomp_of(c5), {0, 1, 2, 3, 4}).value == 0);

    CHECK_THROWS_AS(steiner_c3(c5, decomp_of(c5), {}), std::invalid_argument);
    Graph k3 = make_complete(3);
    CHECK_THROWS_AS(steiner_c3(k3, SeparatorDecomposition{}, {0, 1}), std::invalid_argument);
}

TEST_CASE("ds_c3c5 frozen values and witnesses") {
    Graph k23 = make_complete_bipartite(2, 3);
    Solution s = ds_c3c5(k23, decomp_of(k23));
    CHECK(s.value == 2);
    CHECK(s.vertices == VertexSet{0, 2});
    check_ds_witness(k23, s);
    CHECK(orc::solve(ProblemKind::DominatingSet, k23).value == 2);

    Graph skew = make_chain_skew_6();
    Solution s2 = ds_c3c5(skew, decomp_of(skew));
    CHECK(s2.value == 2);
    CHECK(s2.vertices == VertexSet{0, 2});
    check_ds_witness(skew, s2);

    Graph star = make_star(4);
    CHECK(ds_c3c5(star, decomp_of(star)).vertices == VertexSet{0});
    Graph k2 = make_complete(2);
    CHECK(ds_c3c5(k2, SeparatorDecomposition{}).vertices == VertexSet{0});
    Graph k1 = make_complete(1);
    CHECK(ds_c3c5(k1, SeparatorDecomposition{}).vertices == VertexSet{0});

    Graph p4 = make_path(4);
    Solution s3 = ds_c3c5(p4, decomp_of(p4));
    CHECK(s3.value == 2);
    CHECK(s3.vertices == VertexSet{1, 2});

    Graph c4 = make_cycle(4);
    Solution s4 = ds_c3c5(c4, decomp_of(c4));
    CHECK(s4.value == 2);
    CHECK(s4.vertices == VertexSet{0, 1});

    Graph c5 = make_cycle(5);
    CHECK_THROWS_AS(ds_c3c5(c5, decomp_of(c5)), std::invalid_argument);
}

TEST_CASE("ds_c3 frozen values and witnesses") {
    Graph c5 = make_cycle(5);
    Solution s = ds_c3(c5, decomp_of(c5));
    CHECK(s.value == 2);
    CHECK(s.vertices == VertexSet{0, 2});
    check_ds_witness(c5, s);
    CHECK(orc::solve(ProblemKind::DominatingSet, c5).value == 2);

    Graph g6 = make_c3free_6();
    Solution s2 = ds_c3(g6, decomp_of(g6));
    CHECK(s2.value == 2);
    CHECK(s2.vertices == VertexSet{0, 3});
    check_ds_witness(g6, s2);

    Graph g10 = make_c3free_10();
    Solution s3 = ds_c3(g10, decomp_of(g10));
    CHECK(s3.value == 3);
    CHECK(s3.vertices == VertexSet{2, 6, 8});
    check_ds_witness(g10, s3);
    CHECK(orc::solve(ProblemKind::DominatingSet, g10).value == 3);

    Graph ds2 = make_double_star();
    Solution s4 = ds_c3(ds2, decomp_of(ds2));
    CHECK(s4.value == 2);
    CHECK(s4.vertices == VertexSet{0, 1});

    CHECK(ds_c3(make_star(4), decomp_of(make_star(4))).vertices == VertexSet{0});
    Graph k23 = make_complete_bipartite(2, 3);
    CHECK(ds_c3(k23, decomp_of(k23)).vertices == VertexSet{0, 2});
    Graph p4 = make_path(4);
    CHECK(ds_c3(p4, decomp_of(p4)).vertices == VertexSet{1, 2});

    Graph k3 = make_complete(3);
    CHECK_THROWS_AS(ds_c3(k3, SeparatorDecomposition{}), std::invalid_argument);
}

TEST_CASE("connected_ds_2k2 frozen values") {
    Graph c5 = make_cycle(5);
    Solution s = connected_ds_2k2(c5, SubclassTag::C3Free);
    CHECK(s.value == 3);
    CHECK(s.vertices == VertexSet{0, 1, 2});
    CHECK(orc::is_connected_dominating_set(c5, s.vertices));
    CHECK(orc::solve(ProblemKind::ConnectedDominatingSet, c5).value == 3);

    Graph g6 = make_c3free_6();
    Solution s2 = connected_ds_2k2(g6, SubclassTag::C3Free);
    CHECK(s2.value == 3);
    CHECK(s2.vertices == VertexSet{0, 1, 3});
    CHECK(orc::is_connected_dominating_set(g6, s2.vertices));
    CHECK(orc::solve(ProblemKind::ConnectedDominatingSet, g6).value == 3);

    Graph k23 = make_complete_bipartite(2, 3);
    Solution s3 = connected_ds_2k2(k23, SubclassTag::C3C5Free);
    CHECK(s3.value == 2);
    CHECK(s3.vertices == VertexSet{0, 2});
    CHECK(orc::solve(ProblemKind::ConnectedDominatingSet, k23).value == 2);

    Graph dstar = make_double_star();
    Solution s4 = connected_ds_2k2(dstar, SubclassTag::C3C5Free);
    CHECK(s4.value == 2);
    CHECK(s4.vertices == VertexSet{0, 1});

    Graph star = make_star(4);
    CHECK(connected_ds_2k2(star, SubclassTag::C3C5Free).vertices == VertexSet{0});

    Graph g10 = make_c3free_10();
    Solution s5 = connected_ds_2k2(g10, SubclassTag::C3Free);
    CHECK(s5.value == 3);
    CHECK(s5.vertices == VertexSet{2, 6, 8});
    CHECK(orc::solve(ProblemKind::ConnectedDominatingSet, g10).value == 3);

    Graph c4 = make_cycle(4);
    Solution s6 = connected_ds_2k2(c4, SubclassTag::C3C5Free);
    CHECK(s6.value == 2);
    CHECK(s6.vertices == VertexSet{0, 1});

    // only tags with both a dominating-set and a Steiner solver are accepted
    CHECK_THROWS_AS(connected_ds_2k2(c4, SubclassTag::C3C4Free), std::invalid_argument);
    Graph k5 = make_complete(5);
    CHECK_THROWS_AS(connected_ds_2k2(k5, SubclassTag::C4C5Free), std::invalid_argument);
    CHECK_THROWS_AS(connected_ds_2k2(c5, SubclassTag::C3C5Free), std::invalid_argument);
}

TEST_CASE("solve_twok2 dispatch table") {
    Graph c4 = make_cycle(4);
    CHECK(solve_twok2(c4, SubclassTag::C3C5Free, ProblemKind::FVS).value == 1);
    Graph c5 = make_cycle(5);
    CHECK(solve_twok2(c5, SubclassTag::C4Free, ProblemKind::FVS).value == 1);
    CHECK(solve_twok2(c5, SubclassTag::C3C4Free, ProblemKind::FVS).value == 1);
    CHECK(solve_twok2(c5, SubclassTag::C3Free, ProblemKind::FVS).value == 1);
    Graph k5 = make_complete(5);
    CHECK(solve_twok2(k5, SubclassTag::C4C5Free, ProblemKind::FVS).value == 3);

    Graph k23 = make_complete_bipartite(2, 3);
    CHECK(solve_twok2(k23, SubclassTag::C3C5Free, ProblemKind::DominatingSet).vertices ==
          VertexSet{0, 2});
    CHECK(solve_twok2(c5, SubclassTag::C3Free, ProblemKind::DominatingSet).value == 2);
    CHECK(solve_twok2(c5, SubclassTag::C3C4Free, ProblemKind::DominatingSet).value == 2);

    Graph p4 = make_path(4);
    CHECK(solve_twok2(p4, SubclassTag::C3C4Free, ProblemKind::SteinerTree, {0, 3}).value == 2);
    CHECK(solve_twok2(p4, SubclassTag::C3C5Free, ProblemKind::SteinerTree, {0, 3}).value == 2);

    CHECK(solve_twok2(k23, SubclassTag::C3C5Free, ProblemKind::ConnectedDominatingSet).value == 2);
    // the tree/C5 class routes its CDS through the triangle-free machinery
    CHECK(solve_twok2(c5, SubclassTag::C3C4Free, ProblemKind::ConnectedDominatingSet).value == 3);
    CHECK(solve_twok2(c5, SubclassTag::C3Free, ProblemKind::ConnectedDominatingSet).value == 3);

    // unsupported (problem, class) pairs
    CHECK_THROWS_AS(solve_twok2(c4, SubclassTag::C3C5Free, ProblemKind::MIS),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_twok2(c4, SubclassTag::C3C5Free, ProblemKind::VertexCover),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_twok2(c4, SubclassTag::C3C5Free, ProblemKind::OCT),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_twok2(c4, SubclassTag::C3C5Free, ProblemKind::ECT),
                    std::invalid_argument);
    Graph g7(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 5}, {2, 5}, {3, 5},
                 {4, 5}, {0, 6}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}});
    CHECK_THROWS_AS(solve_twok2(g7, SubclassTag::General2K2Free, ProblemKind::FVS),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_twok2(k5, SubclassTag::C4C5Free, ProblemKind::DominatingSet),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_twok2(k5, SubclassTag::C4C5Free, ProblemKind::SteinerTree, {0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        solve_twok2(k5, SubclassTag::C4C5Free, ProblemKind::ConnectedDominatingSet),
        std::invalid_argument);
    CHECK_THROWS_AS(solve_twok2(c4, SubclassTag::Not2K2Free, ProblemKind::FVS),
                    std::invalid_argument);

    // class membership is validated
    CHECK_THROWS_AS(solve_twok2(c5, SubclassTag::C3C5Free, ProblemKind::FVS),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_twok2(k5, SubclassTag::C3Free, ProblemKind::FVS),
                    std::invalid_argument);

    // terminals only make sense for Steiner
    CHECK_THROWS_AS(solve_twok2(c4, SubclassTag::C3C5Free, ProblemKind::FVS, {0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_twok2(p4, SubclassTag::C3C5Free, ProblemKind::SteinerTree, {}),
                    std::invalid_argument);

    Graph iso(3, {});
    CHECK_THROWS_AS(solve_twok2(iso, SubclassTag::C3C5Free, ProblemKind::FVS),
                    std::invalid_argument);
}

TEST_CASE("twok2 solvers match the oracle on sampled in-class graphs") {
    int n_c3c5 = 0, n_c3 = 0, n_split = 0, n_c4 = 0, n_cds = 0;
    std::mt19937_64 seeder(20260813u);
    for (int iter = 0; iter < 420; ++iter) {
        int n = 3 + static_cast<int>(iter % 7);
        double p = (iter % 4 == 0)   ? 0.25
                   : (iter % 4 == 1) ? 0.4
                   : (iter % 4 == 2) ? 0.55
                                     : 0.7;
        Graph g = random_connected_graph(n, p, seeder());
        if (!is_2k2_free(g)) continue;
        SeparatorDecomposition d = decomp_of(g);

        VertexSet terms = {0, static_cast<Vertex>(n - 1)};
        int fvs_opt = orc::solve(ProblemKind::FVS, g).value;
        int ds_opt = orc::solve(ProblemKind::DominatingSet, g).value;
        int st_opt = orc::solve(ProblemKind::SteinerTree, g, terms).value;

        if (in_subclass(g, SubclassTag::C3C5Free)) {
            ++n_c3c5;
            Solution f = fvs_c3c5(g, d);
            CHECK(f.value == fvs_opt);
            CHECK(orc::is_fvs(g, f.vertices));
            Solution dd = ds_c3c5(g, d);
            CHECK(dd.value == ds_opt);
            CHECK(orc::is_dominating_set(g, dd.vertices));
            Solution st = steiner_c3c5(g, d, terms);
            CHECK(st.value == st_opt);
            CHECK(orc::is_steiner_set(g, st.vertices, terms));
        }
        if (in_subclass(g, SubclassTag::C3Free)) {
            ++n_c3;
            Solution f = fvs_c3(g);
            CHECK(f.value == fvs_opt);
            CHECK(orc::is_fvs(g, f.vertices));
            Solution dd = ds_c3(g, d);
            CHECK(dd.value == ds_opt);
            CHECK(orc::is_dominating_set(g, dd.vertices));
            Solution st = steiner_c3(g, d, terms);
            CHECK(st.value == st_opt);
            CHECK(orc::is_steiner_set(g, st.vertices, terms));

            ++n_cds;
            Solution cds = connected_ds_2k2(g, SubclassTag::C3Free);
            CHECK(cds.value == orc::solve(ProblemKind::ConnectedDominatingSet, g).value);
            CHECK(orc::is_connected_dominating_set(g, cds.vertices));
        }
        if (in_subclass(g, SubclassTag::C3C5Free)) {
            Solution cds = connected_ds_2k2(g, SubclassTag::C3C5Free);
            CHECK(cds.value == orc::solve(ProblemKind::ConnectedDominatingSet, g).value);
            CHECK(orc::is_connected_dominating_set(g, cds.vertices));
        }
        if (in_subclass(g, SubclassTag::C4C5Free)) {
            ++n_split;
            Solution f = fvs_split(g, d);
            CHECK(f.value == fvs_opt);
            CHECK(orc::is_fvs(g, f.vertices));
        }
        if (in_subclass(g, SubclassTag::C4Free)) {
            ++n_c4;
            Solution f = fvs_c4(g, d);
            CHECK(f.value == fvs_opt);
            CHECK(orc::is_fvs(g, f.vertices));
        }
    }
    // the sweep must actually exercise every solver family
    CHECK(n_c3c5 >= 25);
    CHECK(n_c3 >= 25);
    CHECK(n_split >= 40);
    CHECK(n_c4 >= 40);
    CHECK(n_cds >= 25);
}
