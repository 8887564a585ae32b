#include "specgraph/ds_verify.hpp"
#include "specgraph/canonical.hpp"
#include "specgraph/formulas.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace specgraph;

TEST_CASE("summaries derive everything from the polynomial") {
    auto s = summarize(make_propeller(PropellerParams(3, 3, 1)), MatrixKind::L);
    CHECK(s.n == 6);
    CHECK(s.m == 7);
    CHECK(*s.component_count == 1);
    CHECK(*s.spanning_trees == 9);

    Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto t = summarize(two_edges, MatrixKind::L);
    CHECK(*t.component_count == 2);
    CHECK(*t.spanning_trees == 0);

    auto q = summarize(make_cycle(4), MatrixKind::Q);
    CHECK(*q.bipartite_components == 1);
    CHECK(q.m == 4);

    auto a = summarize(make_propeller(PropellerParams(4, 3, 2)), MatrixKind::A);
    CHECK(a.n == 8);
    CHECK(a.m == 9);

    // label-independence: identical polynomials give identical summaries
    std::mt19937 rng(91);
    Graph g = test::random_graph(rng, 7, 0.4);
    Graph h = test::relabel(g, test::random_perm(rng, 7));
    for (auto kind : {MatrixKind::A, MatrixKind::L, MatrixKind::Q}) {
        auto sg = summarize(g, kind), sh = summarize(h, kind);
        CHECK(sg.charpoly == sh.charpoly);
        CHECK(sg.m == sh.m);
        CHECK(sg.spectral_moments == sh.spectral_moments);
    }
}

TEST_CASE("summary spanning trees equal the matrix-tree count") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = test::random_graph(rng, 2 + trial % 6, 0.55);
        auto s = summarize(g, MatrixKind::L);
        if (*s.component_count == 1) CHECK(*s.spanning_trees == spanning_tree_count(g));
    }
}

TEST_CASE("lambda_2 < 2 for propellers, subdivisions, and not for cycle pairs") {
    CHECK(lambda2_below_2(make_propeller(PropellerParams(3, 3, 1))));
    CHECK(lambda2_below_2(subdivision(make_propeller(PropellerParams(3, 3, 1)))));
    CHECK(!lambda2_below_2(disjoint_union(make_cycle(3), make_cycle(3))));
}

TEST_CASE("mate search finds the classical Q-cospectral pair") {
    Graph star = make_star(3);
    Graph triangle_plus = disjoint_union(make_cycle(3), Graph::from_edges(1, {}));
    auto mates = mate_search(star, MatrixKind::Q);
    REQUIRE(mates.size() == 1);
    CHECK(isomorphic(mates[0], triangle_plus));
    // symmetry: the reverse search returns the star
    auto back = mate_search(triangle_plus, MatrixKind::Q);
    REQUIRE(back.size() == 1);
    CHECK(isomorphic(back[0], star));
    // same graphs are not L-cospectral (components differ)
    CHECK(mate_search(star, MatrixKind::L).empty());
    CHECK(mate_search(star, MatrixKind::A).empty());
}

TEST_CASE("mate search finds the classical A-cospectral pair") {
    Graph star4 = make_star(4);
    Graph c4_plus = disjoint_union(make_cycle(4), Graph::from_edges(1, {}));
    auto mates = mate_search(star4, MatrixKind::A);
    REQUIRE(mates.size() == 1);
    CHECK(isomorphic(mates[0], c4_plus));
    CHECK(mate_search(star4, MatrixKind::L).empty());
    CHECK(mate_search(star4, MatrixKind::Q).empty());
}

TEST_CASE("small propellers have no L or Q mates") {
    for (auto kind : {MatrixKind::L, MatrixKind::Q}) {
        CHECK(mate_search(make_propeller(PropellerParams(3, 3, 1)), kind).empty());
        CHECK(mate_search(make_propeller(PropellerParams(3, 3, 2)), kind).empty());
        CHECK(mate_search(make_propeller(PropellerParams(4, 3, 1)), kind).empty());
    }
}

TEST_CASE("batched search answers multiple queries in one sweep") {
    Graph a = make_propeller(PropellerParams(4, 3, 1));
    Graph b = make_propeller(PropellerParams(3, 3, 2));
    auto results = mate_search_batch({{MatrixKind::L, a}, {MatrixKind::Q, b}, {MatrixKind::A, a}});
    CHECK(results.size() == 3);
    CHECK(results[0].empty());
    CHECK(results[1].empty());
    // A-spectrum: exhaustive answer for this order, whatever it is, must
    // agree with the single search
    auto single = mate_search(a, MatrixKind::A);
    REQUIRE(results[2].size() == single.size());
    for (size_t i = 0; i < single.size(); ++i) CHECK(results[2][i] == single[i]);
}

TEST_CASE("restricted search honours the degree-sequence filter") {
    Graph star = make_star(3);
    MateSearchOptions opt;
    opt.restrict_degseq = std::vector<DegreeSequence>{{2, 2, 1, 1}}; // excludes the triangle mate
    CHECK(mate_search(star, MatrixKind::Q, opt).empty());
    opt.restrict_degseq = std::vector<DegreeSequence>{{2, 2, 2, 0}};
    CHECK(mate_search(star, MatrixKind::Q, opt).size() == 1);
}

TEST_CASE("mate search ceiling") {
    MateSearchOptions opt;
    opt.ceiling = 5;
    CHECK_THROWS_AS(mate_search(make_cycle(6), MatrixKind::L, opt), resource_error);
}

TEST_CASE("propellers of one order are pairwise distinguished") {
    CHECK(propellers_of_order(8).size() == 4); // (3,3,3) (4,3,2) (5,3,1) (4,4,1)
    for (int n = 6; n <= 10; ++n)
        for (auto kind : {MatrixKind::A, MatrixKind::L, MatrixKind::Q})
            CHECK(propeller_pairwise_distinct(n, kind));
}

TEST_CASE("ds_verify pipeline") {
    auto r = ds_verify(PropellerParams(3, 3, 1), MatrixKind::L);
    CHECK(r.verdict == "DS-at-this-order");
    CHECK(r.mates.empty());
    CHECK(!r.candidates); // unrestricted below order 12
    CHECK(*r.summary.spanning_trees == 9);

    auto rq = ds_verify(PropellerParams(4, 3, 1), MatrixKind::Q);
    CHECK(rq.verdict == "DS-at-this-order");

    MateSearchOptions opt;
    opt.ceiling = 5;
    CHECK_THROWS_AS(ds_verify(PropellerParams(3, 3, 1), MatrixKind::L, opt), resource_error);
}

TEST_CASE("smith census up to order six") {
    auto five = smith_census(5);
    REQUIRE(five.size() == 4); // C3, C4, C5, K_{1,4}
    std::set<std::string> certs;
    for (const auto& g : five) certs.insert(certificate(g));
    CHECK(certs.count(certificate(make_cycle(3))));
    CHECK(certs.count(certificate(make_cycle(4))));
    CHECK(certs.count(certificate(make_cycle(5))));
    CHECK(certs.count(certificate(make_smith(SmithKind::w(0)))));

    auto six = smith_census(6);
    CHECK(six.size() == 6); // adds C6 and W1
    std::set<std::string> certs6;
    for (const auto& g : six) certs6.insert(certificate(g));
    CHECK(certs6.count(certificate(make_cycle(6))));
    CHECK(certs6.count(certificate(make_smith(SmithKind::w(1)))));
}

TEST_CASE("smith constructions pass their exact gate") {
    CHECK(make_smith(SmithKind::cycle(5)).order() == 5);
    CHECK(make_smith(SmithKind::w(0)).order() == 5);
    CHECK(isomorphic(make_smith(SmithKind::w(0)), make_star(4)));
    CHECK(make_smith(SmithKind::w(4)).order() == 9);
    CHECK(make_smith(SmithKind::s1()).order() == 7);
    CHECK(make_smith(SmithKind::s2()).order() == 8);
    CHECK(make_smith(SmithKind::s3()).order() == 9);
    CHECK_THROWS_AS(make_smith(SmithKind::w(-1)), std::invalid_argument);
}

TEST_CASE("case 3.2 companion search") {
    IntPoly expected{60, -262, 396, -276, 96, -16, 1};
    auto check = case32_h5_check(expected);
    // exactly one isomorphism class satisfies the structural constraints
    REQUIRE(check.companions.size() == 1);
    CHECK(check.companion_qpolys[0] == expected);
    REQUIRE(check.h5_qpoly);
    // phi(Q(H5)) = phi(Q(H5^1)) phi(L(P_9)) for the disjoint union
    CHECK(*check.h5_qpoly == expected * charpoly(make_path(9), MatrixKind::L));
    REQUIRE(check.f_q_h5);
    CHECK(*check.f_q_h5 != check.f_l_664);
}
