#include "specgraph/canonical.hpp"
#include "specgraph/enumerate.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace specgraph;

TEST_CASE("certificates are label-invariant") {
    std::mt19937 rng(101);
    for (int n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 15; ++trial) {
            Graph g = test::random_graph(rng, n, 0.5);
            Graph h = test::relabel(g, test::random_perm(rng, n));
            CHECK(certificate(g) == certificate(h));
        }
    }
}

TEST_CASE("certificates separate known non-isomorphic graphs") {
    CHECK(certificate(make_path(4)) != certificate(make_star(3)));
    CHECK(certificate(make_cycle(6)) != certificate(disjoint_union(make_cycle(3), make_cycle(3))));
    // A-cospectral pair: still structurally distinct
    CHECK(certificate(make_star(4)) != certificate(disjoint_union(make_cycle(4), make_path(1))));
}

TEST_CASE("propeller symmetry in (p, q)") {
    CHECK(certificate(make_propeller(PropellerParams(3, 4, 1))) ==
          certificate(make_propeller(PropellerParams(4, 3, 1))));
}

TEST_CASE("canonical labeling is a permutation onto the certificate") {
    std::mt19937 rng(5);
    Graph g = test::random_graph(rng, 7, 0.45);
    auto form = canonicalize(g);
    std::vector<int> seen(7, 0);
    for (int v : form.labeling) ++seen[v];
    for (int c : seen) CHECK(c == 1);
    Graph relabeled = test::relabel(g, form.labeling);
    CHECK(canonicalize(relabeled).certificate == form.certificate);
}

TEST_CASE("highly symmetric graphs canonicalize") {
    CHECK(certificate(make_complete(7)) == certificate(test::relabel(make_complete(7), {6, 5, 4, 3, 2, 1, 0})));
    Graph pete = from_graph6("IheA@GUAo"); // Petersen
    CHECK(certificate(pete).size() > 0);
    std::mt19937 rng(3);
    CHECK(certificate(pete) == certificate(test::relabel(pete, test::random_perm(rng, 10))));
}

TEST_CASE("enumerate_graphs yields one representative per class") {
    auto classes43 = enumerate_graphs(4, 3);
    CHECK(classes43.size() == 3); // P4, K_{1,3}, K3 + isolated vertex
    auto classes33 = enumerate_graphs(3, 3);
    CHECK(classes33.size() == 1);
    auto classes55 = enumerate_graphs(5, 5);
    CHECK(classes55.size() == 6);
    auto classes67 = enumerate_graphs(6, 7);
    CHECK(classes67.size() == 24);

    // degree-restricted: the only (6,7) class with degrees (5,2^4,1)
    auto filtered = enumerate_graphs(6, 7, [](const Graph& g) {
        return degree_sequence(g) == DegreeSequence{5, 2, 2, 2, 2, 1};
    });
    REQUIRE(filtered.size() == 1);
    CHECK(isomorphic(filtered[0], make_propeller(PropellerParams(3, 3, 1))));
}

TEST_CASE("enumeration class counts match the labeled oracle") {
    for (int n = 3; n <= 6; ++n)
        for (int m : {n - 2, n - 1, n, n + 1}) {
            if (m < 0 || m > n * (n - 1) / 2) continue;
            CHECK(static_cast<long>(enumerate_graphs(n, m).size()) == test::labeled_class_count(n, m));
        }
}

TEST_CASE("enumeration is deterministic and job-count independent") {
    ScanOptions serial;
    serial.jobs = 1;
    ScanOptions parallel;
    parallel.jobs = 3;
    auto a = enumerate_graphs(6, 7, nullptr, serial);
    auto b = enumerate_graphs(6, 7, nullptr, parallel);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("enumeration ceiling is enforced") {
    ScanOptions opt;
    opt.ceiling = 5;
    CHECK_THROWS_AS(enumerate_graphs(6, 3, nullptr, opt), resource_error);
}
