#include "specgraph/path_family.hpp"
#include "specgraph/charpoly.hpp"
#include "specgraph/graph.hpp"

#include <doctest.h>

using namespace specgraph;

TEST_CASE("base cases") {
    auto f0 = path_family(0);
    CHECK(f0.phi_path.is_zero());
    CHECK(f0.phi_b == IntPoly{1});
    CHECK(f0.phi_u == IntPoly{1});
    CHECK(!f0.phi_cycle);

    auto f1 = path_family(1);
    CHECK(f1.phi_path == IntPoly{0, 1});
    CHECK(f1.phi_b == IntPoly{-1, 1});
    CHECK(f1.phi_u == IntPoly{-2, 1});

    auto f2 = path_family(2);
    CHECK(f2.phi_path == IntPoly{0, -2, 1});

    auto f3 = path_family(3);
    REQUIRE(f3.phi_cycle);
    CHECK(*f3.phi_cycle == IntPoly{0, 9, -6, 1});
}

TEST_CASE("recurrence equals the determinant route up to n = 20") {
    for (int n = 0; n <= 20; ++n) {
        auto fam = path_family(n);
        if (n >= 1) CHECK(fam.phi_path == charpoly(make_path(n), MatrixKind::L));
        // B_n: L(P_{n+1}) with the last vertex deleted
        CHECK(fam.phi_b == principal_minor_charpoly(make_path(n + 1), MatrixKind::L, {n}));
        // U_n: L(P_{n+2}) with both ends deleted
        CHECK(fam.phi_u == principal_minor_charpoly(make_path(n + 2), MatrixKind::L, {0, n + 1}));
        if (n >= 3) CHECK(*fam.phi_cycle == charpoly(make_cycle(n), MatrixKind::L));
    }
}

TEST_CASE("the x phi(B_n) identity holds as polynomials") {
    for (int n = 0; n <= 16; ++n) {
        auto fam = path_family(n);
        auto next = path_family(n + 1);
        CHECK(fam.phi_b.shifted(1) == next.phi_path + fam.phi_path);
    }
}

TEST_CASE("values at 4") {
    CHECK(eval4_family(1) == std::array<BigInt, 4>{4, 3, 2, 4});
    CHECK(eval4_family(2) == std::array<BigInt, 4>{8, 5, 3, 0});
    CHECK(eval4_family(6)[3] == 0); // even cycle
    for (int n = 1; n <= 20; ++n) {
        auto fam = path_family(n);
        auto vals = eval4_family(n);
        const BigRat four(4);
        CHECK(BigRat(vals[0]) == fam.phi_path.eval(four));
        CHECK(BigRat(vals[1]) == fam.phi_b.eval(four));
        CHECK(BigRat(vals[2]) == fam.phi_u.eval(four));
        if (n >= 3) CHECK(BigRat(vals[3]) == fam.phi_cycle->eval(four));
    }
}

TEST_CASE("adjacency path polynomials") {
    CHECK(a_path_poly(0) == IntPoly{1});
    CHECK(a_path_poly(1) == IntPoly{0, 1});
    CHECK(a_path_poly(2) == IntPoly{-1, 0, 1});
    for (int n = 1; n <= 20; ++n) {
        CHECK(a_path_poly(n) == charpoly(make_path(n), MatrixKind::A));
        // phi(A(P_n); 2) = n + 1
        CHECK(a_path_poly(n).eval(BigInt(2)) == n + 1);
    }
}
