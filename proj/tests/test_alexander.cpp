#include <finsurg/alexander.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using finsurg::SymLaurentPoly;
using finsurg::TorsionSeq;

TEST_CASE("SymLaurentPoly normalization") {
    SymLaurentPoly trefoil({-1, 1});
    CHECK(trefoil.degree() == 1);
    CHECK(trefoil.coeff(0) == -1);
    CHECK(trefoil.coeff(1) == 1);
    CHECK(trefoil.coeff(-1) == 1);
    CHECK(trefoil.str() == "t - 1 + t^-1");

    // Delta(1) = -1 flips globally
    SymLaurentPoly flipped({1, -1});
    CHECK(flipped == trefoil);
    // trailing zeros stripped
    CHECK(SymLaurentPoly({-1, 1, 0, 0}) == trefoil);
    CHECK_THROWS_AS(SymLaurentPoly({1, 1}), std::invalid_argument);
    CHECK(SymLaurentPoly::one().degree() == 0);
    CHECK(SymLaurentPoly::one().str() == "1");
}

TEST_CASE("torus_alexander") {
    CHECK(finsurg::torus_alexander(3, 2).coeffs() == std::vector<long long>{-1, 1});
    CHECK(finsurg::torus_alexander(5, 2).coeffs() == std::vector<long long>{1, -1, 1});
    CHECK(finsurg::torus_alexander(2, 3) == finsurg::torus_alexander(3, 2));
    // T(2m+1,2) is alternating +-1 up to degree m
    for (long long m = 1; m <= 8; ++m) {
        auto p = finsurg::torus_alexander(2 * m + 1, 2);
        REQUIRE(p.degree() == m);
        for (long long i = 0; i <= m; ++i) CHECK(p.coeff(i) == ((m - i) % 2 == 0 ? 1 : -1));
    }
    CHECK_THROWS_AS(finsurg::torus_alexander(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(finsurg::torus_alexander(1, 2), std::invalid_argument);
}

TEST_CASE("cable_alexander") {
    auto c1 = finsurg::cable_alexander(11, 2, finsurg::torus_alexander(3, 2));
    auto inv1 = finsurg::classical_invariants(c1);
    CHECK(inv1.genus == 7);
    CHECK(inv1.det == 11);
    CHECK(inv1.ddelta == 38);

    auto c2 = finsurg::cable_alexander(13, 2, finsurg::torus_alexander(3, 2));
    auto inv2 = finsurg::classical_invariants(c2);
    CHECK(inv2.genus == 8);
    CHECK(inv2.det == 13);
    CHECK(inv2.ddelta == 50);

    CHECK(finsurg::cable_alexander(3, 2, SymLaurentPoly::one()) ==
          finsurg::torus_alexander(3, 2));
    CHECK_THROWS_AS(finsurg::cable_alexander(4, 2, SymLaurentPoly::one()),
                    std::invalid_argument);
}

TEST_CASE("classical_invariants") {
    auto t52 = finsurg::classical_invariants(finsurg::torus_alexander(5, 2));
    CHECK(t52.genus == 2);
    CHECK(t52.det == 5);
    CHECK(t52.ddelta == 6);
    auto unknot = finsurg::classical_invariants(SymLaurentPoly::one());
    CHECK(unknot.genus == 0);
    CHECK(unknot.det == 1);
    CHECK(unknot.ddelta == 0);
    // det is always odd
    for (long long m = 1; m <= 10; ++m)
        CHECK(finsurg::classical_invariants(finsurg::torus_alexander(2 * m + 1, 2)).det % 2 == 1);
}

TEST_CASE("pretzel constants") {
    auto p7 = finsurg::classical_invariants(finsurg::pretzel_237());
    CHECK(p7.genus == 5);
    CHECK(p7.det == 1);
    CHECK(p7.ddelta == 24);
    auto p9 = finsurg::classical_invariants(finsurg::pretzel_239());
    CHECK(p9.genus == 6);
    CHECK(p9.det == 3);
    CHECK(p9.ddelta == 34);
    CHECK(finsurg::lspace_check(finsurg::pretzel_237()));
    CHECK(finsurg::lspace_check(finsurg::pretzel_239()));
}

TEST_CASE("torsion_coefficients") {
    CHECK(finsurg::torsion_coefficients(finsurg::torus_alexander(3, 2)).t ==
          std::vector<long long>{1});
    CHECK(finsurg::torsion_coefficients(finsurg::torus_alexander(5, 2)).t ==
          std::vector<long long>{1, 1});
    CHECK(finsurg::torsion_coefficients(SymLaurentPoly::one()).t.empty());
    // closed form ceil((m-i)/2) for T(2m+1,2), m <= 50
    for (long long m = 1; m <= 50; ++m) {
        auto ts = finsurg::torsion_coefficients(finsurg::torus_alexander(2 * m + 1, 2));
        REQUIRE(ts.genus() == m);
        for (long long i = 0; i < m; ++i) CHECK(ts.at(i) == (m - i + 1) / 2);
        CHECK(ts.at(m) == 0);
    }
}

TEST_CASE("reconstruct_alexander") {
    TorsionSeq tre;
    tre.t = {1};
    CHECK(finsurg::reconstruct_alexander(tre) == finsurg::torus_alexander(3, 2));
    CHECK(finsurg::reconstruct_alexander(TorsionSeq{}) == SymLaurentPoly::one());

    TorsionSeq s;
    s.t = {2, 1, 1};
    auto poly = finsurg::reconstruct_alexander(s);
    CHECK(finsurg::torsion_coefficients(poly) == s);

    TorsionSeq bad;
    bad.t = {1, 2};  // increases
    CHECK_THROWS_WITH(finsurg::reconstruct_alexander(bad),
                      Catch::Matchers::ContainsSubstring("not an L-space torsion sequence"));
    TorsionSeq neg;
    neg.t = {-1};
    CHECK_THROWS_AS(finsurg::reconstruct_alexander(neg), std::invalid_argument);
    TorsionSeq drop;
    drop.t = {3, 1};  // step of 2
    CHECK_THROWS_AS(finsurg::reconstruct_alexander(drop), std::invalid_argument);
}

TEST_CASE("torsion round-trip on random valid sequences") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        long long g = 1 + static_cast<long long>(rng() % 30);
        // build a valid sequence backwards: t_{g-1} = 1, steps up of 0 or 1
        std::vector<long long> t(static_cast<std::size_t>(g));
        t[static_cast<std::size_t>(g - 1)] = 1;
        for (long long i = g - 2; i >= 0; --i)
            t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i + 1)] + (rng() % 2);
        TorsionSeq ts;
        ts.t = t;
        REQUIRE(ts.lspace_valid());
        auto poly = finsurg::reconstruct_alexander(ts);
        CHECK(finsurg::torsion_coefficients(poly) == ts);
        CHECK(finsurg::lspace_check(poly));
        // a_g = 1 forces t_{g-1} = 1 and t_g = 0
        CHECK(ts.at(g - 1) == 1);
        CHECK(ts.at(g) == 0);
    }
}

TEST_CASE("lspace_check") {
    CHECK(finsurg::lspace_check(finsurg::torus_alexander(3, 2)));
    CHECK(finsurg::lspace_check(finsurg::torus_alexander(5, 3)));
    CHECK(finsurg::lspace_check(
        finsurg::cable_alexander(11, 2, finsurg::torus_alexander(3, 2))));
    // figure-eight: 3 - (t + t^-1) has a_g = -1
    CHECK_FALSE(finsurg::lspace_check(SymLaurentPoly({3, -1})));
    CHECK(finsurg::lspace_check(SymLaurentPoly::one()));
}
