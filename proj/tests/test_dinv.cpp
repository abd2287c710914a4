#include <finsurg/dinv.hpp>
#include <finsurg/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using finsurg::DVector;
using finsurg::Rational;

TEST_CASE("d_lens base cases and examples") {
    auto s3 = finsurg::d_lens(1, 1);
    REQUIRE(s3.p == 1);
    CHECK(s3.values == std::vector<Rational>{Rational(0)});

    auto l21 = finsurg::d_lens(2, 1);
    CHECK(l21.values == std::vector<Rational>{Rational(1, 4), Rational(-1, 4)});

    auto l54 = finsurg::d_lens(5, 4);
    CHECK(l54.values == std::vector<Rational>{Rational(-1, 5), Rational(1, 5), Rational(1, 5),
                                              Rational(-1, 5), Rational(-1)});

    auto l41 = finsurg::d_lens(4, 1);
    CHECK(l41.values == std::vector<Rational>{Rational(3, 4), Rational(0), Rational(-1, 4),
                                              Rational(0)});

    CHECK(finsurg::d_lens(7, 10).values == finsurg::d_lens(7, 3).values);  // q reduced mod p
    CHECK_THROWS_AS(finsurg::d_lens(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(finsurg::d_lens(0, 1), std::invalid_argument);
}

TEST_CASE("d_surgery") {
    // 5/4-surgery on the unknot is L(5,4)
    CHECK(finsurg::d_surgery(finsurg::TorsionSeq{}, 5, 4) == finsurg::d_lens(5, 4));

    finsurg::TorsionSeq trefoil;
    trefoil.t = {1};
    auto s5 = finsurg::d_surgery(trefoil, 5, 1);
    CHECK(s5.values == std::vector<Rational>{Rational(-1), Rational(1, 5), Rational(-1, 5),
                                             Rational(-1, 5), Rational(1, 5)});
    auto s4 = finsurg::d_surgery(trefoil, 4, 1);
    CHECK(s4.values == std::vector<Rational>{Rational(-5, 4), Rational(0), Rational(-1, 4),
                                             Rational(0)});
    CHECK_THROWS_AS(finsurg::d_surgery(trefoil, 6, 3), std::invalid_argument);
}

TEST_CASE("d_filling") {
    finsurg::TorsionSeq trefoil;
    trefoil.t = {1};
    CHECK(finsurg::d_filling({+1, 21, 4}) == finsurg::d_surgery(trefoil, 21, 4));
    CHECK(finsurg::d_filling({-1, 17, 2}) == finsurg::d_surgery(trefoil, 17, 2).negated());
    auto one = finsurg::d_filling({+1, 1, 1});
    CHECK(one.p == 1);
    CHECK(one.values == std::vector<Rational>{Rational(-2)});
    CHECK_THROWS_AS(finsurg::d_filling({+1, 4, 2}), std::invalid_argument);
}

TEST_CASE("closed form matches the surgery formula") {
    for (long long m = 1; m <= 12; ++m)
        for (long long n : {m, m + 1}) {
            INFO("m=" << m << " n=" << n);
            CHECK(finsurg::d_torus_closed_form(m, n) ==
                  finsurg::d_surgery(finsurg::torus2_torsion(m), 4 * n, 1));
        }
    CHECK_THROWS_WITH(finsurg::d_torus_closed_form(3, 5),
                      Catch::Matchers::ContainsSubstring("closed form"));
}

TEST_CASE("closed form middle branch value") {
    // at i = n the value is -1/4 + (2n-i)^2/(4n)
    long long m = 2, n = 2;
    auto d = finsurg::d_torus_closed_form(m, n);
    CHECK(d.at(n) == Rational(-1, 4) + Rational(n * n, 4 * n));
}

TEST_CASE("conjugation_involutions") {
    auto i21 = finsurg::conjugation_involutions(finsurg::d_lens(2, 1));
    CHECK(i21 == std::vector<long long>{0});
    auto i11 = finsurg::conjugation_involutions(finsurg::d_lens(1, 1));
    CHECK(i11 == std::vector<long long>{0});
    auto i41 = finsurg::conjugation_involutions(finsurg::d_lens(4, 1));
    CHECK(std::find(i41.begin(), i41.end(), 0) != i41.end());

    // nonemptiness across a spread of lens spaces and surgeries
    for (long long p = 1; p <= 30; ++p)
        for (long long q = 1; q < p + (p == 1 ? 1 : 0); ++q) {
            if (p > 1 && finsurg::gcd_ll(p, q) != 1) continue;
            CHECK_FALSE(finsurg::conjugation_involutions(finsurg::d_lens(p, q)).empty());
        }
    for (long long m = 1; m <= 6; ++m)
        CHECK_FALSE(finsurg::conjugation_involutions(
                        finsurg::d_surgery(finsurg::torus2_torsion(m), 4 * m, 1))
                        .empty());
}

TEST_CASE("homeomorphic lens spaces share value multisets") {
    for (long long p = 2; p <= 100; ++p)
        for (long long q = 1; q < p; ++q) {
            if (finsurg::gcd_ll(p, q) != 1) continue;
            long long qi = finsurg::mod_inverse(q, p).value.convert_to<long long>();
            auto a = finsurg::d_lens(p, q).values;
            auto b = finsurg::d_lens(p, qi).values;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }
}

TEST_CASE("minimum location and spin values (Prop 7.1 spot checks)") {
    for (long long m = 1; m <= 16; ++m) {
        if (m % 2 == 0) {
            // the n = m case: minimum -1/4 + 1/(4m) - 1, exactly at {1, 4m-1}
            auto d = finsurg::d_torus_closed_form(m, m);
            Rational mn = d.values[0];
            for (const auto& v : d.values) mn = std::min(mn, v);
            std::vector<long long> argmin;
            for (long long i = 0; i < d.p; ++i)
                if (d.values[static_cast<std::size_t>(i)] == mn) argmin.push_back(i);
            CHECK(argmin == std::vector<long long>{1, 4 * m - 1});
            CHECK(mn == Rational(-1, 4) + Rational(1, 4 * m) - Rational(1));
        } else {
            auto d = finsurg::d_torus_closed_form(m, m);
            CHECK(d.at(0) != d.at(2 * m));
        }
    }
}
