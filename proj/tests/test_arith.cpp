#include <finsurg/dedekind.hpp>
#include <finsurg/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

using finsurg::Integer;
using finsurg::Rational;

namespace {

// the defining O(p) sum, kept as an independent oracle for the
// reciprocity-descent implementation
Rational naive_dedekind(long long q, long long p) {
    Rational s(0);
    for (long long i = 1; i < p; ++i)
        s += finsurg::sawtooth(Rational(i, p)) * finsurg::sawtooth(Rational(i * q, p));
    return s;
}

}  // namespace

TEST_CASE("Rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(7).is_integer());
    CHECK(Rational(0, 5).num() == 0);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-1, 4).frac() == Rational(3, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5, 3).abs() == Rational(5, 3));
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-3).str() == "-3");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("sawtooth") {
    CHECK(finsurg::sawtooth(Rational(1, 3)) == Rational(-1, 6));
    CHECK(finsurg::sawtooth(Rational(7)) == Rational(0));
    CHECK(finsurg::sawtooth(Rational(-1, 4)) == Rational(1, 4));
    for (long long d = 2; d <= 12; ++d)
        for (long long n = -25; n <= 25; ++n) {
            Rational x(n, d);
            if (x.is_integer()) continue;
            CHECK(finsurg::sawtooth(-x) == -finsurg::sawtooth(x));
        }
}

TEST_CASE("dedekind_sum examples") {
    CHECK(finsurg::dedekind_sum(5, 1) == Rational(0));
    CHECK(finsurg::dedekind_sum(1, 4) == Rational(1, 8));
    CHECK(finsurg::dedekind_sum(1, 5) == Rational(1, 5));
    CHECK(finsurg::dedekind_sum(2, 3) == Rational(-1, 18));
    CHECK_THROWS_WITH(finsurg::dedekind_sum(2, 4), Catch::Matchers::ContainsSubstring("coprime"));
    CHECK_THROWS_AS(finsurg::dedekind_sum(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(finsurg::dedekind_sum(1, -3), std::invalid_argument);
    // periodicity in q
    CHECK(finsurg::dedekind_sum(12, 7) == finsurg::dedekind_sum(5, 7));
    CHECK(finsurg::dedekind_sum(-2, 7) == finsurg::dedekind_sum(5, 7));
}

TEST_CASE("dedekind_sum against the defining sum") {
    CHECK(finsurg::dedekind_sum(0, 1) == Rational(0));
    for (long long p = 2; p <= 60; ++p)
        for (long long q = 1; q < p; ++q) {
            if (finsurg::gcd_ll(p, q) != 1) continue;
            INFO("p=" << p << " q=" << q);
            CHECK(finsurg::dedekind_sum(q, p) == naive_dedekind(q, p));
        }
}

TEST_CASE("dedekind closed forms and reciprocity") {
    for (long long m = 1; m <= 100; ++m) {
        CHECK(finsurg::dedekind_sum(1, 4 * m) == Rational(8 * m * m - 6 * m + 1, 24 * m));
        CHECK(finsurg::dedekind_sum(m, 4 * m + 1) == Rational(4 * m - m * m, 12 * m + 3));
    }
    for (long long p = 1; p <= 80; ++p)
        for (long long q = 1; q <= 80; ++q) {
            if (finsurg::gcd_ll(p, q) != 1) continue;
            Rational lhs = finsurg::dedekind_sum(q, p) + finsurg::dedekind_sum(p, q);
            Rational rhs = Rational(-1, 4) +
                           (Rational(p, q) + Rational(q, p) + Rational(1, p * q)) / Rational(12);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("mod_inverse") {
    CHECK(finsurg::mod_inverse(1, 7).value == 1);
    CHECK(finsurg::mod_inverse(2, 5).value == 3);
    CHECK(finsurg::mod_inverse(16, 39).value == 22);
    CHECK_THROWS_WITH(finsurg::mod_inverse(6, 39), Catch::Matchers::ContainsSubstring("not a unit"));
    // brute-force oracle
    for (long long p = 2; p <= 50; ++p)
        for (long long a = 1; a < p; ++a) {
            if (finsurg::gcd_ll(a, p) != 1) continue;
            Integer r = finsurg::mod_inverse(a, p).value;
            CHECK((a * r) % p == 1);
        }
}

TEST_CASE("Residue reduction") {
    CHECK(finsurg::Residue(-3, 5).value == 2);
    CHECK(finsurg::Residue(12, 5).value == 2);
    CHECK_THROWS_AS(finsurg::Residue(1, 0), std::invalid_argument);
}
