#pragma once

#include "finsurg/dedekind.hpp"
#include "finsurg/rational.hpp"

#include <stdexcept>

namespace finsurg {

/// Prism manifold P(n,m), the Seifert fibered space (-1;(2,1),(2,1),(n,m));
/// |H_1| = |4m| and P(n,-m) = -P(n,m).
struct PrismDesc {
    long long n;
    long long m;

    PrismDesc(long long n_, long long m_) : n(n_), m(m_) {
        if (n <= 1) throw std::invalid_argument("PrismDesc: need n > 1");
        if (m == 0) throw std::invalid_argument("PrismDesc: need m != 0");
        if (gcd_ll(n, m) != 1) throw std::invalid_argument("PrismDesc: n,m not coprime");
    }

    long long h1_order() const { return m < 0 ? -4 * m : 4 * m; }
};

/// Casson-Walker invariant of p/q-surgery on a knot with Delta''(1) = ddelta:
/// lambda(S^3_K(p/q)) = -s(q,p) + (q/p) * ddelta, extended to p < 0 by
/// lambda(-Y) = -lambda(Y).
inline Rational lambda_surgery(long long ddelta, long long p, long long q) {
    if (p == 0) throw std::invalid_argument("lambda_surgery: p must be nonzero");
    if (q <= 0) throw std::invalid_argument("lambda_surgery: q must be positive");
    if (gcd_ll(p, q) != 1) throw std::invalid_argument("lambda_surgery: p,q not coprime");
    if (p < 0) return -lambda_surgery(ddelta, -p, q);
    return -dedekind_sum(q, p) + Rational(q, p) * Rational(ddelta);
}

/// lambda(-P(n,m)); for m > 0 this is the closed form
///   -(1/12) * ( -(n/m)(1/n^2 - 1/2) - m/n + 3 + 12 s(m,n) ),
/// and m < 0 is reached through P(n,-m) = -P(n,m) and lambda(-Y) = -lambda(Y).
inline Rational lambda_prism(const PrismDesc& prism) {
    if (prism.m < 0) return -lambda_prism(PrismDesc(prism.n, -prism.m));
    long long n = prism.n, m = prism.m;
    Rational inner = -Rational(n, m) * (Rational(1, n * n) - Rational(1, 2)) - Rational(m, n) +
                     Rational(3) + Rational(12) * dedekind_sum(m, n);
    return -inner / Rational(12);
}

/// D-type test: |lambda(S^3_K(4m))| == |lambda(-P(n,m))|, compared exactly.
inline bool lambda_match(long long ddelta, long long m, long long n) {
    if (m == 0) throw std::invalid_argument("lambda_match: m must be nonzero");
    return lambda_surgery(ddelta, 4 * m, 1).abs() == lambda_prism(PrismDesc(n, m)).abs();
}

}  // namespace finsurg
