#pragma once

#include "finsurg/rational.hpp"

namespace finsurg {

/// The sawtooth function ((x)): {x} - 1/2 off the integers, 0 on them.
inline Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return x.frac() - Rational(1, 2);
}

/// Dedekind sum s(q,p) = sum_{i=1}^{p-1} ((i/p))((iq/p)), gcd(p,q)=1, p >= 1.
///
/// Evaluated by the reciprocity descent
///   s(q,p) = -1/4 + (p/q + q/p + 1/(pq))/12 - s(p mod q, q),
/// which runs in O(log p) like the Euclidean algorithm. The defining O(p)
/// sum is kept in the test suite as an independent oracle.
inline Rational dedekind_sum(Integer q, Integer p) {
    if (p <= 0) throw std::invalid_argument("dedekind_sum: p must be positive");
    q %= p;
    if (q < 0) q += p;
    if (boost::multiprecision::gcd(q == 0 ? p : q, p) != 1)
        throw std::invalid_argument("dedekind_sum: not coprime");

    Rational s(0);
    int sign = 1;
    // invariant: result = s + sign * s(q,p), with 0 <= q < p
    while (q != 0) {
        Rational recip = Rational(-1, 4) +
                         (Rational(p, q) + Rational(q, p) + Rational(1, p * q)) / Rational(12);
        if (sign > 0)
            s += recip;
        else
            s -= recip;
        Integer r = p % q;
        p = q;
        q = r;
        sign = -sign;
    }
    return s;  // s(0,1) = 0 terminates the descent
}

}  // namespace finsurg
