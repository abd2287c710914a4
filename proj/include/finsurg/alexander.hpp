#pragma once

#include "finsurg/rational.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace finsurg {

/// Symmetric normalized Alexander polynomial.
///
/// Only the nonnegative-degree coefficients a_0..a_g are stored; a_{-i} = a_i
/// is structural. Construction strips trailing zeros and enforces the
/// normalization Delta(1) = 1 (a sign flip is applied when Delta(1) = -1).
class SymLaurentPoly {
public:
    explicit SymLaurentPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
        while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
        if (c_.empty()) c_.push_back(0);
        long long at_one = c_[0];
        for (std::size_t i = 1; i < c_.size(); ++i) at_one += 2 * c_[i];
        if (at_one == -1) {
            for (auto& a : c_) a = -a;
        } else if (at_one != 1) {
            throw std::invalid_argument("SymLaurentPoly: Delta(1) must be +-1");
        }
    }

    static const SymLaurentPoly& one() {
        static const SymLaurentPoly p(std::vector<long long>{1});
        return p;
    }

    /// Top degree g (the genus bound); 0 for the constant polynomial.
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }

    long long coeff(long long i) const {
        long long k = i < 0 ? -i : i;
        return k < static_cast<long long>(c_.size()) ? c_[k] : 0;
    }

    const std::vector<long long>& coeffs() const { return c_; }

    long long eval_at_minus_one() const {
        long long v = c_[0];
        for (std::size_t i = 1; i < c_.size(); ++i)
            v += 2 * ((i % 2 == 0) ? c_[i] : -c_[i]);
        return v;
    }

    friend bool operator==(const SymLaurentPoly& a, const SymLaurentPoly& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const SymLaurentPoly& a, const SymLaurentPoly& b) {
        return !(a == b);
    }
    friend bool operator<(const SymLaurentPoly& a, const SymLaurentPoly& b) {
        return a.c_ < b.c_;
    }

    /// Human-readable form, e.g. "t - 1 + t^-1".
    std::string str() const {
        std::string out;
        bool first = true;
        for (long long i = degree(); i >= -degree(); --i) {
            long long a = coeff(i);
            if (a == 0) continue;
            if (first) {
                if (a < 0) out += "-";
                first = false;
            } else {
                out += a < 0 ? " - " : " + ";
            }
            long long mag = a < 0 ? -a : a;
            if (mag != 1 || i == 0) out += std::to_string(mag);
            if (i != 0) {
                if (mag != 1) out += "*";
                out += "t";
                if (i != 1) out += "^" + std::to_string(i);
            }
        }
        if (first) out = "0";
        return out;
    }

private:
    std::vector<long long> c_;  // a_0..a_g
};

/// Torsion coefficients t_i = sum_{j>=1} j*a_{i+j}; stored for 0 <= i < g,
/// implicitly zero from index g on (t_{g-1} = a_g != 0 so the stored length
/// always equals the top degree of the source polynomial).
struct TorsionSeq {
    std::vector<long long> t;

    long long genus() const { return static_cast<long long>(t.size()); }

    long long at(long long i) const {
        return i < static_cast<long long>(t.size()) && i >= 0 ? t[i] : 0;
    }

    /// Eq-style validity for L-space knots: t_i >= 0 and
    /// t_i >= t_{i+1} >= t_i - 1 (with t_g = 0 implied).
    bool lspace_valid() const {
        for (std::size_t i = 0; i < t.size(); ++i) {
            long long cur = t[i];
            long long nxt = i + 1 < t.size() ? t[i + 1] : 0;
            if (cur < 0 || nxt > cur || nxt < cur - 1) return false;
        }
        return !t.empty() ? t.back() != 0 : true;  // trailing zeros would shift g
    }

    friend bool operator==(const TorsionSeq& a, const TorsionSeq& b) { return a.t == b.t; }
};

struct ClassicalInvariants {
    long long genus;
    long long det;
    long long ddelta;  // second derivative of Delta at t = 1
};

namespace detail {

// exact division of integer polynomials (ascending coefficients)
inline std::vector<long long> poly_mul(const std::vector<long long>& a,
                                       const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline std::vector<long long> poly_div_exact(std::vector<long long> num,
                                             const std::vector<long long>& den) {
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (long long i = static_cast<long long>(q.size()) - 1; i >= 0; --i) {
        long long lead = num[i + den.size() - 1];
        long long c = lead / den.back();
        q[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (long long v : num)
        if (v != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

inline std::vector<long long> x_pow_minus_one(long long n) {
    std::vector<long long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    return p;
}

// full symmetric expansion a_{-g}..a_{g} of a half-coefficient list
inline std::vector<long long> full_expansion(const SymLaurentPoly& p) {
    long long g = p.degree();
    std::vector<long long> full(2 * g + 1);
    for (long long i = -g; i <= g; ++i) full[i + g] = p.coeff(i);
    return full;
}

}  // namespace detail

/// Alexander polynomial of the torus knot T(p,q) from the product formula
/// (t^{pq}-1)(t-1)/((t^p-1)(t^q-1)), re-centered to the symmetric normal form.
inline SymLaurentPoly torus_alexander(long long p, long long q) {
    p = std::llabs(p);
    q = std::llabs(q);
    if (p < 2 || q < 2) throw std::invalid_argument("torus_alexander: need |p|,|q| >= 2");
    if (gcd_ll(p, q) != 1) throw std::invalid_argument("torus_alexander: p,q not coprime");
    auto num = detail::poly_mul(detail::x_pow_minus_one(p * q), detail::x_pow_minus_one(1));
    auto den = detail::poly_mul(detail::x_pow_minus_one(p), detail::x_pow_minus_one(q));
    auto quot = detail::poly_div_exact(num, den);  // degree (p-1)(q-1) = 2g
    long long g = ((p - 1) * (q - 1)) / 2;
    std::vector<long long> half(quot.begin() + g, quot.end());
    return SymLaurentPoly(half);
}

/// Alexander polynomial of the (p,q)-cable with the given companion:
/// Delta(t) = Delta_{T(p,q)}(t) * Delta_C(t^q).
inline SymLaurentPoly cable_alexander(long long p, long long q, const SymLaurentPoly& companion) {
    if (gcd_ll(p, q) != 1) throw std::invalid_argument("cable_alexander: p,q not coprime");
    SymLaurentPoly pattern = torus_alexander(p, q);
    long long gp = pattern.degree();
    long long gc = companion.degree();
    long long qa = std::llabs(q);
    long long G = gp + qa * gc;
    std::vector<long long> full(2 * G + 1, 0);
    for (long long i = -gp; i <= gp; ++i) {
        long long a = pattern.coeff(i);
        if (a == 0) continue;
        for (long long j = -gc; j <= gc; ++j) full[i + qa * j + G] += a * companion.coeff(j);
    }
    std::vector<long long> half(full.begin() + G, full.end());
    return SymLaurentPoly(half);
}

inline ClassicalInvariants classical_invariants(const SymLaurentPoly& poly) {
    long long dd = 0;
    for (long long i = 1; i <= poly.degree(); ++i) dd += 2 * i * i * poly.coeff(i);
    return ClassicalInvariants{poly.degree(), std::llabs(poly.eval_at_minus_one()), dd};
}

inline TorsionSeq torsion_coefficients(const SymLaurentPoly& poly) {
    long long g = poly.degree();
    TorsionSeq ts;
    if (g == 0) return ts;
    ts.t.resize(g);
    for (long long i = 0; i < g; ++i) {
        long long v = 0;
        for (long long j = 1; i + j <= g; ++j) v += j * poly.coeff(i + j);
        ts.t[i] = v;
    }
    return ts;
}

/// Inverts the torsion-coefficient map: a_i = t_{i-1} - 2 t_i + t_{i+1} for
/// i >= 1 and a_0 = 1 - 2 sum_{i>=1} a_i. Rejects sequences that are not
/// L-space-valid.
inline SymLaurentPoly reconstruct_alexander(const TorsionSeq& t) {
    if (!t.lspace_valid())
        throw std::invalid_argument("reconstruct_alexander: not an L-space torsion sequence");
    long long g = t.genus();
    std::vector<long long> a(g + 1, 0);
    long long sum = 0;
    for (long long i = 1; i <= g; ++i) {
        a[i] = t.at(i - 1) - 2 * t.at(i) + t.at(i + 1);
        sum += a[i];
    }
    a[0] = 1 - 2 * sum;
    return SymLaurentPoly(a);
}

/// L-space knot constraint: the nonzero coefficients of the full symmetric
/// expansion alternate +-1 starting with a_g = +1, and the torsion sequence
/// is valid.
inline bool lspace_check(const SymLaurentPoly& poly) {
    auto full = detail::full_expansion(poly);
    long long prev = 0;
    bool first = true;
    for (auto it = full.rbegin(); it != full.rend(); ++it) {
        long long a = *it;
        if (a == 0) continue;
        if (a != 1 && a != -1) return false;
        if (first) {
            if (a != 1) return false;
            first = false;
        } else if (a == prev) {
            return false;
        }
        prev = a;
    }
    if (first) return false;  // zero polynomial
    return torsion_coefficients(poly).lspace_valid();
}

/// A named knot with an optional computable polynomial; knots whose
/// polynomial has no construction here (Berge, twisted torus, ...) carry
/// std::nullopt and are validated through the realizability solver instead.
struct KnotDesc {
    std::string name;
    std::optional<SymLaurentPoly> poly;
};

/// P(-2,3,7): Lehmer's polynomial.
inline const SymLaurentPoly& pretzel_237() {
    static const SymLaurentPoly p(std::vector<long long>{1, -1, 1, 0, -1, 1});
    return p;
}

/// P(-2,3,9).
inline const SymLaurentPoly& pretzel_239() {
    static const SymLaurentPoly p(std::vector<long long>{-1, 1, -1, 1, 0, -1, 1});
    return p;
}

}  // namespace finsurg
