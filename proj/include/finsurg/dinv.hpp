#pragma once

#include "finsurg/alexander.hpp"
#include "finsurg/rational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace finsurg {

/// Correction terms of a rational homology sphere, indexed by Z/pZ in the
/// standard surgery labeling.
struct DVector {
    long long p = 1;
    std::vector<Rational> values;

    const Rational& at(long long i) const {
        i %= p;
        if (i < 0) i += p;
        return values[static_cast<std::size_t>(i)];
    }

    DVector negated() const {
        DVector r{p, values};
        for (auto& v : r.values) v = -v;
        return r;
    }

    friend bool operator==(const DVector& a, const DVector& b) {
        return a.p == b.p && a.values == b.values;
    }
};

/// A Dehn filling of the right-hand trefoil exterior: Y = sign * T(a/b).
struct FillingDesc {
    int sign = +1;  // +1 or -1
    long long a = 1;
    long long b = 1;
};

namespace detail {

// one level of the lens recursion: d(L(p,q),i) for 0 <= i < p, with q
// already reduced into [0,p)
inline std::shared_ptr<const std::vector<Rational>> d_lens_vec(long long p, long long q);

inline std::shared_ptr<const std::vector<Rational>> d_lens_vec_uncached(long long p, long long q) {
    auto out = std::make_shared<std::vector<Rational>>();
    out->reserve(p);
    if (p == 1) {
        out->push_back(Rational(0));
        return out;
    }
    long long r = p % q;
    auto sub = d_lens_vec(q, r);  // d(L(q, p mod q), .)
    Rational quarter(-1, 4);
    for (long long i = 0; i < p; ++i) {
        Integer num = 2 * i + 1 - p - q;
        out->push_back(quarter + Rational(num * num, Integer(4) * p * q) -
                       (*sub)[static_cast<std::size_t>(i % q)]);
    }
    return out;
}

inline std::shared_ptr<const std::vector<Rational>> d_lens_vec(long long p, long long q) {
    static std::map<std::pair<long long, long long>, std::shared_ptr<const std::vector<Rational>>>
        cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({p, q});
        if (it != cache.end()) return it->second;
    }
    auto vec = d_lens_vec_uncached(p, q);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::make_pair(p, q), std::move(vec)).first->second;
}

}  // namespace detail

/// Correction terms of the lens space L(p,q) via the recursion
/// d(L(p,q),i) = -1/4 + (2i+1-p-q)^2/(4pq) - d(L(q, p mod q), i mod q),
/// with d(S^3,0) = 0. Memoized on (p,q).
inline DVector d_lens(long long p, long long q) {
    if (p <= 0) throw std::invalid_argument("d_lens: p must be positive");
    q %= p;
    if (q < 0) q += p;
    if (p > 1 && gcd_ll(p, q) != 1) throw std::invalid_argument("d_lens: p,q not coprime");
    if (p > 1 && q == 0) throw std::invalid_argument("d_lens: p,q not coprime");
    auto vec = detail::d_lens_vec(p, p == 1 ? 0 : q);
    return DVector{p, *vec};
}

/// The index into the torsion sequence used by the surgery formula.
inline long long surgery_t_index(long long i, long long p, long long q) {
    long long k1 = i / q;
    long long k2 = (p + q - i - 1) / q;
    return k1 < k2 ? k1 : k2;
}

/// True when the slope satisfies the L-space bound p/q >= 2g - 1.
inline bool genus_slope_ok(long long genus, long long p, long long q) {
    return p >= q * (2 * genus - 1);
}

/// Correction terms of S^3_K(p/q) for an L-space knot with torsion
/// coefficients t: d(i) = d(L(p,q),i) - 2 t_{min{floor(i/q), floor((p+q-i-1)/q)}}.
inline DVector d_surgery(const TorsionSeq& t, long long p, long long q) {
    if (p <= 0 || q <= 0) throw std::invalid_argument("d_surgery: need p,q positive");
    if (gcd_ll(p, q) != 1) throw std::invalid_argument("d_surgery: p,q not coprime");
    DVector d = d_lens(p, q);
    for (long long i = 0; i < p; ++i)
        d.values[static_cast<std::size_t>(i)] -= Rational(2 * t.at(surgery_t_index(i, p, q)));
    return d;
}

/// Torsion coefficients of T(2m+1,2): t_i = ceil((m-i)/2) for i < m.
inline TorsionSeq torus2_torsion(long long m) {
    TorsionSeq t;
    t.t.resize(m);
    for (long long i = 0; i < m; ++i) t.t[static_cast<std::size_t>(i)] = (m - i + 1) / 2;
    return t;
}

/// d-vector of the trefoil filling T(a/b) (or its mirror for sign -).
/// Orientation reversal negates pointwise; index relabeling is left to the
/// affine-isomorphism search downstream.
inline DVector d_filling(const FillingDesc& desc) {
    if (desc.a < 1) throw std::invalid_argument("d_filling: a must be positive");
    if (gcd_ll(desc.a, desc.b) != 1) throw std::invalid_argument("d_filling: a,b not coprime");
    DVector d = d_surgery(torus2_torsion(1), desc.a, desc.b);
    return desc.sign >= 0 ? d : d.negated();
}

/// Closed form for d(S^3_{T(2m+1,2)}(4n), i), valid for n in {m, m+1}:
///   -1/4 + i^2/(4n) + zeta - theta(n - zeta - i)   for 0 <= i < n,
///   -1/4 + (2n-i)^2/(4n)                           for n <= i <= 2n,
///   d(4n - i)                                      for 2n < i < 4n,
/// where zeta = n - m and theta(k) is the mod-2 reduction.
inline DVector d_torus_closed_form(long long m, long long n) {
    if (m < 1) throw std::invalid_argument("d_torus_closed_form: m must be positive");
    if (n != m && n != m + 1)
        throw std::invalid_argument("closed form only valid for n=m or m+1");
    long long zeta = n - m;
    long long p = 4 * n;
    DVector d;
    d.p = p;
    d.values.resize(static_cast<std::size_t>(p));
    for (long long i = 0; i <= 2 * n; ++i) {
        Rational v;
        if (i < n) {
            long long k = n - zeta - i;
            long long theta = ((k % 2) + 2) % 2;
            v = Rational(-1, 4) + Rational(i * i, 4 * n) + Rational(zeta - theta);
        } else {
            v = Rational(-1, 4) + Rational((2 * n - i) * (2 * n - i), 4 * n);
        }
        d.values[static_cast<std::size_t>(i)] = v;
        if (i > 0 && i < 2 * n) d.values[static_cast<std::size_t>(p - i)] = v;
    }
    return d;
}

/// All sigma in [0,p) with d[i] = d[(sigma - i) mod p] for every i; any
/// genuine d-vector has at least one.
inline std::vector<long long> conjugation_involutions(const DVector& d) {
    std::vector<long long> out;
    for (long long s = 0; s < d.p; ++s) {
        bool ok = true;
        for (long long i = 0; i < d.p; ++i) {
            long long j = s - i;
            j %= d.p;
            if (j < 0) j += d.p;
            if (d.values[static_cast<std::size_t>(i)] != d.values[static_cast<std::size_t>(j)]) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(s);
    }
    return out;
}

}  // namespace finsurg
