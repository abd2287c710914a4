#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace finsurg {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers.
///
/// Always stored in lowest terms with a positive denominator; there is no
/// floating-point path anywhere in this library.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    /// Largest integer <= *this.
    Integer floor() const {
        Integer q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }

    /// Fractional part, in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        reduce();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// "num/den", or just "num" for integers.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Integer num_;
    Integer den_;
};

/// Residue class modulo a positive integer, stored reduced.
struct Residue {
    Integer value;
    Integer modulus;

    Residue(Integer v, Integer m) : value(std::move(v)), modulus(std::move(m)) {
        if (modulus <= 0) throw std::invalid_argument("Residue: modulus must be positive");
        value %= modulus;
        if (value < 0) value += modulus;
    }

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.value == b.value && a.modulus == b.modulus;
    }
};

/// Multiplicative inverse of a modulo p (extended Euclid).
inline Residue mod_inverse(const Integer& a, const Integer& p) {
    if (p <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
    Integer r0 = p, r1 = a % p;
    if (r1 < 0) r1 += p;
    Integer s0 = 0, s1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: not a unit");
    return Residue(s0, p);
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace finsurg
