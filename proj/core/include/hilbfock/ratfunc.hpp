#pragma once

#include <iosfwd>
#include <string>

#include "hilbfock/bipoly.hpp"
#include "hilbfock/rational.hpp"

namespace hilbfock {

/// Element of the fraction field Q(U,V) in canonical form: numerator and
/// denominator coprime, denominator integer-primitive with positive
/// leading coefficient under grlex (U > V), zero stored as 0/1. Two
/// canonical RatFunc are equal iff their parts are componentwise equal.
class RatFunc {
public:
    RatFunc() : num_(), den_(BiPoly::one()) {}
    RatFunc(long c) : num_(BiPoly(c)), den_(BiPoly::one()) {}
    RatFunc(const Rational& c) : num_(BiPoly(c)), den_(BiPoly::one()) {}
    RatFunc(const BiPoly& p) : num_(p), den_(BiPoly::one()) {}
    /// Quotient, reduced to canonical form. Throws on zero denominator.
    RatFunc(const BiPoly& num, const BiPoly& den);

    static RatFunc var_u() { return RatFunc(BiPoly::var_u()); }
    static RatFunc var_v() { return RatFunc(BiPoly::var_v()); }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when the denominator is (a nonzero constant, hence) 1.
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc inverse() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Exact substitution. Throws std::domain_error naming the point when
    /// the denominator vanishes there.
    Rational evaluate(const Rational& u, const Rational& v) const;

    /// Value at U=V=0 for polynomial elements. Throws IntegralityError
    /// ("class not integral") when the element has a true denominator.
    Rational classical_limit() const;

    std::string to_string() const;
    static RatFunc parse(const std::string& text);

private:
    struct Reduced {};
    // Already-coprime pair; only the scaling normalization is applied.
    RatFunc(Reduced, BiPoly num, BiPoly den);

    void normalize_scale();

    BiPoly num_;
    BiPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

} // namespace hilbfock
