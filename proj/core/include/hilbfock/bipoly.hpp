#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "hilbfock/rational.hpp"

namespace hilbfock {

/// Monomial U^du * V^dv.
struct Monomial {
    int du = 0;
    int dv = 0;

    int total() const { return du + dv; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.du == b.du && a.dv == b.dv;
    }
};

/// Graded-lexicographic order with U > V: compare total degree first,
/// then the U exponent. This order is the canonical one for leading
/// terms, serialization and equality throughout.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.du < b.du;
    }
};

/// Element of Q[U,V], stored as a sorted term map with no zero
/// coefficients. Value type; all operations return canonical results.
class BiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    BiPoly() = default;
    explicit BiPoly(const Rational& c);
    BiPoly(long c) : BiPoly(Rational(c)) {}

    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return BiPoly(Rational(1)); }
    static BiPoly var_u() { return monomial(Rational(1), 1, 0); }
    static BiPoly var_v() { return monomial(Rational(1), 0, 1); }
    static BiPoly monomial(const Rational& c, int du, int dv);
    /// The linear form a*U + b*V.
    static BiPoly linear(long a, long b);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const { return is_constant() && constant_term().is_one(); }
    /// Coefficient of U^0 V^0.
    Rational constant_term() const;
    Rational coefficient(int du, int dv) const;

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    int degree_u() const;
    int degree_v() const;

    /// Leading term under grlex with U > V. Polynomial must be nonzero.
    std::pair<Monomial, Rational> leading_term() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    BiPoly scaled(const Rational& c) const;
    BiPoly pow(int e) const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    /// Exact substitution U=u, V=v.
    Rational evaluate(const Rational& u, const Rational& v) const;

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients. Zero polynomial has content 1.
    Rational rational_content() const;

    /// *this / content, sign-adjusted so the grlex leading coefficient is
    /// positive. The canonical representative of the associate class.
    BiPoly primitive_part() const;

    /// Exact quotient; throws std::domain_error if the division has a
    /// remainder or the divisor is zero.
    BiPoly divide_exact(const BiPoly& divisor) const;
    /// Exact quotient or nothing; never throws on a failed division.
    bool try_divide(const BiPoly& divisor, BiPoly& quotient) const;

    std::string to_string() const;
    static BiPoly parse(const std::string& text);

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;

    friend BiPoly poly_gcd(const BiPoly& a, const BiPoly& b);
};

/// GCD in Q[U,V], canonical (integer-primitive, positive grlex leading
/// coefficient). Primitive PRS in U over Q[V] with content extraction.
/// Errors if both arguments are zero.
BiPoly poly_gcd(const BiPoly& a, const BiPoly& b);

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

} // namespace hilbfock
