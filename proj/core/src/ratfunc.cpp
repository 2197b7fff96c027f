#include "hilbfock/ratfunc.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "hilbfock/errors.hpp"

namespace hilbfock {

void RatFunc::normalize_scale() {
    if (num_.is_zero()) {
        den_ = BiPoly::one();
        return;
    }
    Rational c = den_.rational_content();
    if (den_.leading_term().second.sign() < 0) c = -c;
    if (c.is_one()) return;
    Rational inv = c.inverse();
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
}

RatFunc::RatFunc(Reduced, BiPoly num, BiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize_scale();
}

RatFunc::RatFunc(const BiPoly& num, const BiPoly& den) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num.is_zero()) {
        num_ = BiPoly::zero();
        den_ = BiPoly::one();
        return;
    }
    BiPoly g = poly_gcd(num, den);
    num_ = num.divide_exact(g);
    den_ = den.divide_exact(g);
    normalize_scale();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(Reduced{}, den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        BiPoly t = a.num_ + b.num_;
        if (t.is_zero()) return RatFunc();
        BiPoly h = poly_gcd(t, a.den_);
        if (h.is_one()) return RatFunc(RatFunc::Reduced{}, std::move(t), a.den_);
        return RatFunc(RatFunc::Reduced{}, t.divide_exact(h), a.den_.divide_exact(h));
    }
    BiPoly g = poly_gcd(a.den_, b.den_);
    if (g.is_constant()) {
        BiPoly t = a.num_ * b.den_ + b.num_ * a.den_;
        // coprime by construction when the denominators are
        return RatFunc(RatFunc::Reduced{}, std::move(t), a.den_ * b.den_);
    }
    BiPoly bg = b.den_.divide_exact(g);
    BiPoly ag = a.den_.divide_exact(g);
    BiPoly t = a.num_ * bg + b.num_ * ag;
    if (t.is_zero()) return RatFunc();
    // gcd(t, a.den*bg) = gcd(t, g) since the reduced parts stay coprime
    BiPoly h = poly_gcd(t, g);
    if (h.is_constant())
        return RatFunc(RatFunc::Reduced{}, std::move(t), ag * b.den_);
    return RatFunc(RatFunc::Reduced{}, t.divide_exact(h), ag * b.den_.divide_exact(h));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + (-b);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    BiPoly g1 = poly_gcd(a.num_, b.den_);
    BiPoly g2 = poly_gcd(b.num_, a.den_);
    BiPoly n = a.num_.divide_exact(g1) * b.num_.divide_exact(g2);
    BiPoly d = a.den_.divide_exact(g2) * b.den_.divide_exact(g1);
    return RatFunc(RatFunc::Reduced{}, std::move(n), std::move(d));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return a * b.inverse();
}

Rational RatFunc::evaluate(const Rational& u, const Rational& v) const {
    Rational d = den_.evaluate(u, v);
    if (d.is_zero())
        throw std::domain_error("RatFunc: denominator vanishes at (U,V) = (" +
                                u.to_string() + ", " + v.to_string() + ")");
    return num_.evaluate(u, v) / d;
}

Rational RatFunc::classical_limit() const {
    if (!is_polynomial())
        throw IntegralityError("class not integral; classical limit undefined");
    return num_.constant_term();
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    return n + "/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
    return os << f.to_string();
}

RatFunc RatFunc::parse(const std::string& text) {
    // Split at a depth-zero '/' that is followed by '(' -- a '/' followed
    // by a digit is a rational coefficient and stays inside the numerator.
    int depth = 0;
    size_t split = std::string::npos;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == '/' && depth == 0) {
            size_t j = i + 1;
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            if (j < text.size() && text[j] == '(') {
                split = i;
                break;
            }
        }
    }

    auto strip = [](std::string s) {
        size_t b = s.find_first_not_of(" \t\n\r");
        size_t e = s.find_last_not_of(" \t\n\r");
        if (b == std::string::npos) return std::string();
        return s.substr(b, e - b + 1);
    };
    auto unparen = [&](std::string s) {
        s = strip(s);
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
            int d = 0;
            bool whole = true;
            for (size_t i = 0; i + 1 < s.size(); ++i) {
                if (s[i] == '(') ++d;
                else if (s[i] == ')') --d;
                if (d == 0) { whole = false; break; }
            }
            if (whole) return strip(s.substr(1, s.size() - 2));
        }
        return s;
    };

    if (split == std::string::npos)
        return RatFunc(BiPoly::parse(unparen(text)));
    BiPoly num = BiPoly::parse(unparen(text.substr(0, split)));
    BiPoly den = BiPoly::parse(unparen(text.substr(split + 1)));
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    return RatFunc(num, den);
}

} // namespace hilbfock
