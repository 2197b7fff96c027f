#include "hilbfock/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hilbfock/errors.hpp"

namespace hilbfock {

BiPoly::BiPoly(const Rational& c) {
    if (!c.is_zero()) terms_[{0, 0}] = c;
}

BiPoly BiPoly::monomial(const Rational& c, int du, int dv) {
    if (du < 0 || dv < 0) throw std::domain_error("BiPoly: negative exponent");
    BiPoly p;
    if (!c.is_zero()) p.terms_[{du, dv}] = c;
    return p;
}

BiPoly BiPoly::linear(long a, long b) {
    BiPoly p;
    if (a != 0) p.terms_[{1, 0}] = Rational(a);
    if (b != 0) p.terms_[{0, 1}] = Rational(b);
    return p;
}

bool BiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0};
}

Rational BiPoly::constant_term() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational BiPoly::coefficient(int du, int dv) const {
    auto it = terms_.find({du, dv});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total();
}

int BiPoly::degree_u() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.du);
    return d;
}

int BiPoly::degree_v() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dv);
    return d;
}

std::pair<Monomial, Rational> BiPoly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("BiPoly: leading term of zero");
    return *terms_.rbegin();
}

void BiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            r.add_term({ma.du + mb.du, ma.dv + mb.dv}, ca * cb);
    return r;
}

BiPoly BiPoly::scaled(const Rational& c) const {
    BiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, coef] : terms_) r.terms_[m] = coef * c;
    return r;
}

BiPoly BiPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("BiPoly: negative power");
    BiPoly r = one();
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

Rational BiPoly::evaluate(const Rational& u, const Rational& v) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < m.du; ++i) t *= u;
        for (int i = 0; i < m.dv; ++i) t *= v;
        acc += t;
    }
    return acc;
}

Rational BiPoly::rational_content() const {
    Rational g(0);
    for (const auto& [m, c] : terms_) g = Rational::content_gcd(g, c);
    return g.is_zero() ? Rational(1) : g;
}

BiPoly BiPoly::primitive_part() const {
    if (is_zero()) return *this;
    Rational c = rational_content();
    if (leading_term().second.sign() < 0) c = -c;
    return scaled(c.inverse());
}

bool BiPoly::try_divide(const BiPoly& divisor, BiPoly& quotient) const {
    if (divisor.is_zero()) throw std::domain_error("BiPoly: division by zero");
    BiPoly q, r = *this;
    const auto [dm, dc] = divisor.leading_term();
    while (!r.is_zero()) {
        const auto [rm, rc] = r.leading_term();
        if (rm.du < dm.du || rm.dv < dm.dv) return false;
        Monomial m{rm.du - dm.du, rm.dv - dm.dv};
        Rational c = rc / dc;
        q.add_term(m, c);
        r -= divisor * monomial(c, m.du, m.dv);
    }
    quotient = std::move(q);
    return true;
}

BiPoly BiPoly::divide_exact(const BiPoly& divisor) const {
    BiPoly q;
    if (!try_divide(divisor, q))
        throw std::domain_error("BiPoly: inexact division");
    return q;
}

// --- gcd via primitive PRS, univariate in U over Q[V] ---------------------

namespace {

// Dense univariate polynomial in V, ascending degree, no trailing zeros.
using VPoly = std::vector<Rational>;

void vtrim(VPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int vdeg(const VPoly& p) { return static_cast<int>(p.size()) - 1; }

VPoly vscale(const VPoly& p, const Rational& c) {
    VPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] * c;
    vtrim(r);
    return r;
}

VPoly vsub(const VPoly& a, const VPoly& b) {
    VPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    vtrim(r);
    return r;
}

VPoly vmul(const VPoly& a, const VPoly& b) {
    if (a.empty() || b.empty()) return {};
    VPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    vtrim(r);
    return r;
}

// Remainder of Euclidean division over Q.
VPoly vrem(VPoly a, const VPoly& b) {
    while (vdeg(a) >= vdeg(b)) {
        int shift = vdeg(a) - vdeg(b);
        Rational c = a.back() / b.back();
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        vtrim(a);
        if (a.empty()) break;
    }
    return a;
}

// Exact quotient; the call sites only divide by known divisors.
VPoly vdiv_exact(VPoly a, const VPoly& b) {
    if (b.empty()) throw std::domain_error("BiPoly: zero content division");
    size_t qsize = (!a.empty() && a.size() >= b.size()) ? a.size() - b.size() + 1 : 0;
    VPoly q(qsize, Rational(0));
    while (!a.empty() && vdeg(a) >= vdeg(b)) {
        int shift = vdeg(a) - vdeg(b);
        Rational c = a.back() / b.back();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        vtrim(a);
    }
    if (!a.empty()) throw std::logic_error("BiPoly: inexact content division");
    vtrim(q);
    return q;
}

// Canonical form: integer-primitive coefficients with positive leading one.
VPoly vcanonical(const VPoly& p) {
    if (p.empty()) return p;
    Rational g(0);
    for (const auto& c : p) g = Rational::content_gcd(g, c);
    if (p.back().sign() < 0) g = -g;
    return vscale(p, g.inverse());
}

VPoly vgcd(VPoly a, VPoly b) {
    vtrim(a);
    vtrim(b);
    if (a.empty()) return vcanonical(b);
    if (b.empty()) return vcanonical(a);
    if (vdeg(a) < vdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        VPoly r = vrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return vcanonical(a);
}

// View of a bivariate polynomial as sum over U-degrees of V-coefficients.
using UPoly = std::vector<VPoly>; // index = U exponent, no trailing empties

void utrim(UPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly to_upoly(const BiPoly& p) {
    UPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (static_cast<int>(r.size()) <= m.du) r.resize(m.du + 1);
        VPoly& v = r[m.du];
        if (static_cast<int>(v.size()) <= m.dv) v.resize(m.dv + 1, Rational(0));
        v[m.dv] = c;
    }
    for (auto& v : r) vtrim(v);
    utrim(r);
    return r;
}

BiPoly from_upoly(const UPoly& p) {
    BiPoly r;
    for (size_t du = 0; du < p.size(); ++du)
        for (size_t dv = 0; dv < p[du].size(); ++dv)
            r += BiPoly::monomial(p[du][dv], static_cast<int>(du), static_cast<int>(dv));
    return r;
}

VPoly ucontent(const UPoly& p) {
    VPoly g;
    for (const auto& v : p) g = vgcd(g, v);
    return g;
}

UPoly uprimitive(const UPoly& p, const VPoly& content) {
    UPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        r[i] = p[i].empty() ? VPoly{} : vdiv_exact(p[i], content);
    utrim(r);
    return r;
}

// Pseudo-remainder of a by b in (Q[V])[U]; the content factor that the
// leading-coefficient multiplications introduce is stripped right after by
// the primitive-part step, so no power bookkeeping is needed.
UPoly upseudo_rem(UPoly a, const UPoly& b) {
    const VPoly& lb = b.back();
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int shift = static_cast<int>(a.size()) - 1 - db;
        VPoly la = a.back();
        UPoly scaled(a.size());
        for (size_t i = 0; i < a.size(); ++i) scaled[i] = vmul(a[i], lb);
        for (int i = 0; i <= db; ++i)
            scaled[i + shift] = vsub(scaled[i + shift], vmul(la, b[i]));
        a = std::move(scaled);
        utrim(a);
    }
    return a;
}

} // namespace

BiPoly poly_gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("poly_gcd: gcd undefined for two zero polynomials");
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();

    UPoly ua = to_upoly(a);
    UPoly ub = to_upoly(b);
    VPoly ca = ucontent(ua);
    VPoly cb = ucontent(ub);
    UPoly pa = uprimitive(ua, ca);
    UPoly pb = uprimitive(ub, cb);
    VPoly cg = vgcd(ca, cb);

    if (pa.size() < pb.size()) std::swap(pa, pb);
    while (!pb.empty()) {
        UPoly r = upseudo_rem(pa, pb);
        pa = std::move(pb);
        if (r.empty()) {
            pb.clear();
        } else {
            pb = uprimitive(r, ucontent(r));
        }
    }

    UPoly g(pa.size());
    for (size_t i = 0; i < pa.size(); ++i) g[i] = vmul(pa[i], cg);
    return from_upoly(g).primitive_part();
}

// --- text form -------------------------------------------------------------

namespace {

void append_abs_coef(std::ostream& os, const Rational& c, bool lone) {
    Rational a = c.abs();
    if (lone) {
        os << a.to_string();
        return;
    }
    if (!a.is_one()) os << a.to_string() << "*";
}

void append_monomial(std::ostream& os, const Monomial& m) {
    if (m.du > 0) {
        os << "U";
        if (m.du > 1) os << "^" << m.du;
        if (m.dv > 0) os << "*";
    }
    if (m.dv > 0) {
        os << "V";
        if (m.dv > 1) os << "^" << m.dv;
    }
}

} // namespace

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        append_abs_coef(os, c, m == Monomial{0, 0});
        append_monomial(os, m);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) {
    return os << p.to_string();
}

// Grammar: poly := [sign] term (('+'|'-') term)*
//          term := coef ('*' varpow)* | varpow ('*' varpow)*
//          coef := digits ['/' digits],  varpow := ('U'|'V') ['^' digits]
namespace {

struct PolyParser {
    const std::string& s;
    size_t i = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eof() {
        skip_ws();
        return i >= s.size();
    }

    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("BiPoly: " + msg + " at position " + std::to_string(i) +
                         " in '" + s + "'");
    }

    std::string digits() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        return s.substr(start, i - start);
    }

    Rational coef() {
        std::string n = digits();
        skip_ws();
        if (i < s.size() && s[i] == '/' && i + 1 < s.size() &&
            std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            ++i;
            std::string d = digits();
            return Rational::parse(n + "/" + d);
        }
        return Rational::parse(n);
    }

    void varpow(int& du, int& dv) {
        skip_ws();
        char v = s[i];
        ++i;
        int e = 1;
        skip_ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            e = std::stoi(digits());
        }
        if (v == 'U')
            du += e;
        else
            dv += e;
    }

    BiPoly term() {
        Rational c(1);
        int du = 0, dv = 0;
        bool saw_factor = false;
        char ch = peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            c = coef();
            saw_factor = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
            } else {
                return BiPoly::monomial(c, 0, 0);
            }
        }
        while (true) {
            char v = peek();
            if (v != 'U' && v != 'V') {
                if (!saw_factor) fail("expected term");
                fail("expected variable");
            }
            varpow(du, dv);
            saw_factor = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        return BiPoly::monomial(c, du, dv);
    }

    BiPoly poly() {
        BiPoly acc;
        int sign = 1;
        char ch = peek();
        if (ch == '+' || ch == '-') {
            sign = (ch == '-') ? -1 : 1;
            ++i;
        }
        while (true) {
            BiPoly t = term();
            acc += (sign < 0) ? -t : t;
            skip_ws();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                sign = (s[i] == '-') ? -1 : 1;
                ++i;
                continue;
            }
            break;
        }
        return acc;
    }
};

} // namespace

BiPoly BiPoly::parse(const std::string& text) {
    PolyParser p(text);
    if (p.eof()) throw ParseError("BiPoly: empty input");
    BiPoly r = p.poly();
    if (!p.eof()) p.fail("trailing input");
    return r;
}

} // namespace hilbfock
