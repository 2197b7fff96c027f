#include "hilbfock/classes.hpp"

#include <stdexcept>

#include "hilbfock/errors.hpp"

namespace hilbfock {

namespace {

void assert_polynomial(const FockClass& x, const std::string& what) {
    for (const auto& [lambda, c] : x.coords())
        if (!c.is_polynomial())
            throw std::logic_error(what + ": non-polynomial coordinate at fix" +
                                   lambda.to_string() + ": " + c.to_string());
}

} // namespace

FockClass nak_class(const Partition& lambda, Truncation t) {
    FockClass x = apply(q_product(lambda), FockClass::vacuum(), t);
    assert_polynomial(x, "nak" + lambda.to_string());
    return x;
}

FockClass es_class(const Partition& lambda, Truncation t) {
    FockClass x = apply(qx_product(lambda), FockClass::vacuum(), t);
    x = x.scaled(RatFunc(u_constant(lambda).inverse()));
    assert_polynomial(x, "es" + lambda.to_string());
    return x;
}

NakEs nak_es_classes(const Partition& lambda, Truncation t) {
    return {nak_class(lambda, t), es_class(lambda, t)};
}

Basis parse_basis(const std::string& name) {
    if (name == "fix") return Basis::fix;
    if (name == "nak") return Basis::nak;
    if (name == "es") return Basis::es;
    throw ParseError("unknown basis '" + name + "' (expected fix, nak or es)");
}

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::fix: return "fix";
        case Basis::nak: return "nak";
        case Basis::es: return "es";
    }
    return "?";
}

namespace {

// Columns = fix coordinates of the basis elements of weight n.
Mat to_fix_matrix(int n, Basis b) {
    const auto& all = partitions_of(n);
    const int p = static_cast<int>(all.size());
    Mat m(p, p);
    if (b == Basis::fix) return Mat::identity(p);
    Truncation t{n};
    for (int j = 0; j < p; ++j) {
        FockClass x = (b == Basis::nak) ? nak_class(all[j], t) : es_class(all[j], t);
        for (const auto& [lambda, c] : x.coords()) m.at(partition_index(lambda), j) = c;
    }
    return m;
}

} // namespace

Mat basis_matrix(int n, Basis from, Basis to) {
    if (n < 0) throw std::invalid_argument("basis_matrix: negative weight");
    Mat src = to_fix_matrix(n, from);
    if (to == Basis::fix) return src;
    Mat tgt = to_fix_matrix(n, to);
    return solve_linear(tgt, src);
}

std::vector<std::vector<Rational>> classical_projection(const Mat& m) {
    std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const RatFunc& e = m.at(i, j);
            if (!e.is_polynomial())
                throw IntegralityError("basis coordinates not integral");
            out[i][j] = e.classical_limit();
        }
    return out;
}

} // namespace hilbfock
