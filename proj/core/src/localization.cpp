#include "hilbfock/localization.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hilbfock {

int arm(const Partition& lambda, const Cell& e) {
    if (!lambda.contains_cell(e))
        throw std::invalid_argument("arm: cell not in diagram");
    int i = 0;
    while (lambda.contains_cell({e.a + i + 1, e.b})) ++i;
    return i;
}

int leg(const Partition& lambda, const Cell& e) {
    if (!lambda.contains_cell(e))
        throw std::invalid_argument("leg: cell not in diagram");
    int j = 0;
    while (lambda.contains_cell({e.a, e.b + j + 1})) ++j;
    return j;
}

std::vector<BiPoly> tangent_weights(const Partition& lambda) {
    std::vector<BiPoly> out;
    out.reserve(2 * lambda.weight());
    for (const Cell& e : lambda.cells()) {
        int a = arm(lambda, e);
        int b = leg(lambda, e);
        out.push_back(BiPoly::linear(a, -(b + 1)));
        out.push_back(BiPoly::linear(-(a + 1), b));
    }
    return out;
}

const BiPoly& tan_product(const Partition& lambda) {
    static std::mutex mutex;
    static std::map<Partition, BiPoly> memo;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(lambda);
    if (it != memo.end()) return it->second;
    BiPoly p = BiPoly::one();
    for (const BiPoly& w : tangent_weights(lambda)) p *= w;
    return memo.emplace(lambda, std::move(p)).first->second;
}

std::pair<BiPoly, BiPoly> coker_ker(const Partition& lambda, const Cell& c) {
    const auto addable = lambda.addable_cells();
    bool ok = false;
    for (const Cell& x : addable)
        if (x == c) ok = true;
    if (!ok)
        throw std::invalid_argument("coker_ker: cell " + c.to_string() +
                                    " is not addable to " + lambda.to_string());

    const BiPoly wc = c.weight();
    BiPoly coker = BiPoly::one();
    for (const Cell& other : addable) {
        if (other == c) continue;
        coker *= other.weight() - wc - BiPoly::var_u() - BiPoly::var_v();
    }
    BiPoly ker = BiPoly::one();
    for (const Cell& f : lambda.removable_cells()) ker *= f.weight() - wc;
    return {coker, ker};
}

BiPoly boundary_eigenvalue(const Partition& lambda) {
    const Partition dual = lambda.conjugate();
    long cu = 0, cv = 0;
    for (int d : dual.parts()) cu += static_cast<long>(d) * (d - 1);
    for (int p : lambda.parts()) cv += static_cast<long>(p) * (p - 1);
    BiPoly result = BiPoly::monomial(Rational(-cu), 1, 0) +
                    BiPoly::monomial(Rational(-cv), 0, 1);

    BiPoly twice_e1;
    for (const Cell& c : lambda.cells()) twice_e1 += c.weight();
    twice_e1 = twice_e1.scaled(Rational(-2));
    if (result != twice_e1)
        throw std::logic_error("boundary_eigenvalue: formula disagrees with -2 e_1 at " +
                               lambda.to_string());
    return result;
}

BiPoly chern_restriction(const Partition& lambda, int k) {
    if (k < 0) throw std::invalid_argument("chern_restriction: negative index");
    if (k > lambda.weight()) return BiPoly::zero();
    // e_k of the cell weights by the product expansion prod (1 + w t).
    std::vector<BiPoly> e(k + 1);
    e[0] = BiPoly::one();
    for (const Cell& c : lambda.cells()) {
        const BiPoly w = c.weight();
        for (int j = k; j >= 1; --j) e[j] += e[j - 1] * w;
    }
    return e[k];
}

RatFunc fix_pairing(const Partition& lambda) {
    return RatFunc(BiPoly::one(), tan_product(lambda));
}

} // namespace hilbfock
