#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hilbfock/localization.hpp"

using namespace hilbfock;

namespace {

const BiPoly U = BiPoly::var_u();
const BiPoly V = BiPoly::var_v();

std::vector<BiPoly> sorted(std::vector<BiPoly> ws) {
    std::sort(ws.begin(), ws.end(), [](const BiPoly& a, const BiPoly& b) {
        return a.to_string() < b.to_string();
    });
    return ws;
}

BiPoly swap_uv(const BiPoly& p) {
    BiPoly out;
    for (const auto& [m, c] : p.terms()) out += BiPoly::monomial(c, m.dv, m.du);
    return out;
}

} // namespace

TEST_CASE("tangent weights golden cases") {
    CHECK(sorted(tangent_weights(Partition{1})) ==
          sorted({BiPoly::linear(-1, 0), BiPoly::linear(0, -1)}));
    // weights -U, -U+V, -V, -2V at the length-2 vertical point
    CHECK(sorted(tangent_weights(Partition{2})) ==
          sorted({BiPoly::linear(-1, 0), BiPoly::linear(-1, 1), BiPoly::linear(0, -1),
                  BiPoly::linear(0, -2)}));
    CHECK(tan_product(Partition{1}) == U * V);
    CHECK(tangent_weights(Partition{3, 1}).size() == 8);
}

TEST_CASE("tangent weights transpose symmetry") {
    for (int n = 0; n <= 8; ++n) {
        for (const Partition& p : partitions_of(n)) {
            auto dual = tangent_weights(p.conjugate());
            std::vector<BiPoly> swapped;
            for (const BiPoly& w : tangent_weights(p)) swapped.push_back(swap_uv(w));
            CHECK(sorted(dual) == sorted(swapped));
            CHECK(tan_product(p).total_degree() == 2 * n);
        }
    }
}

TEST_CASE("coker and ker products") {
    auto [c1, k1] = coker_ker(Partition{1}, Cell{1, 0});
    CHECK(c1 == U.scaled(Rational(-2)));
    CHECK(k1 == -U);
    auto [c2, k2] = coker_ker(Partition{1}, Cell{0, 1});
    CHECK(c2 == V.scaled(Rational(-2)));
    CHECK(k2 == -V);
    auto [c3, k3] = coker_ker(Partition{2}, Cell{0, 2});
    CHECK(c3 == V.scaled(Rational(-3)));
    CHECK(k3 == -V);
    CHECK_THROWS_AS(coker_ker(Partition{2}, Cell{1, 1}), std::invalid_argument);

    // both products have one factor per removable cell
    for (int n = 0; n <= 6; ++n) {
        for (const Partition& p : partitions_of(n)) {
            int removable = static_cast<int>(p.removable_cells().size());
            for (const Cell& c : p.addable_cells()) {
                auto [coker, ker] = coker_ker(p, c);
                CHECK(coker.total_degree() == removable);
                CHECK(ker.total_degree() == removable);
                CHECK_FALSE(coker.is_zero());
                CHECK_FALSE(ker.is_zero());
            }
        }
    }
}

TEST_CASE("boundary eigenvalue") {
    CHECK(boundary_eigenvalue(Partition{}).is_zero());
    CHECK(boundary_eigenvalue(Partition{2}) == V.scaled(Rational(-2)));
    CHECK(boundary_eigenvalue(Partition{1, 1}) == U.scaled(Rational(-2)));
    // formula agrees with -2 e_1 up to weight 12 (the internal assertion
    // would throw on any disagreement)
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(boundary_eigenvalue(p) ==
                  chern_restriction(p, 1).scaled(Rational(-2)));
}

TEST_CASE("chern restrictions") {
    CHECK(chern_restriction(Partition{3, 1}, 0) == BiPoly::one());
    CHECK(chern_restriction(Partition{2}, 1) == V);
    CHECK(chern_restriction(Partition{3}, 2) == BiPoly::monomial(Rational(2), 0, 2));
    CHECK(chern_restriction(Partition{2}, 5).is_zero());
    CHECK_THROWS_AS(chern_restriction(Partition{2}, -1), std::invalid_argument);
}

TEST_CASE("fix pairing") {
    CHECK(fix_pairing(Partition{}) == RatFunc(1));
    CHECK(fix_pairing(Partition{1}) == RatFunc(BiPoly::one(), U * V));
    BiPoly tan2 = BiPoly::linear(-1, 0) * BiPoly::linear(0, -1) *
                  BiPoly::linear(-1, 1) * BiPoly::linear(0, -2);
    CHECK(fix_pairing(Partition{2}) == RatFunc(BiPoly::one(), tan2));
}

TEST_CASE("bott closure identity locks the sign conventions") {
    const RatFunc expected(BiPoly::one(), U * V);
    for (int n = 0; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            RatFunc total;
            RatFunc tan_l(tan_product(lambda));
            for (const Cell& c : lambda.addable_cells()) {
                auto [coker, ker] = coker_ker(lambda, c);
                RatFunc r(coker, ker);
                total += r * r * tan_l / RatFunc(tan_product(lambda.with_cell(c)));
            }
            for (const Cell& c : lambda.removable_cells()) {
                Partition nu = lambda.without_cell(c);
                auto [coker, ker] = coker_ker(nu, c);
                RatFunc r(coker, ker);
                total -= r * r * RatFunc(tan_product(nu)) / tan_l;
            }
            CHECK(total == expected);
        }
    }
}
