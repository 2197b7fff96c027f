#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hilbfock/errors.hpp"
#include "hilbfock/partition.hpp"
#include "hilbfock/tableau.hpp"

using namespace hilbfock;

TEST_CASE("partition validation and accessors") {
    Partition p{3, 1};
    CHECK(p.weight() == 4);
    CHECK(p.length() == 2);
    CHECK(p.part(1) == 3);
    CHECK(p.part(3) == 0);
    CHECK(Partition{}.weight() == 0);
    CHECK_THROWS_AS(Partition{1, 2}, std::invalid_argument);
    CHECK_THROWS_AS(Partition{0}, std::invalid_argument);
}

TEST_CASE("cells and weights lock the staircase convention") {
    CHECK(cells_and_weight(Partition{1}) ==
          std::vector<std::pair<Cell, BiPoly>>{{{0, 0}, BiPoly::zero()}});
    // parts extend along b/V; rows stack along a/U
    auto two = cells_and_weight(Partition{2});
    REQUIRE(two.size() == 2);
    CHECK(two[0] == std::pair<Cell, BiPoly>{{0, 0}, BiPoly::zero()});
    CHECK(two[1] == std::pair<Cell, BiPoly>{{0, 1}, BiPoly::var_v()});
    auto oneone = cells_and_weight(Partition{1, 1});
    REQUIRE(oneone.size() == 2);
    CHECK(oneone[1] == std::pair<Cell, BiPoly>{{1, 0}, BiPoly::var_u()});
}

TEST_CASE("conjugate") {
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    for (int n = 0; n <= 8; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("border cells") {
    auto check_border = [](const Partition& p, std::vector<Cell> add,
                           std::vector<Cell> rem) {
        CHECK(p.addable_cells() == add);
        CHECK(p.removable_cells() == rem);
    };
    check_border(Partition{}, {{0, 0}}, {});
    check_border(Partition{1}, {{0, 1}, {1, 0}}, {{0, 0}});
    check_border(Partition{2, 1}, {{0, 2}, {1, 1}, {2, 0}}, {{0, 1}, {1, 0}});

    // brute-force oracle over all candidate cells
    for (int n = 0; n <= 8; ++n) {
        for (const Partition& p : partitions_of(n)) {
            std::vector<Cell> add, rem;
            for (int a = 0; a <= p.length(); ++a) {
                for (int b = 0; b <= (n > 0 ? p.part(1) : 0); ++b) {
                    Cell c{a, b};
                    if (!p.contains_cell(c)) {
                        bool ok = true;
                        try {
                            p.with_cell(c);
                        } catch (const std::invalid_argument&) {
                            ok = false;
                        }
                        if (ok) add.push_back(c);
                    } else {
                        bool ok = true;
                        try {
                            p.without_cell(c);
                        } catch (const std::invalid_argument&) {
                            ok = false;
                        }
                        if (ok) rem.push_back(c);
                    }
                }
            }
            CHECK(p.addable_cells() == add);
            CHECK(p.removable_cells() == rem);
            CHECK(p.addable_cells().size() == p.removable_cells().size() + 1);
        }
    }
}

TEST_CASE("partitions_of enumeration and order") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);
    // the order pinned by the golden base-change matrices
    CHECK(partitions_of(2) == std::vector<Partition>{Partition{1, 1}, Partition{2}});
    CHECK(partitions_of(4) ==
          std::vector<Partition>{Partition{1, 1, 1, 1}, Partition{2, 1, 1},
                                 Partition{2, 2}, Partition{3, 1}, Partition{4}});
    CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);

    // counts against the Euler recurrence as an independent oracle
    std::vector<long> p(13, 0);
    p[0] = 1;
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            for (const Partition& q : partitions_of(n - k))
                if (q.empty() || q.part(1) <= k) ++p[n];
    for (int n = 0; n <= 12; ++n) CHECK(partition_count(n) == p[n]);
}

TEST_CASE("partition text form") {
    CHECK(Partition{3, 1}.to_string() == "[3,1]");
    CHECK(Partition{}.to_string() == "[]");
    CHECK(Partition::parse("[3,1]") == Partition{3, 1});
    CHECK(Partition::parse("[]") == Partition{});
    CHECK_THROWS_AS(Partition::parse("3,1"), ParseError);
    CHECK_THROWS_AS(Partition::parse("[1,2]"), ParseError);
}

TEST_CASE("skew standard tableaux") {
    CHECK(skew_standard_tableaux(Partition{2, 1}, Partition{2, 1}).size() == 1);
    CHECK(skew_standard_tableaux(Partition{}, Partition{2, 1}).size() == 2);
    CHECK(skew_standard_tableaux(Partition{1}, Partition{2, 1}).size() == 2);
    CHECK_THROWS_AS(skew_standard_tableaux(Partition{2}, Partition{1, 1}),
                    std::invalid_argument);

    // prefix-partition invariant on everything enumerated
    for (const SkewStandardTableau& t :
         skew_standard_tableaux(Partition{1}, Partition{3, 2})) {
        Partition cur = t.inner;
        for (const Cell& c : t.order) cur = cur.with_cell(c); // throws if invalid
        CHECK(cur == t.outer);
    }
}

namespace {

// Count orderings of the skew cells satisfying the prefix invariant by
// checking all |cells|! permutations.
long brute_force_count(const Partition& lambda, const Partition& mu) {
    std::vector<Cell> cells;
    for (const Cell& c : mu.cells())
        if (!lambda.contains_cell(c)) cells.push_back(c);
    std::sort(cells.begin(), cells.end());
    long count = 0;
    do {
        Partition cur = lambda;
        bool ok = true;
        for (const Cell& c : cells) {
            try {
                cur = cur.with_cell(c);
            } catch (const std::invalid_argument&) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(cells.begin(), cells.end()));
    return count;
}

} // namespace

TEST_CASE("tableau counts vs brute force over all orderings") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& mu : partitions_of(n))
            CHECK(static_cast<long>(skew_standard_tableaux(Partition{}, mu).size()) ==
                  brute_force_count(Partition{}, mu));
    // a few genuinely skew shapes
    CHECK(static_cast<long>(skew_standard_tableaux(Partition{2}, Partition{3, 2}).size()) ==
          brute_force_count(Partition{2}, Partition{3, 2}));
    CHECK(static_cast<long>(
              skew_standard_tableaux(Partition{2, 1}, Partition{3, 2, 1}).size()) ==
          brute_force_count(Partition{2, 1}, Partition{3, 2, 1}));
}

TEST_CASE("symmetry constants") {
    CHECK(z_constant(Partition{1, 1}) == Rational(2));
    CHECK(u_constant(Partition{1, 1}) == Rational(2));
    CHECK(t_constant(Partition{1, 1}) == Rational(1));
    for (int i = 1; i <= 6; ++i) CHECK(t_constant(Partition{i}) == Rational(i));
    CHECK(t_constant(Partition{2, 1}) == Rational(3));
    CHECK(z_constant(Partition{}) == Rational(1));
    CHECK(u_constant(Partition{}) == Rational(1));
    CHECK_THROWS_AS(t_constant(Partition{}), std::invalid_argument);
    CHECK(symmetry_constants(Partition{2, 2, 1}).z == Rational(8));
    CHECK(symmetry_constants(Partition{2, 2, 1}).u == Rational(2));
    // u via the conjugate-difference form
    for (int n = 0; n <= 8; ++n) {
        for (const Partition& p : partitions_of(n)) {
            Partition d = p.conjugate();
            Rational u(1);
            for (int i = 1; i <= d.length(); ++i)
                u *= Rational::factorial(d.part(i) - d.part(i + 1));
            CHECK(u_constant(p) == u);
        }
    }
}

TEST_CASE("z recursion: sum over removable part values of z/z' is the weight") {
    for (int n = 1; n <= 8; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            Rational sum(0);
            std::set<int> values(mu.parts().begin(), mu.parts().end());
            for (int j : values) {
                std::vector<int> parts = mu.parts();
                parts.erase(std::find(parts.begin(), parts.end(), j));
                sum += z_constant(mu) / z_constant(Partition(parts));
            }
            CHECK(sum == Rational(n));
        }
    }
}

TEST_CASE("cell-coordinate sums match the binomial identities") {
    for (int n = 0; n <= 8; ++n) {
        for (const Partition& p : partitions_of(n)) {
            long sum_a = 0, sum_b = 0;
            for (const Cell& c : p.cells()) {
                sum_a += c.a;
                sum_b += c.b;
            }
            Rational lhs_a(0), lhs_b(0);
            Partition d = p.conjugate();
            for (int j = 1; j <= d.length(); ++j)
                lhs_a += Rational::binomial(d.part(j), 2);
            for (int i = 1; i <= p.length(); ++i)
                lhs_b += Rational::binomial(p.part(i), 2);
            CHECK(lhs_a == Rational(sum_a));
            CHECK(lhs_b == Rational(sum_b));
        }
    }
}
