#include "hilbfock/tableau.hpp"

#include <stdexcept>

namespace hilbfock {

std::vector<Partition> SkewStandardTableau::chain() const {
    std::vector<Partition> out;
    out.push_back(inner);
    Partition cur = inner;
    for (const Cell& c : order) {
        cur = cur.with_cell(c);
        out.push_back(cur);
    }
    return out;
}

namespace {

void extend(const Partition& cur, const Partition& mu, std::vector<Cell>& acc,
            const Partition& inner, std::vector<SkewStandardTableau>& out) {
    if (cur == mu) {
        out.push_back({inner, mu, acc});
        return;
    }
    for (const Cell& c : cur.addable_cells()) {
        if (!mu.contains_cell(c)) continue;
        acc.push_back(c);
        extend(cur.with_cell(c), mu, acc, inner, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<SkewStandardTableau> skew_standard_tableaux(const Partition& lambda,
                                                        const Partition& mu) {
    if (!lambda.contained_in(mu))
        throw std::invalid_argument("skew_standard_tableaux: " + lambda.to_string() +
                                    " is not contained in " + mu.to_string());
    std::vector<SkewStandardTableau> out;
    std::vector<Cell> acc;
    extend(lambda, mu, acc, lambda, out);
    return out;
}

} // namespace hilbfock
