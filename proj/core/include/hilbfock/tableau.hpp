#pragma once

#include <vector>

#include "hilbfock/partition.hpp"

namespace hilbfock {

/// Standard skew tableau of shape mu \ lambda: an ordering of the skew
/// cells such that every prefix union lambda + {order[0..i)} is again a
/// partition diagram (a one-box-at-a-time growth chain from lambda to mu).
struct SkewStandardTableau {
    Partition inner;
    Partition outer;
    std::vector<Cell> order;

    /// The chain lambda = shape(0) c shape(1) c ... c shape(n) = mu.
    std::vector<Partition> chain() const;
};

/// Exhaustive duplicate-free enumeration, deterministic order. Throws
/// std::invalid_argument when lambda is not contained in mu.
std::vector<SkewStandardTableau> skew_standard_tableaux(const Partition& lambda,
                                                        const Partition& mu);

} // namespace hilbfock
