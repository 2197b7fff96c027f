#pragma once

#include <utility>
#include <vector>

#include "hilbfock/partition.hpp"
#include "hilbfock/ratfunc.hpp"

namespace hilbfock {

/// Arm of a cell inside the diagram: max i >= 0 with (a+i, b) still in
/// the diagram. The cell must belong to the diagram.
int arm(const Partition& lambda, const Cell& e);
/// Leg: max j >= 0 with (a, b+j) still in the diagram.
int leg(const Partition& lambda, const Cell& e);

/// The 2|lambda| tangent weights at the fixed point x_lambda: for each
/// cell e the pair w+ = arm(e) U - (leg(e)+1) V and
/// w- = -(arm(e)+1) U + leg(e) V, appended in cell order.
std::vector<BiPoly> tangent_weights(const Partition& lambda);

/// Product of the tangent weights (the equivariant Euler class of the
/// tangent space); memoized.
const BiPoly& tan_product(const Partition& lambda);

/// Weight products of the one-box correspondence for adding cell c to
/// lambda: coker = prod over addable c' != c of (w(c') - w(c) - U - V),
/// ker = prod over removable f of (w(f) - w(c)). c must be addable.
std::pair<BiPoly, BiPoly> coker_ker(const Partition& lambda, const Cell& c);

/// Restriction of the boundary class: -sum_j dual_j(dual_j - 1) U
/// - sum_i part_i(part_i - 1) V. Internally asserted equal to
/// -2 e_1(cell weights).
BiPoly boundary_eigenvalue(const Partition& lambda);

/// Restriction of c_k of the tautological bundle to fix(lambda):
/// elementary symmetric polynomial e_k of the cell weights. Zero for
/// k > |lambda| (rank bound), 1 for k = 0.
BiPoly chern_restriction(const Partition& lambda, int k);

/// <fix(lambda), fix(lambda)> = 1 / Tan(lambda).
RatFunc fix_pairing(const Partition& lambda);

} // namespace hilbfock
