#pragma once

#include <memory>
#include <string>

#include "hilbfock/fock.hpp"
#include "hilbfock/matrix.hpp"

namespace hilbfock {

class Operator;

namespace detail {
class OpNode;
Operator make_operator(std::shared_ptr<const OpNode> node);
}

/// Graded operator on the direct sum, represented compositionally as an
/// expression tree over the localization primitives with per-degree
/// memoized coefficient blocks. block(n) is the p(n) x p(n+degree)
/// matrix with entry [i][j] = Delta_{f, lambda_i, mu_j}, rows indexed by
/// partitions_of(n) and columns by partitions_of(n+degree), both in
/// canonical order. Blocks for source or target weight below zero are
/// empty (genuinely zero, not truncated).
class Operator {
public:
    int degree() const;
    const std::string& label() const;

    /// Coefficient block for source weight n (n >= 0); memoized, safe
    /// for concurrent callers.
    std::shared_ptr<const Mat> block(int n) const;

    /// Single coefficient Delta_{f, lambda, mu}; zero unless
    /// |mu| = |lambda| + degree.
    RatFunc coefficient(const Partition& lambda, const Partition& mu) const;

    friend Operator detail::make_operator(std::shared_ptr<const detail::OpNode> node);

private:
    explicit Operator(std::shared_ptr<const detail::OpNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const detail::OpNode> node_;
};

Operator op_zero(int degree);
Operator op_identity();
Operator op_scale(const RatFunc& c, const Operator& f);
Operator op_add(const Operator& f, const Operator& g);
/// f after g (g acts first).
Operator op_compose(const Operator& f, const Operator& g);

inline Operator operator+(const Operator& f, const Operator& g) { return op_add(f, g); }
inline Operator operator-(const Operator& f, const Operator& g) {
    return op_add(f, op_scale(RatFunc(-1), g));
}
inline Operator operator*(const RatFunc& c, const Operator& f) { return op_scale(c, f); }
inline Operator operator*(const Operator& f, const Operator& g) { return op_compose(f, g); }

/// Adjoint for the localized pairing: Delta_{f*, mu, lambda} =
/// Delta_{f, lambda, mu} Tan(lambda)/Tan(mu). Involution, negates the
/// conformal degree.
Operator op_adjoint(const Operator& f);

/// Truncation guard: block requests whose source, target or registered
/// intermediate weights exceed the window raise TruncationError.
Operator op_guard(const Operator& f, Truncation t);

/// fg - gf, with block requests checked against the truncation window:
/// any source, intermediate or target weight above t.max_weight raises
/// TruncationError.
Operator commutator(const Operator& f, const Operator& g, Truncation t);

/// The five primitive operators in the fix basis. rho_dual is computed
/// from the bracket (q_{-1} d - d q_{-1})/2 and cross-checked per degree
/// against adjoint(rho); a mismatch aborts.
struct Primitives {
    Operator q1;
    Operator qm1;
    Operator boundary;
    Operator rho;
    Operator rho_dual;
};

const Primitives& primitive_ops();

/// q_i for any nonzero i: the localization formulas for |i| = 1 and the
/// bracket recursions with rho / rho_dual for |i| > 1. i = 0 throws
/// (q_0 = 0 by convention). Memoized.
Operator q_general(int i);

/// q_n (n >= 1) from the skew-tableau expansion, coefficients by the
/// Q_M recursion. Built independently of the q_general recursion.
Operator q_tableau(int n);

/// Tableau coefficient Q_M (recursion) and the closed-form P_M, for the
/// cross-check between the two.
RatFunc tableau_coeff_recursive(const std::vector<Cell>& cells);
RatFunc tableau_coeff_closed(const std::vector<Cell>& cells);

/// q_{i,X} (i >= 1): q_{1,X} = q_1, then
/// q_{i,X} = [(-1)^{i+1} q_i + U sum_{j=1}^{i-1} (-1)^j q_j q_{i-j,X}]/i.
Operator qx_general(int i);

enum class ChangeDirection { q_to_qx, qx_to_q };

/// The closed expansions: qx_to_q gives (-1)^{i+1} sum over |lambda|=i
/// of z_lambda^{-1} U^{l-1} q_lambda, q_to_qx gives (-1)^{i+1} sum of
/// t_lambda U^{l-1} q_{lambda,X}. Equal to qx_general(i) / q_general(i)
/// respectively; the identity suite verifies the equality exactly.
Operator base_change_expansion(int i, ChangeDirection direction);

/// Product operator q_lambda = q_{lambda_l} o ... o q_{lambda_1}.
Operator q_product(const Partition& lambda);
/// Product operator q_{lambda,X} = q_{lambda_1,X} o ... o q_{lambda_l,X}.
Operator qx_product(const Partition& lambda);

/// Apply with truncation checks: every source component and its image
/// weight must stay within the window.
FockClass apply(const Operator& f, const FockClass& x, Truncation t);

} // namespace hilbfock
