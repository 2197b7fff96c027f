#include "hilbfock/operators.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "hilbfock/errors.hpp"
#include "hilbfock/localization.hpp"
#include "hilbfock/tableau.hpp"

namespace hilbfock {

namespace detail {

class OpNode {
public:
    OpNode(std::string label, int degree, std::function<Mat(int)> compute,
           std::vector<int> guard_offsets = {}, int guard_max = -1)
        : label_(std::move(label)), degree_(degree), compute_(std::move(compute)),
          guard_offsets_(std::move(guard_offsets)), guard_max_(guard_max) {}

    const std::string& label() const { return label_; }
    int degree() const { return degree_; }

    std::shared_ptr<const Mat> block(int n) const {
        if (n < 0) throw std::invalid_argument("Operator: negative source weight");
        if (guard_max_ >= 0) {
            for (int off : guard_offsets_) {
                int m = n + off;
                if (m > guard_max_) throw TruncationError(m, guard_max_);
            }
        }
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(n);
        if (it != memo_.end()) return it->second;
        auto mat = std::make_shared<const Mat>(compute_(n));
        memo_.emplace(n, mat);
        return mat;
    }

private:
    std::string label_;
    int degree_;
    std::function<Mat(int)> compute_;
    std::vector<int> guard_offsets_;
    int guard_max_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::shared_ptr<const Mat>> memo_;
};

Operator make_operator(std::shared_ptr<const OpNode> node) {
    return Operator(std::move(node));
}

} // namespace detail

using detail::OpNode;

int Operator::degree() const { return node_->degree(); }
const std::string& Operator::label() const { return node_->label(); }

std::shared_ptr<const Mat> Operator::block(int n) const { return node_->block(n); }

RatFunc Operator::coefficient(const Partition& lambda, const Partition& mu) const {
    if (mu.weight() != lambda.weight() + degree()) return RatFunc();
    auto b = block(lambda.weight());
    return b->at(partition_index(lambda), partition_index(mu));
}

namespace {

Operator make_node(std::string label, int degree, std::function<Mat(int)> compute,
                   std::vector<int> guard_offsets = {}, int guard_max = -1) {
    return detail::make_operator(std::make_shared<OpNode>(
        std::move(label), degree, std::move(compute), std::move(guard_offsets), guard_max));
}

Mat zero_block(int n, int degree) {
    return Mat(partition_count(n), partition_count(n + degree));
}

} // namespace

Operator op_zero(int degree) {
    return make_node("0", degree, [degree](int n) { return zero_block(n, degree); });
}

Operator op_identity() {
    return make_node("id", 0, [](int n) { return Mat::identity(partition_count(n)); });
}

Operator op_scale(const RatFunc& c, const Operator& f) {
    Operator base = f;
    return make_node("(" + c.to_string() + ")*" + f.label(), f.degree(),
                     [c, base](int n) { return base.block(n)->scaled(c); });
}

Operator op_add(const Operator& f, const Operator& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("Operator: sum of mixed conformal degrees (" +
                                    f.label() + ", " + g.label() + ")");
    Operator a = f, b = g;
    return make_node("(" + f.label() + " + " + g.label() + ")", f.degree(),
                     [a, b](int n) { return *a.block(n) + *b.block(n); });
}

Operator op_compose(const Operator& f, const Operator& g) {
    Operator outer = f, inner = g;
    int degree = f.degree() + g.degree();
    return make_node(f.label() + "*" + g.label(), degree, [outer, inner, degree](int n) {
        int mid = n + inner.degree();
        if (mid < 0) return zero_block(n, degree);
        return *inner.block(n) * *outer.block(mid);
    });
}

Operator op_adjoint(const Operator& f) {
    Operator base = f;
    int degree = -f.degree();
    return make_node(f.label() + "^", degree, [base, degree](int n) {
        int m = n + degree; // target weight = source weight of the base block
        Mat out(partition_count(n), partition_count(m));
        if (m < 0) return out;
        auto b = base.block(m);
        const auto& src = partitions_of(m);
        const auto& tgt = partitions_of(n);
        for (int i = 0; i < static_cast<int>(src.size()); ++i) {
            RatFunc tl(tan_product(src[i]));
            for (int j = 0; j < static_cast<int>(tgt.size()); ++j) {
                const RatFunc& d = b->at(i, j);
                if (d.is_zero()) continue;
                out.at(j, i) = d * tl / RatFunc(tan_product(tgt[j]));
            }
        }
        return out;
    });
}

Operator op_guard(const Operator& f, Truncation t) {
    Operator base = f;
    return make_node(f.label(), f.degree(), [base](int n) { return *base.block(n); },
                     {0, f.degree()}, t.max_weight);
}

Operator commutator(const Operator& f, const Operator& g, Truncation t) {
    Operator fg = op_compose(f, g);
    Operator gf = op_compose(g, f);
    Operator sum = fg - gf;
    Operator base = sum;
    std::vector<int> offsets{0, f.degree(), g.degree(), f.degree() + g.degree()};
    Operator guarded = make_node("[" + f.label() + "," + g.label() + "]", sum.degree(),
                                 [base](int n) { return *base.block(n); }, offsets,
                                 t.max_weight);
    return guarded;
}

// --- primitive blocks -------------------------------------------------------

namespace {

Mat q1_block(int n) {
    const auto& src = partitions_of(n);
    Mat out(partition_count(n), partition_count(n + 1));
    for (int i = 0; i < static_cast<int>(src.size()); ++i) {
        for (const Cell& c : src[i].addable_cells()) {
            auto [coker, ker] = coker_ker(src[i], c);
            out.at(i, partition_index(src[i].with_cell(c))) = RatFunc(coker, ker);
        }
    }
    return out;
}

Mat qm1_block(int n) {
    const auto& src = partitions_of(n);
    Mat out(partition_count(n), partition_count(n - 1));
    if (n - 1 < 0) return out;
    for (int i = 0; i < static_cast<int>(src.size()); ++i) {
        const Partition& mu = src[i];
        RatFunc tan_mu(tan_product(mu));
        for (const Cell& f : mu.removable_cells()) {
            Partition lambda = mu.without_cell(f);
            auto [coker, ker] = coker_ker(lambda, f);
            out.at(i, partition_index(lambda)) =
                RatFunc(coker, ker) * RatFunc(tan_product(lambda)) / tan_mu;
        }
    }
    return out;
}

Mat boundary_block(int n) {
    const auto& src = partitions_of(n);
    Mat out(partition_count(n), partition_count(n));
    for (int i = 0; i < static_cast<int>(src.size()); ++i)
        out.at(i, i) = RatFunc(boundary_eigenvalue(src[i]));
    return out;
}

Mat rho_block(int n) {
    const auto& src = partitions_of(n);
    Mat out(partition_count(n), partition_count(n + 1));
    for (int i = 0; i < static_cast<int>(src.size()); ++i) {
        for (const Cell& c : src[i].addable_cells()) {
            auto [coker, ker] = coker_ker(src[i], c);
            out.at(i, partition_index(src[i].with_cell(c))) =
                -(RatFunc(coker, ker) * RatFunc(c.weight()));
        }
    }
    return out;
}

} // namespace

const Primitives& primitive_ops() {
    static const Primitives prims = [] {
        Operator q1 = make_node("q_1", 1, q1_block);
        Operator qm1 = make_node("q_-1", -1, qm1_block);
        Operator boundary = make_node("d", 0, boundary_block);
        Operator rho = make_node("rho", 1, rho_block);

        // 2 rho^ = q_{-1} d - d q_{-1}, cross-checked against adjoint(rho).
        Operator bracket = op_scale(RatFunc(Rational(1, 2)),
                                    op_compose(qm1, boundary) - op_compose(boundary, qm1));
        Operator adj = op_adjoint(rho);
        Operator rho_dual =
            make_node("rho^", -1, [bracket, adj](int n) {
                Mat via_bracket = *bracket.block(n);
                Mat via_adjoint = *adj.block(n);
                if (via_bracket != via_adjoint)
                    throw std::logic_error(
                        "rho_dual: bracket and adjoint routes disagree at degree " +
                        std::to_string(n));
                return via_bracket;
            });
        return Primitives{q1, qm1, boundary, rho, rho_dual};
    }();
    return prims;
}

// --- q_i ---------------------------------------------------------------------

Operator q_general(int i) {
    if (i == 0) throw std::invalid_argument("q_0 is zero by convention");
    static std::mutex mutex;
    static std::map<int, Operator> memo;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(i);
    if (it != memo.end()) return it->second;

    std::function<Operator(int)> build = [&](int k) -> Operator {
        auto found = memo.find(k);
        if (found != memo.end()) return found->second;
        Operator op = [&]() -> Operator {
            const Primitives& p = primitive_ops();
            if (k == 1) return p.q1;
            if (k == -1) return p.qm1;
            if (k > 1) {
                Operator prev = build(k - 1);
                return op_scale(RatFunc(Rational(1, k - 1)),
                                op_compose(p.rho, prev) - op_compose(prev, p.rho));
            }
            Operator prev = build(k + 1);
            return op_scale(RatFunc(Rational(1, k + 1)),
                            op_compose(p.rho_dual, prev) - op_compose(prev, p.rho_dual));
        }();
        Operator named = make_node("q_" + std::to_string(k), k,
                                   [op](int n) { return *op.block(n); });
        memo.emplace(k, named);
        return named;
    };
    return build(i);
}

// --- tableau route for q_n ---------------------------------------------------

RatFunc tableau_coeff_recursive(const std::vector<Cell>& cells) {
    const int n = static_cast<int>(cells.size());
    if (n == 0) throw std::invalid_argument("tableau coefficient of empty tableau");
    // Q over contiguous subranges [i, i+len): dropping the last cell is the
    // range shrunk on the right, dropping the first is the shift M+.
    std::vector<std::vector<RatFunc>> q(n + 1, std::vector<RatFunc>(n));
    for (int i = 0; i < n; ++i) q[1][i] = RatFunc(1);
    for (int len = 2; len <= n; ++len) {
        for (int i = 0; i + len <= n; ++i) {
            RatFunc w_last(cells[i + len - 1].weight());
            RatFunc w_first(cells[i].weight());
            q[len][i] = (w_first * q[len - 1][i + 1] - w_last * q[len - 1][i]) *
                        RatFunc(Rational(1, len - 1));
        }
    }
    return q[n][0];
}

RatFunc tableau_coeff_closed(const std::vector<Cell>& cells) {
    const int n = static_cast<int>(cells.size());
    if (n == 0) throw std::invalid_argument("tableau coefficient of empty tableau");
    if (n == 1) return RatFunc(1);
    RatFunc sum;
    for (int i = 1; i <= n; ++i) {
        BiPoly prod = BiPoly::one();
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            prod *= cells[j - 1].weight();
        }
        Rational c = Rational::binomial(n - 1, i - 1);
        if ((i - 1) % 2 == 1) c = -c;
        sum += RatFunc(prod.scaled(c));
    }
    Rational scale = Rational(1) / Rational::factorial(n - 1);
    if ((n - 1) % 2 == 1) scale = -scale;
    return sum * RatFunc(scale);
}

Operator q_tableau(int n) {
    if (n < 1) throw std::invalid_argument("q_tableau: index must be positive");
    static std::mutex mutex;
    static std::map<int, Operator> memo;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;

    Operator op = make_node("qT_" + std::to_string(n), n, [n](int m) {
        const auto& src = partitions_of(m);
        Mat out(partition_count(m), partition_count(m + n));
        for (int i = 0; i < static_cast<int>(src.size()); ++i) {
            const Partition& lambda = src[i];
            for (const Partition& mu : partitions_of(m + n)) {
                if (!lambda.contained_in(mu)) continue;
                RatFunc total;
                for (const SkewStandardTableau& t : skew_standard_tableaux(lambda, mu)) {
                    RatFunc chain(1);
                    Partition cur = lambda;
                    for (const Cell& c : t.order) {
                        auto [coker, ker] = coker_ker(cur, c);
                        chain *= RatFunc(coker, ker);
                        cur = cur.with_cell(c);
                    }
                    total += tableau_coeff_recursive(t.order) * chain;
                }
                out.at(i, partition_index(mu)) = total;
            }
        }
        return out;
    });
    memo.emplace(n, op);
    return op;
}

// --- q_{i,X} ------------------------------------------------------------------

Operator qx_general(int i) {
    if (i < 1) throw std::invalid_argument("qx_general: index must be positive");
    static std::mutex mutex;
    static std::map<int, Operator> memo;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(i);
    if (it != memo.end()) return it->second;

    std::function<Operator(int)> build = [&](int k) -> Operator {
        auto found = memo.find(k);
        if (found != memo.end()) return found->second;
        Operator op = [&]() -> Operator {
            if (k == 1) return q_general(1);
            int lead_sign = (k % 2 == 0) ? -1 : 1; // (-1)^{k+1}
            Operator acc = op_scale(RatFunc(Rational(lead_sign)), q_general(k));
            const RatFunc u = RatFunc::var_u();
            for (int j = 1; j < k; ++j) {
                Rational s((j % 2 == 0) ? 1 : -1); // (-1)^j
                acc = acc + op_scale(u * RatFunc(s),
                                     op_compose(q_general(j), build(k - j)));
            }
            return op_scale(RatFunc(Rational(1, k)), acc);
        }();
        Operator named = make_node("qx_" + std::to_string(k), k,
                                   [op](int n) { return *op.block(n); });
        memo.emplace(k, named);
        return named;
    };
    return build(i);
}

Operator q_product(const Partition& lambda) {
    if (lambda.empty()) return op_identity();
    const auto& parts = lambda.parts();
    Operator acc = q_general(parts[0]);
    for (size_t k = 1; k < parts.size(); ++k) acc = op_compose(q_general(parts[k]), acc);
    return acc;
}

Operator qx_product(const Partition& lambda) {
    if (lambda.empty()) return op_identity();
    const auto& parts = lambda.parts();
    Operator acc = qx_general(parts.back());
    for (size_t k = parts.size() - 1; k-- > 0;)
        acc = op_compose(qx_general(parts[k]), acc);
    return acc;
}

Operator base_change_expansion(int i, ChangeDirection direction) {
    if (i < 1) throw std::invalid_argument("base_change_expansion: index must be positive");
    Operator acc = op_zero(i);
    bool first = true;
    for (const Partition& lambda : partitions_of(i)) {
        Rational c = (direction == ChangeDirection::qx_to_q)
                         ? z_constant(lambda).inverse()
                         : t_constant(lambda);
        RatFunc coeff(BiPoly::monomial(c, lambda.length() - 1, 0)); // c U^{l-1}
        Operator term = (direction == ChangeDirection::qx_to_q) ? q_product(lambda)
                                                                : qx_product(lambda);
        Operator scaled = op_scale(coeff, term);
        acc = first ? scaled : op_add(acc, scaled);
        first = false;
    }
    int sign = (i % 2 == 0) ? -1 : 1; // (-1)^{i+1}
    return op_scale(RatFunc(Rational(sign)), acc);
}

FockClass apply(const Operator& f, const FockClass& x, Truncation t) {
    FockClass out;
    const int d = f.degree();
    for (const auto& [lambda, coeff] : x.coords()) {
        const int n = lambda.weight();
        if (n > t.max_weight) throw TruncationError(n, t.max_weight);
        const int m = n + d;
        if (m > t.max_weight) throw TruncationError(m, t.max_weight);
        if (m < 0) continue;
        auto b = f.block(n);
        const int row = partition_index(lambda);
        const auto& targets = partitions_of(m);
        for (int j = 0; j < static_cast<int>(targets.size()); ++j) {
            const RatFunc& entry = b->at(row, j);
            if (entry.is_zero()) continue;
            out.add(targets[j], coeff * entry);
        }
    }
    return out;
}

} // namespace hilbfock
