#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hilbfock/bipoly.hpp"
#include "hilbfock/rational.hpp"

namespace hilbfock {

/// Diagram cell in the staircase convention: a indexes the part (the
/// X/U direction), b the position inside the part (the Y/V direction).
/// (a,b) belongs to the diagram of lambda iff a < l(lambda) and
/// b < lambda_{a+1}. The weight of the cell is w = a*U + b*V.
struct Cell {
    int a = 0;
    int b = 0;

    friend bool operator==(const Cell& x, const Cell& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Cell& x, const Cell& y) { return !(x == y); }
    friend bool operator<(const Cell& x, const Cell& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }

    BiPoly weight() const { return BiPoly::linear(a, b); }
    std::string to_string() const;
};

/// Partition as a weakly decreasing list of positive parts; the empty
/// partition is allowed. Immutable value type.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// 1-indexed part, 0 beyond the length.
    int part(int i) const;

    Partition conjugate() const;

    /// Diagram cells, a ascending then b ascending.
    std::vector<Cell> cells() const;
    bool contains_cell(const Cell& c) const;
    /// Diagram inclusion (lambda_i <= mu_i for all i).
    bool contained_in(const Partition& mu) const;

    /// Cells not in the diagram whose addition leaves a partition (the
    /// clefts / minimal ideal generators). a ascending.
    std::vector<Cell> addable_cells() const;
    /// Cells whose removal leaves a partition (the corners). a ascending.
    std::vector<Cell> removable_cells() const;

    Partition with_cell(const Cell& c) const;
    Partition without_cell(const Cell& c) const;

    friend bool operator==(const Partition& x, const Partition& y) {
        return x.parts_ == y.parts_;
    }
    friend bool operator!=(const Partition& x, const Partition& y) { return !(x == y); }
    /// Canonical enumeration order: part-wise lexicographic, missing
    /// parts read as 0. Within one weight this lists (1,...,1) first and
    /// (n) last, matching the pinned golden base-change matrices.
    friend bool operator<(const Partition& x, const Partition& y);

    std::string to_string() const;
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of weight n in canonical order; memoized, n >= 0.
const std::vector<Partition>& partitions_of(int n);

/// Index of lambda within partitions_of(|lambda|).
int partition_index(const Partition& lambda);

/// Number of partitions of n (0 for negative n).
int partition_count(int n);

/// z_lambda = prod(lambda_i) * prod_j (mult_j)!.
Rational z_constant(const Partition& lambda);
/// u_lambda = prod_j (mult_j)! = prod_i (lambda^vee_i - lambda^vee_{i+1})!.
Rational u_constant(const Partition& lambda);
/// t_lambda = sum over distinct part values j of
///   j/(alpha_j - 1)! * (l-1)! / prod_{i != j} alpha_i!.
/// Undefined (throws) for the empty partition.
Rational t_constant(const Partition& lambda);

struct SymmetryConstants {
    Rational z;
    Rational u;
    Rational t;
};

/// All three constants at once; lambda must be nonempty (t is undefined
/// on the empty partition).
SymmetryConstants symmetry_constants(const Partition& lambda);

/// Cells of lambda paired with their weights a*U + b*V, in cell order.
std::vector<std::pair<Cell, BiPoly>> cells_and_weight(const Partition& lambda);

} // namespace hilbfock
