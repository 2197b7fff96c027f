#pragma once

#include <vector>

#include "hilbfock/ratfunc.hpp"

namespace hilbfock {

/// Dense matrix over Q(U,V). Small sizes only (at most p(10) = 42 per
/// side at the hard truncation cap), so no sparsity machinery.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    RatFunc& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const RatFunc& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    bool is_zero() const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const RatFunc& c) const;
    Mat transposed() const;

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<RatFunc> e_;
};

/// Exact solve M X = rhs over Q(U,V) by Gauss-Jordan elimination, pivot =
/// first nonzero entry in column order. rhs columns are independent right
/// hand sides. Throws SingularMatrixError (with rank) when M is singular;
/// the returned solution is re-verified by back-substitution.
Mat solve_linear(const Mat& m, const Mat& rhs);

std::vector<std::vector<RatFunc>> solve_linear(const Mat& m,
                                               const std::vector<std::vector<RatFunc>>& rhs);

} // namespace hilbfock
