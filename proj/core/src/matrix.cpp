#include "hilbfock/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "hilbfock/errors.hpp"

namespace hilbfock {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const RatFunc& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const RatFunc& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Mat: shape mismatch in sum");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Mat: shape mismatch in difference");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Mat Mat::scaled(const RatFunc& c) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

Mat Mat::transposed() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat solve_linear(const Mat& m, const Mat& rhs) {
    if (m.rows() != m.cols()) throw std::invalid_argument("solve_linear: matrix not square");
    if (rhs.rows() != m.rows()) throw std::invalid_argument("solve_linear: rhs shape mismatch");
    const int n = m.rows();

    Mat a = m;
    Mat x = rhs;
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r) {
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
            for (int j = 0; j < x.cols(); ++j) std::swap(x.at(pivot, j), x.at(rank, j));
        }
        RatFunc inv = a.at(rank, col).inverse();
        for (int j = 0; j < n; ++j) a.at(rank, j) *= inv;
        for (int j = 0; j < x.cols(); ++j) x.at(rank, j) *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            RatFunc f = a.at(r, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) a.at(r, j) -= f * a.at(rank, j);
            for (int j = 0; j < x.cols(); ++j) x.at(r, j) -= f * x.at(rank, j);
        }
        ++rank;
    }
    if (rank < n) throw SingularMatrixError(rank, n);

    if (m * x != rhs) throw std::logic_error("solve_linear: back-substitution check failed");
    return x;
}

std::vector<std::vector<RatFunc>> solve_linear(const Mat& m,
                                               const std::vector<std::vector<RatFunc>>& rhs) {
    Mat packed(m.rows(), static_cast<int>(rhs.size()));
    for (size_t j = 0; j < rhs.size(); ++j) {
        if (static_cast<int>(rhs[j].size()) != m.rows())
            throw std::invalid_argument("solve_linear: rhs vector length mismatch");
        for (int i = 0; i < m.rows(); ++i) packed.at(i, static_cast<int>(j)) = rhs[j][i];
    }
    Mat sol = solve_linear(m, packed);
    std::vector<std::vector<RatFunc>> out(rhs.size(), std::vector<RatFunc>(m.rows()));
    for (size_t j = 0; j < rhs.size(); ++j)
        for (int i = 0; i < m.rows(); ++i) out[j][i] = sol.at(i, static_cast<int>(j));
    return out;
}

} // namespace hilbfock
