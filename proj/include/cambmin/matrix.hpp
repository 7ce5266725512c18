#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cambmin/rational.hpp"

namespace cambmin {

// Dense matrix over an exact ring. T needs +, -, *, == and value semantics;
// T{} must act as zero and scalar construction from int must give 0/1.
template <class T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c, T fill = T{}) : rows_(r), cols_(c), data_(r * c, fill) {}

    static Mat identity(std::size_t n, const T& one, const T& zero) {
        Mat m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    Mat submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        Mat r(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(rows[i], cols[j]);
        return r;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

// Determinant by Laplace expansion along the first column, memoizing on row
// subsets. No division, so it works over any commutative ring; the matrices
// here are small (desk scale), so the 2^n memo table is fine.
template <class T>
T det_laplace(const Mat<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    if (n > 20) throw std::invalid_argument("matrix too large for subset expansion");
    // minors[mask] = det of rows in mask, columns n-|mask|..n-1
    std::vector<T> cur(1u << n), next;
    for (std::size_t i = 0; i < n; ++i) cur[1u << i] = m.at(i, n - 1);
    for (std::size_t size = 2; size <= n; ++size) {
        next.assign(1u << n, T{});
        const std::size_t col = n - size;
        for (std::size_t mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
            T acc{};
            bool plus = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (!(mask & (1u << i))) continue;
                T contrib = m.at(i, col) * cur[mask & ~(1u << i)];
                if (plus)
                    acc += contrib;
                else
                    acc -= contrib;
                plus = !plus;
            }
            next[mask] = std::move(acc);
        }
        cur.swap(next);
    }
    return cur[(1u << n) - 1];
}

// Naive recursive cofactor expansion. Deliberately independent from
// det_laplace so the two can cross-check each other in tests.
template <class T>
T det_cofactor(const Mat<T>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols() || n == 0) throw std::invalid_argument("bad matrix for determinant");
    if (n == 1) return m.at(0, 0);
    T acc{};
    std::vector<std::size_t> rows;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j) {
        cols.clear();
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) cols.push_back(k);
        T term = m.at(0, j) * det_cofactor(m.submatrix(rows, cols));
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

template <class T>
T matrix_minor(const Mat<T>& m, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor needs square selection");
    return det_laplace(m.submatrix(rows, cols));
}

// Exact Gaussian elimination over the rationals.
Rat det_rat(Mat<Rat> m);

// Solve A x = b. Returns empty when the system is inconsistent; when the
// kernel is nontrivial an arbitrary solution is produced (flagged unique=false).
struct LinSolve {
    bool consistent = false;
    bool unique = false;
    std::vector<Rat> x;
};
LinSolve solve_rat(Mat<Rat> a, std::vector<Rat> b);

}  // namespace cambmin
