#include "cambmin/matrix.hpp"

namespace cambmin {

Rat det_rat(Mat<Rat> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m.at(pivot, c) == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Rat inv = Rat(1) / m.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

LinSolve solve_rat(Mat<Rat> a, std::vector<Rat> b) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (b.size() != rows) throw std::invalid_argument("rhs length mismatch");

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a.at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(r, j));
            std::swap(b[p], b[r]);
        }
        Rat inv = Rat(1) / a.at(r, c);
        for (std::size_t j = 0; j < cols; ++j) a.at(r, j) *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }

    LinSolve out;
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return out;  // inconsistent
    out.consistent = true;
    out.unique = (pivot_col.size() == cols);
    out.x.assign(cols, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) out.x[pivot_col[i]] = b[i];
    return out;
}

}  // namespace cambmin
