#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gaussian.hpp"
#include "rational.hpp"

namespace lvmb {

// Dense matrix over Q[i]. Small sizes only; elimination is pivoted and exact.
class CMatrix {
  public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMatrix identity(size_t n) {
        CMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1, 0);
        return m;
    }

    static CMatrix from_rows(const std::vector<CVector>& rows) {
        if (rows.empty()) return {};
        CMatrix m(rows.size(), rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("ragged matrix rows");
            for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    GaussianRational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const GaussianRational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const CMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    size_t rows_;
    size_t cols_;
    std::vector<GaussianRational> a_;
};

inline CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix product shape");
    CMatrix out(x.rows(), y.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t k = 0; k < x.cols(); ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < y.cols(); ++j)
                out.at(i, j) = out.at(i, j) + x.at(i, k) * y.at(k, j);
        }
    return out;
}

inline CVector operator*(const CMatrix& x, const CVector& v) {
    if (x.cols() != v.size()) throw std::invalid_argument("matrix-vector shape");
    CVector out(x.rows());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j)
            out[i] = out[i] + x.at(i, j) * v[j];
    return out;
}

inline GaussianRational det(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    size_t n = m.rows();
    CMatrix a = m;
    GaussianRational d(1, 0);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) return GaussianRational(0, 0);
        if (piv != col) {
            for (size_t j = col; j < n; ++j) std::swap(a.at(col, j), a.at(piv, j));
            d = -d;
        }
        d = d * a.at(col, col);
        GaussianRational inv = inverse(a.at(col, col));
        for (size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            GaussianRational f = a.at(r, col) * inv;
            for (size_t j = col; j < n; ++j)
                a.at(r, j) = a.at(r, j) - f * a.at(col, j);
        }
    }
    return d;
}

struct SingularMatrixError : std::domain_error {
    SingularMatrixError() : std::domain_error("singular matrix: det = 0") {}
};

inline CMatrix inverse(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    size_t n = m.rows();
    CMatrix a = m;
    CMatrix inv = CMatrix::identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw SingularMatrixError();
        if (piv != col)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a.at(col, j), a.at(piv, j));
                std::swap(inv.at(col, j), inv.at(piv, j));
            }
        GaussianRational f = inverse(a.at(col, col));
        for (size_t j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) * f;
            inv.at(col, j) = inv.at(col, j) * f;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            GaussianRational g = a.at(r, col);
            for (size_t j = 0; j < n; ++j) {
                a.at(r, j) = a.at(r, j) - g * a.at(col, j);
                inv.at(r, j) = inv.at(r, j) - g * inv.at(col, j);
            }
        }
    }
    return inv;
}

// Determinant of a square rational matrix, exact.
inline Rational det_rational(const std::vector<std::vector<Rational>>& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det of non-square matrix");
    auto a = m;
    Rational d(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && sgn(a[piv][col]) == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[col], a[piv]);
            d = -d;
        }
        d *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (sgn(a[r][col]) == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return d;
}

}  // namespace lvmb
