/*
   Copyright 2026 The orbilift authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ORBILIFT_LINALG_HPP
#define ORBILIFT_LINALG_HPP

#include <optional>
#include <vector>

#include "orbilift/cyclotomic.hpp"

namespace orbilift {

// Dense matrix over Q(zeta) with exact Gaussian elimination. Pivoting is
// "first nonzero", which is deterministic and sound over an exact field.
class CycMatrix {
  public:
    CycMatrix() : rows_(0), cols_(0) {}
    CycMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Cyclotomic::zero()) {}

    static CycMatrix identity(std::size_t n) {
        CycMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cyclotomic& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Cyclotomic& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend CycMatrix operator*(const CycMatrix& x, const CycMatrix& y) {
        if (x.cols_ != y.rows_) throw Error("CycMatrix: dimension mismatch in product");
        CycMatrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }

    friend CycMatrix operator-(const CycMatrix& x, const CycMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw Error("CycMatrix: dimension mismatch in difference");
        CycMatrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
        return r;
    }

    friend bool operator==(const CycMatrix& x, const CycMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            if (x.a_[i] != y.a_[i]) return false;
        return true;
    }
    friend bool operator!=(const CycMatrix& x, const CycMatrix& y) { return !(x == y); }

    CycMatrix embedded(unsigned conductor) const {
        CycMatrix r = *this;
        for (auto& c : r.a_) c = c.embedded(conductor);
        return r;
    }

    unsigned conductor_lcm() const {
        unsigned n = 1;
        for (const auto& c : a_) n = std::lcm(n, c.conductor());
        return n;
    }

    std::size_t rank() const {
        CycMatrix m = *this;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
            if (piv == rows_) continue;
            m.swap_rows(piv, r);
            const Cyclotomic inv = m.at(r, col).inverse();
            for (std::size_t j = col; j < cols_; ++j) m.at(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || m.at(i, col).is_zero()) continue;
                const Cyclotomic f = m.at(i, col);
                for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
            }
            ++r;
        }
        return r;
    }

    Cyclotomic det() const {
        if (rows_ != cols_) throw Error("CycMatrix: determinant of non-square matrix");
        CycMatrix m = *this;
        Cyclotomic d = Cyclotomic::one();
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t piv = col;
            while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
            if (piv == rows_) return Cyclotomic::zero();
            if (piv != col) {
                m.swap_rows(piv, col);
                d = -d;
            }
            d *= m.at(col, col);
            const Cyclotomic inv = m.at(col, col).inverse();
            for (std::size_t i = col + 1; i < rows_; ++i) {
                if (m.at(i, col).is_zero()) continue;
                const Cyclotomic f = m.at(i, col) * inv;
                for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
            }
        }
        return d;
    }

    std::optional<CycMatrix> inverse() const {
        if (rows_ != cols_) throw Error("CycMatrix: inverse of non-square matrix");
        CycMatrix m = *this;
        CycMatrix inv = identity(rows_);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t piv = col;
            while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
            if (piv == rows_) return std::nullopt;
            m.swap_rows(piv, col);
            inv.swap_rows(piv, col);
            const Cyclotomic s = m.at(col, col).inverse();
            for (std::size_t j = 0; j < cols_; ++j) {
                m.at(col, j) *= s;
                inv.at(col, j) *= s;
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == col || m.at(i, col).is_zero()) continue;
                const Cyclotomic f = m.at(i, col);
                for (std::size_t j = 0; j < cols_; ++j) {
                    m.at(i, j) -= f * m.at(col, j);
                    inv.at(i, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    // basis of the right null space {x : A x = 0}
    std::vector<std::vector<Cyclotomic>> kernel_basis() const {
        CycMatrix m = *this;
        std::vector<std::size_t> pivot_col;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
            if (piv == rows_) continue;
            m.swap_rows(piv, r);
            const Cyclotomic inv = m.at(r, col).inverse();
            for (std::size_t j = col; j < cols_; ++j) m.at(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || m.at(i, col).is_zero()) continue;
                const Cyclotomic f = m.at(i, col);
                for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
            }
            pivot_col.push_back(col);
            ++r;
        }
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivot_col) is_pivot[c] = true;
        std::vector<std::vector<Cyclotomic>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Cyclotomic> v(cols_, Cyclotomic::zero());
            v[free] = Cyclotomic::one();
            for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m.at(k, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::size_t hash() const {
        std::size_t h = rows_;
        hash_combine(h, cols_);
        for (const auto& c : a_) hash_combine(h, c.hash());
        return h;
    }

  private:
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
    }

    std::size_t rows_, cols_;
    std::vector<Cyclotomic> a_;
};

// Solve A x = b exactly; free unknowns are set to zero. Returns nullopt when
// the system is inconsistent.
inline std::optional<std::vector<Cyclotomic>> solve_linear(const CycMatrix& A,
                                                           const std::vector<Cyclotomic>& b) {
    if (A.rows() != b.size()) throw Error("solve_linear: dimension mismatch");
    CycMatrix m(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) m.at(i, j) = A.at(i, j);
        m.at(i, A.cols()) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < A.cols() && r < A.rows(); ++col) {
        std::size_t piv = r;
        while (piv < A.rows() && m.at(piv, col).is_zero()) ++piv;
        if (piv == A.rows()) continue;
        for (std::size_t k = 0; k <= A.cols(); ++k) std::swap(m.at(piv, k), m.at(r, k));
        const Cyclotomic inv = m.at(r, col).inverse();
        for (std::size_t j = col; j <= A.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == r || m.at(i, col).is_zero()) continue;
            const Cyclotomic f = m.at(i, col);
            for (std::size_t j = col; j <= A.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < A.rows(); ++i)
        if (!m.at(i, A.cols()).is_zero()) return std::nullopt;
    std::vector<Cyclotomic> x(A.cols(), Cyclotomic::zero());
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = m.at(k, A.cols());
    return x;
}

// Incremental exact row echelon; used for span membership tests during the
// generator sweep.
class LinearSpan {
  public:
    explicit LinearSpan(std::size_t dim) : dim_(dim) {}

    // reduce v against the span; returns the residue
    std::vector<Cyclotomic> reduce(std::vector<Cyclotomic> v) const {
        for (const auto& row : rows_) {
            const Cyclotomic& c = v[row.pivot];
            if (c.is_zero()) continue;
            const Cyclotomic f = c;
            for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * row.data[j];
        }
        return v;
    }

    bool contains(const std::vector<Cyclotomic>& v) const {
        auto r = reduce(v);
        for (const auto& c : r)
            if (!c.is_zero()) return false;
        return true;
    }

    // returns true if v was independent (and is now part of the span)
    bool insert(std::vector<Cyclotomic> v) {
        v = reduce(std::move(v));
        std::size_t piv = 0;
        while (piv < dim_ && v[piv].is_zero()) ++piv;
        if (piv == dim_) return false;
        const Cyclotomic inv = v[piv].inverse();
        for (auto& c : v) c *= inv;
        rows_.push_back(Row{piv, std::move(v)});
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

  private:
    struct Row {
        std::size_t pivot;
        std::vector<Cyclotomic> data;
    };
    std::size_t dim_;
    std::vector<Row> rows_;
};

}  // namespace orbilift

#endif
