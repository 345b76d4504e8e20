/*
   Copyright 2026 The petit authors

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

/**
 * @file matrix.hpp
 * @brief Dense exact matrices over a finite chain ring.
 *
 * Row-vector convention throughout: coordinate vectors act on the left,
 * vec(x ∘ h) = vec(x) · Gamma(h). Determinants use cofactor expansion —
 * exact over the commutative coefficient ring and free of divisions, which
 * matters because Gaussian elimination would have to divide by zero
 * divisors over Z_{p^e}.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "petit/chain_ring.hpp"
#include "petit/error.hpp"

namespace petit {

class MatrixOverS {
   public:
    MatrixOverS(RingPtr ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)),
          rows_(rows),
          cols_(cols),
          e_(rows * cols, ring_->zero()) {}

    static MatrixOverS identity(const RingPtr& ring, std::size_t n) {
        MatrixOverS m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring->one();
        return m;
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    RingElement& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const RingElement& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<RingElement> row(std::size_t i) const {
        return {e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    void set_row(std::size_t i, const std::vector<RingElement>& r) {
        detail::require(r.size() == cols_, "ShapeMismatch", "row length mismatch");
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
    }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!v.is_zero()) return false;
        return true;
    }

    MatrixOverS operator+(const MatrixOverS& o) const {
        detail::require(rows_ == o.rows_ && cols_ == o.cols_, "ShapeMismatch",
                        "matrix addition needs equal shapes");
        MatrixOverS r = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
        return r;
    }

    MatrixOverS operator*(const MatrixOverS& o) const {
        detail::require(cols_ == o.rows_, "ShapeMismatch",
                        "matrix product needs conformable shapes");
        MatrixOverS r(ring_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const RingElement& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    friend bool operator==(const MatrixOverS& a, const MatrixOverS& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const MatrixOverS& a, const MatrixOverS& b) { return !(a == b); }

    /// Plain-text aligned grid of the entries.
    std::string to_text() const {
        std::vector<std::string> cells(e_.size());
        std::size_t width = 0;
        for (std::size_t k = 0; k < e_.size(); ++k) {
            cells[k] = e_[k].to_string();
            width = std::max(width, cells[k].size());
        }
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            out += "[ ";
            for (std::size_t j = 0; j < cols_; ++j) {
                const std::string& c = cells[i * cols_ + j];
                out += std::string(width - c.size(), ' ') + c;
                out += (j + 1 < cols_) ? "  " : " ]\n";
            }
        }
        return out;
    }

   private:
    RingPtr ring_;
    std::size_t rows_, cols_;
    std::vector<RingElement> e_;
};

/// vec · M under the row-vector convention.
inline std::vector<RingElement> row_times(const std::vector<RingElement>& v,
                                          const MatrixOverS& m) {
    detail::require(v.size() == m.rows(), "ShapeMismatch", "row-vector length mismatch");
    std::vector<RingElement> r(m.cols(), m.ring()->zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m.at(i, j);
    }
    return r;
}

namespace detail {
inline RingElement det_cofactor(const MatrixOverS& m, std::vector<std::size_t> cols,
                                std::size_t row) {
    const RingPtr& ring = m.ring();
    if (cols.size() == 1) return m.at(row, cols[0]);
    RingElement acc = ring->zero();
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const RingElement& a = m.at(row, cols[k]);
        if (a.is_zero()) continue;
        std::vector<std::size_t> sub;
        sub.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub.push_back(cols[j]);
        const RingElement minor = det_cofactor(m, std::move(sub), row + 1);
        acc += (k % 2 == 0) ? a * minor : -(a * minor);
    }
    return acc;
}
}  // namespace detail

/// Exact determinant by cofactor expansion (commutative S).
inline RingElement det(const MatrixOverS& m) {
    detail::require(m.rows() == m.cols(), "NotSquare", "determinant of a non-square matrix");
    detail::require(m.rows() >= 1, "NotSquare", "determinant of an empty matrix");
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return detail::det_cofactor(m, std::move(cols), 0);
}

}  // namespace petit
