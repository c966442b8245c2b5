/*
   Copyright 2026 the wprm authors

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

#ifndef WPRM_LINALG_HPP
#define WPRM_LINALG_HPP

#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace wprm {

/// Dense matrix with entries in GF(q), stored row-major as canonical
/// representatives. Entry validity (0..q-1) is the caller's responsibility;
/// everything in this library writes through Gf and stays canonical.
class Mat {
   public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw Error(ErrorKind::invalid_argument, "negative matrix shape");
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    std::uint8_t& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    std::uint8_t at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    std::uint8_t* row(int r) { return a_.data() + std::size_t(r) * cols_; }
    const std::uint8_t* row(int r) const { return a_.data() + std::size_t(r) * cols_; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

   private:
    int rows_, cols_;
    std::vector<std::uint8_t> a_;

    friend struct RowReduction;
};

/// Result of in-place Gaussian elimination: `reduced` holds the nonzero rows
/// of the reduced row echelon form (rank many), pivot columns ascending.
struct RowReduction {
    Mat reduced;
    std::vector<int> pivot_cols;
    int rank = 0;
};

namespace detail {

// dst += f * src over GF(q), table-driven.
inline void add_scaled_row(std::uint8_t* dst, const std::uint8_t* src, int n, int f,
                           const std::uint8_t* add_t, const std::uint8_t* mul_t, int q) {
    const std::uint8_t* mrow = mul_t + std::size_t(f) * q;
    for (int j = 0; j < n; ++j) dst[j] = add_t[std::size_t(dst[j]) * q + mrow[src[j]]];
}

}  // namespace detail

/// Reduced row echelon form by Gaussian elimination; deterministic (first
/// nonzero entry in column order becomes the pivot).
inline RowReduction row_reduce(const Gf& F, Mat m) {
    const int q = F.q();
    const std::uint8_t* add_t = F.add_table();
    const std::uint8_t* mul_t = F.mul_table();
    const int rows = m.rows(), cols = m.cols();
    RowReduction out;
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int piv = -1;
        for (int r = pr; r < rows; ++r)
            if (m.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != pr)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pr, j), m.at(piv, j));
        const int iv = F.inv(m.at(pr, c));
        if (iv != 1) {
            const std::uint8_t* mrow = mul_t + std::size_t(iv) * q;
            std::uint8_t* prow = m.row(pr);
            for (int j = 0; j < cols; ++j) prow[j] = mrow[prow[j]];
        }
        for (int r = 0; r < rows; ++r) {
            if (r == pr) continue;
            const int f = m.at(r, c);
            if (f == 0) continue;
            detail::add_scaled_row(m.row(r), m.row(pr), cols, F.neg(f), add_t, mul_t, q);
        }
        out.pivot_cols.push_back(c);
        ++pr;
    }
    out.rank = pr;
    out.reduced = Mat(pr, cols);
    for (int r = 0; r < pr; ++r)
        for (int j = 0; j < cols; ++j) out.reduced.at(r, j) = m.at(r, j);
    return out;
}

/// Rank over GF(q); forward elimination only, no back-substitution.
inline int rank(const Gf& F, Mat m) {
    const int q = F.q();
    const std::uint8_t* add_t = F.add_table();
    const std::uint8_t* mul_t = F.mul_table();
    const int rows = m.rows(), cols = m.cols();
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int piv = -1;
        for (int r = pr; r < rows; ++r)
            if (m.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != pr)
            for (int j = c; j < cols; ++j) std::swap(m.at(pr, j), m.at(piv, j));
        const int iv = F.inv(m.at(pr, c));
        if (iv != 1) {
            const std::uint8_t* mrow = mul_t + std::size_t(iv) * q;
            std::uint8_t* prow = m.row(pr) + c;
            for (int j = 0; j < cols - c; ++j) prow[j] = mrow[prow[j]];
        }
        for (int r = pr + 1; r < rows; ++r) {
            const int f = m.at(r, c);
            if (f == 0) continue;
            detail::add_scaled_row(m.row(r) + c, m.row(pr) + c, cols - c, F.neg(f), add_t, mul_t,
                                   q);
        }
        ++pr;
    }
    return pr;
}

}  // namespace wprm

#endif
