/*
 * Copyright 2026 The phaseperm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace phaseperm {

using complex_t = std::complex<double>;

/**
 * Dense row-major complex matrix.
 *
 * Holds the interferometer U and the submatrices taken from it. Entries
 * must be finite; the constructor rejects NaN/Inf.
 */
class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, complex_t{0.0, 0.0}) {}

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex_t> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw shape_error("matrix entry count " + std::to_string(entries_.size()) +
                              " does not match " + std::to_string(rows_) + "x" +
                              std::to_string(cols_));
        for (const auto &z : entries_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::invalid_argument("matrix entries must be finite");
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            a(i, i) = 1.0;
        return a;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    complex_t &operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
    const complex_t &operator()(std::size_t r, std::size_t c) const noexcept {
        return entries_[r * cols_ + c];
    }

    [[nodiscard]] std::span<const complex_t> row(std::size_t r) const noexcept {
        return {entries_.data() + r * cols_, cols_};
    }
    [[nodiscard]] std::span<const complex_t> entries() const noexcept { return entries_; }

    [[nodiscard]] ComplexMatrix transpose() const {
        ComplexMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    [[nodiscard]] ComplexMatrix adjoint() const {
        ComplexMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = std::conj((*this)(r, c));
        return t;
    }

    /// Top-left `n`x`n` block.
    [[nodiscard]] ComplexMatrix leading_block(std::size_t n) const {
        if (n > rows_ || n > cols_)
            throw shape_error("leading block larger than matrix");
        ComplexMatrix b(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                b(r, c) = (*this)(r, c);
        return b;
    }

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
        if (a.cols_ != b.rows_)
            throw shape_error("inner dimensions do not agree in matrix product");
        ComplexMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const complex_t aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<complex_t> entries_;
};

/// max_{ij} |(A^dagger A - I)_{ij}|
inline double unitarity_defect(const ComplexMatrix &a) {
    if (!a.is_square())
        throw shape_error("unitarity check requires a square matrix");
    const std::size_t n = a.rows();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            complex_t s{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k)
                s += std::conj(a(k, i)) * a(k, j);
            if (i == j)
                s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    return worst;
}

/**
 * Square matrix certified unitary to within `tolerance()`.
 *
 * Only constructible through `UnitaryMatrix::from`, which runs the check.
 */
class UnitaryMatrix {
  public:
    static UnitaryMatrix from(ComplexMatrix m, double tolerance) {
        if (!m.is_square())
            throw shape_error("unitary matrix must be square");
        if (m.rows() == 0)
            throw shape_error("unitary matrix must have at least one mode");
        const double defect = unitarity_defect(m);
        if (!(defect <= tolerance))
            throw std::invalid_argument("matrix is not unitary: defect " + std::to_string(defect) +
                                        " exceeds tolerance " + std::to_string(tolerance));
        return UnitaryMatrix(std::move(m), tolerance);
    }

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return matrix_; }
    [[nodiscard]] double tolerance() const noexcept { return tolerance_; }
    [[nodiscard]] std::size_t modes() const noexcept { return matrix_.rows(); }
    const complex_t &operator()(std::size_t r, std::size_t c) const noexcept { return matrix_(r, c); }

  private:
    UnitaryMatrix(ComplexMatrix m, double tol) : matrix_(std::move(m)), tolerance_(tol) {}

    ComplexMatrix matrix_;
    double tolerance_ = 0.0;
};

/// A bijection on {1..m}, stored one-based as given.
class PermutationSpec {
  public:
    explicit PermutationSpec(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
        std::vector<bool> seen(mapping_.size(), false);
        for (std::size_t v : mapping_) {
            if (v < 1 || v > mapping_.size() || seen[v - 1])
                throw invalid_permutation("mapping is not a bijection on {1.." +
                                          std::to_string(mapping_.size()) + "}");
            seen[v - 1] = true;
        }
        if (mapping_.empty())
            throw invalid_permutation("permutation must act on at least one mode");
    }

    static PermutationSpec identity(std::size_t m) {
        std::vector<std::size_t> id(m);
        for (std::size_t i = 0; i < m; ++i)
            id[i] = i + 1;
        return PermutationSpec(std::move(id));
    }

    [[nodiscard]] std::size_t size() const noexcept { return mapping_.size(); }
    /// Image of the one-based index `j`.
    [[nodiscard]] std::size_t operator()(std::size_t j) const { return mapping_.at(j - 1); }
    [[nodiscard]] std::span<const std::size_t> mapping() const noexcept { return mapping_; }

  private:
    std::vector<std::size_t> mapping_;
};

} // namespace phaseperm
