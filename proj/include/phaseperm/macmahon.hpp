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

#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace phaseperm {

inline constexpr std::size_t macmahon_max_forms = 12;

/**
 * Sparse polynomial in up to 16 commuting variables with complex
 * coefficients.
 *
 * A monomial is packed into a 64-bit key, four bits of exponent per
 * variable, so a multilinear monomial is a bitmask written in base 16.
 * Coefficients with modulus <= `prune_threshold` are never stored.
 */
class SparsePolynomial {
  public:
    using monomial_t = std::uint64_t;
    static constexpr std::size_t max_vars = 16;
    static constexpr unsigned max_exponent = 15;
    static constexpr double prune_threshold = 1e-15;

    enum class Pruning { none, multilinear };

    explicit SparsePolynomial(std::size_t n_vars) : n_vars_(n_vars) {
        if (n_vars == 0 || n_vars > max_vars)
            throw size_guard_error("SparsePolynomial supports 1.." + std::to_string(max_vars) +
                                   " variables");
    }

    static SparsePolynomial constant(std::size_t n_vars, complex_t c) {
        SparsePolynomial p(n_vars);
        p.add(0, c);
        return p;
    }

    static monomial_t pack(std::span<const unsigned> exponents) {
        monomial_t key = 0;
        for (std::size_t v = 0; v < exponents.size(); ++v) {
            if (exponents[v] > max_exponent)
                throw size_guard_error("exponent exceeds packed range");
            key |= static_cast<monomial_t>(exponents[v]) << (4 * v);
        }
        return key;
    }

    static unsigned exponent(monomial_t key, std::size_t var) noexcept {
        return static_cast<unsigned>((key >> (4 * var)) & 0xF);
    }

    static bool is_multilinear(monomial_t key) noexcept {
        return (key & 0xEEEE'EEEE'EEEE'EEEEULL) == 0;
    }

    /// x_var as a single-term key.
    static monomial_t variable(std::size_t var) noexcept { return monomial_t{1} << (4 * var); }

    /// The monomial x_1 x_2 ... x_n.
    [[nodiscard]] monomial_t all_variables() const noexcept {
        monomial_t key = 0;
        for (std::size_t v = 0; v < n_vars_; ++v)
            key |= variable(v);
        return key;
    }

    void add(monomial_t key, complex_t c) {
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted)
            it->second += c;
        if (std::abs(it->second) <= prune_threshold)
            terms_.erase(it);
    }

    [[nodiscard]] complex_t coefficient(monomial_t key) const {
        const auto it = terms_.find(key);
        return it == terms_.end() ? complex_t{0.0, 0.0} : it->second;
    }

    [[nodiscard]] SparsePolynomial multiply(const SparsePolynomial &rhs,
                                            Pruning pruning = Pruning::none) const {
        if (rhs.n_vars_ != n_vars_)
            throw shape_error("polynomials over different variable sets");
        SparsePolynomial out(n_vars_);
        for (const auto &[ka, ca] : terms_)
            for (const auto &[kb, cb] : rhs.terms_) {
                monomial_t key = 0;
                for (std::size_t v = 0; v < n_vars_; ++v) {
                    const unsigned e = exponent(ka, v) + exponent(kb, v);
                    if (e > max_exponent)
                        throw size_guard_error("exponent exceeds packed range");
                    key |= static_cast<monomial_t>(e) << (4 * v);
                }
                if (pruning == Pruning::multilinear && !is_multilinear(key))
                    continue;
                out.add(key, ca * cb);
            }
        return out;
    }

    [[nodiscard]] std::size_t n_vars() const noexcept { return n_vars_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] const std::map<monomial_t, complex_t> &terms() const noexcept { return terms_; }

  private:
    std::size_t n_vars_;
    std::map<monomial_t, complex_t> terms_;
};

/// Linear forms L_j = sum_{k<=n} A_{k,j} alpha_k, j = 1..n, over the leading block of `a`.
inline std::vector<SparsePolynomial> build_linear_forms(const ComplexMatrix &a, std::size_t n) {
    if (n > a.rows() || n > a.cols())
        throw configuration_mismatch("photon number exceeds mode count");
    if (n == 0 || n > SparsePolynomial::max_vars)
        throw size_guard_error("linear forms need 1.." + std::to_string(SparsePolynomial::max_vars) +
                               " variables");
    std::vector<SparsePolynomial> forms;
    forms.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        SparsePolynomial form(n);
        for (std::size_t k = 0; k < n; ++k)
            form.add(SparsePolynomial::variable(k), a(k, j));
        forms.push_back(std::move(form));
    }
    return forms;
}

inline std::vector<SparsePolynomial> build_linear_forms(const UnitaryMatrix &u, std::size_t n) {
    return build_linear_forms(u.matrix(), n);
}

/**
 * Product of `forms`, dropping every monomial with a squared variable as it
 * appears. Such monomials integrate to zero against the number kernel, and
 * once dropped they cannot come back, so the multilinear part of the result
 * is exact.
 */
inline SparsePolynomial expand_multilinear(std::span<const SparsePolynomial> forms) {
    if (forms.empty())
        throw std::invalid_argument("expand_multilinear needs at least one form");
    if (forms.size() > macmahon_max_forms)
        throw size_guard_error("expand_multilinear limited to " +
                               std::to_string(macmahon_max_forms) + " forms");
    SparsePolynomial acc = SparsePolynomial::constant(forms.front().n_vars(), {1.0, 0.0});
    for (const auto &f : forms)
        acc = acc.multiply(f, SparsePolynomial::Pruning::multilinear);
    return acc;
}

/// perm(A^{n x n}) read off as the coefficient of alpha_1 ... alpha_n.
inline complex_t permanent_via_macmahon(const ComplexMatrix &a, std::size_t n) {
    if (n > macmahon_max_forms)
        throw size_guard_error("permanent_via_macmahon limited to n <= " +
                               std::to_string(macmahon_max_forms));
    if (n == 0)
        return {1.0, 0.0};
    const auto forms = build_linear_forms(a, n);
    const SparsePolynomial product = expand_multilinear(forms);
    return product.coefficient(product.all_variables());
}

inline complex_t permanent_via_macmahon(const UnitaryMatrix &u, std::size_t n) {
    return permanent_via_macmahon(u.matrix(), n);
}

} // namespace phaseperm
