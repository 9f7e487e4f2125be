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
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace phaseperm {

inline constexpr std::size_t naive_permanent_max_dim = 10;
inline constexpr std::size_t ryser_permanent_max_dim = 30;

enum class PermanentAlgorithm { naive, ryser };

struct PermanentResult {
    complex_t value;
    PermanentAlgorithm algorithm;
    std::size_t dimension;
};

namespace detail {
inline void require_square(const ComplexMatrix &a, const char *who) {
    if (!a.is_square())
        throw shape_error(std::string(who) + ": permanent requires a square matrix, got " +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}
} // namespace detail

/// Sum over all n! permutations. Reference oracle only.
inline complex_t permanent_naive(const ComplexMatrix &a) {
    detail::require_square(a, "permanent_naive");
    const std::size_t n = a.rows();
    if (n > naive_permanent_max_dim)
        throw size_guard_error("permanent_naive: dimension " + std::to_string(n) +
                               " exceeds guard " + std::to_string(naive_permanent_max_dim));
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    complex_t sum{0.0, 0.0};
    do {
        complex_t term{1.0, 0.0};
        for (std::size_t j = 0; j < n; ++j)
            term *= a(j, sigma[j]);
        sum += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return sum;
}

/**
 * Ryser's formula with Gray-code subset enumeration, O(2^n n).
 *
 *   perm(A) = (-1)^n sum_{S subset [n]} (-1)^{|S|} prod_j sum_{k in S} A_{j,k}
 *
 * Consecutive Gray codes differ in one column, so the row sums are updated
 * with a single add or subtract per row.
 */
inline complex_t permanent_ryser(const ComplexMatrix &a) {
    detail::require_square(a, "permanent_ryser");
    const std::size_t n = a.rows();
    if (n > ryser_permanent_max_dim)
        throw size_guard_error("permanent_ryser: dimension " + std::to_string(n) +
                               " exceeds guard " + std::to_string(ryser_permanent_max_dim));
    if (n == 0)
        return {1.0, 0.0};

    std::vector<complex_t> row_sums(n, complex_t{0.0, 0.0});
    complex_t total{0.0, 0.0};
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const auto col = static_cast<std::size_t>(std::countr_zero(k));
        const std::uint64_t bit = std::uint64_t{1} << col;
        gray ^= bit;
        if (gray & bit)
            for (std::size_t j = 0; j < n; ++j)
                row_sums[j] += a(j, col);
        else
            for (std::size_t j = 0; j < n; ++j)
                row_sums[j] -= a(j, col);

        complex_t prod = row_sums[0];
        for (std::size_t j = 1; j < n; ++j)
            prod *= row_sums[j];
        if (std::popcount(gray) & 1)
            total -= prod;
        else
            total += prod;
    }
    return (n & 1) ? -total : total;
}

inline PermanentResult permanent(const ComplexMatrix &a,
                                 PermanentAlgorithm algo = PermanentAlgorithm::ryser) {
    const complex_t v = algo == PermanentAlgorithm::naive ? permanent_naive(a) : permanent_ryser(a);
    return {v, algo, a.rows()};
}

} // namespace phaseperm
