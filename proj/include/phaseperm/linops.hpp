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
#include <random>
#include <string>

#include "configuration.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "rng.hpp"

namespace phaseperm {

/// Bound met by every generated Haar unitary.
inline constexpr double haar_unitarity_tolerance = 1e-12;

/**
 * Haar-distributed m x m unitary, deterministic in `seed`.
 *
 * QR of an i.i.d. complex Gaussian matrix via twice-iterated Gram-Schmidt.
 * Each column is normalized by its real positive norm, so the triangular
 * factor has a positive real diagonal; that is exactly the phase-corrected
 * QR whose Q is Haar distributed.
 */
inline UnitaryMatrix haar_random_unitary(std::size_t m, std::uint64_t seed) {
    if (m == 0)
        throw std::invalid_argument("haar_random_unitary requires m >= 1");
    engine_t engine = make_engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    ComplexMatrix q(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            const double re = normal(engine);
            const double im = normal(engine);
            q(r, c) = complex_t{re, im};
        }

    for (std::size_t j = 0; j < m; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t i = 0; i < j; ++i) {
                complex_t proj{0.0, 0.0};
                for (std::size_t r = 0; r < m; ++r)
                    proj += std::conj(q(r, i)) * q(r, j);
                for (std::size_t r = 0; r < m; ++r)
                    q(r, j) -= proj * q(r, i);
            }
        double norm = 0.0;
        for (std::size_t r = 0; r < m; ++r)
            norm += std::norm(q(r, j));
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < m; ++r)
            q(r, j) /= norm;
    }
    return UnitaryMatrix::from(std::move(q), haar_unitarity_tolerance);
}

/// 0/1 matrix with a one at (j, spec(j)).
inline UnitaryMatrix permutation_unitary(const PermutationSpec &spec) {
    const std::size_t m = spec.size();
    ComplexMatrix p(m, m);
    for (std::size_t j = 1; j <= m; ++j)
        p(j - 1, spec(j) - 1) = 1.0;
    return UnitaryMatrix::from(std::move(p), 0.0);
}

inline bool check_unitarity(const ComplexMatrix &a, double tol) { return unitarity_defect(a) <= tol; }

/**
 * n x n matrix relevant to output configuration `t` for the input state with
 * one photon in each of modes 1..n.
 *
 * Rows are rows 1..n of U. Column k of U is repeated t[k] times, in
 * nondecreasing k.
 */
inline ComplexMatrix submatrix_for_output(const UnitaryMatrix &u, std::size_t n,
                                          const PhotonConfiguration &t) {
    const std::size_t m = u.modes();
    if (t.modes() != m)
        throw configuration_mismatch("configuration has " + std::to_string(t.modes()) +
                                     " modes, interferometer has " + std::to_string(m));
    if (t.total() != n)
        throw configuration_mismatch("configuration holds " + std::to_string(t.total()) +
                                     " photons, expected " + std::to_string(n));
    if (n > m)
        throw configuration_mismatch("photon number exceeds mode count");

    ComplexMatrix sub(n, n);
    std::size_t col = 0;
    for (std::size_t k = 0; k < m; ++k)
        for (unsigned rep = 0; rep < t[k]; ++rep, ++col)
            for (std::size_t r = 0; r < n; ++r)
                sub(r, col) = u(r, k);
    return sub;
}

} // namespace phaseperm
