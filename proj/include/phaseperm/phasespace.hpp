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

#include <cassert>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace phaseperm {

/// A point (alpha_1..alpha_m) in multimode phase space.
class PhaseSpacePoint {
  public:
    PhaseSpacePoint() = default;
    explicit PhaseSpacePoint(std::vector<complex_t> amplitudes) : amplitudes_(std::move(amplitudes)) {
        for (const auto &z : amplitudes_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::invalid_argument("phase-space amplitudes must be finite");
    }
    static PhaseSpacePoint zero(std::size_t m) { return PhaseSpacePoint(std::vector<complex_t>(m)); }

    [[nodiscard]] std::size_t modes() const noexcept { return amplitudes_.size(); }
    const complex_t &operator[](std::size_t k) const noexcept { return amplitudes_[k]; }
    [[nodiscard]] std::span<const complex_t> amplitudes() const noexcept { return amplitudes_; }

  private:
    std::vector<complex_t> amplitudes_;
};

namespace detail {
inline void require_modes(const UnitaryMatrix &u, std::size_t m, std::size_t n) {
    if (m != u.modes())
        throw shape_error("phase-space point has " + std::to_string(m) +
                          " modes, interferometer has " + std::to_string(u.modes()));
    if (n > m)
        throw shape_error("photon number exceeds mode count");
}
} // namespace detail

/**
 * Amplitudes of the displacement product after the network,
 * mu_j = sum_k lambda_k U_{j,k}.
 */
inline PhaseSpacePoint displaced_amplitudes(const UnitaryMatrix &u, const PhaseSpacePoint &lam) {
    detail::require_modes(u, lam.modes(), 0);
    const std::size_t m = u.modes();
    std::vector<complex_t> mu(m);
    for (std::size_t j = 0; j < m; ++j) {
        complex_t s{0.0, 0.0};
        for (std::size_t k = 0; k < m; ++k)
            s += lam[k] * u(j, k);
        mu[j] = s;
    }
    return PhaseSpacePoint(std::move(mu));
}

/// <1|D(lambda)|1> = exp(-|lambda|^2/2) (1 - |lambda|^2)
inline complex_t single_photon_overlap(complex_t lam) {
    const double r2 = std::norm(lam);
    return {std::exp(-0.5 * r2) * (1.0 - r2), 0.0};
}

/// <0|D(lambda)|0> = exp(-|lambda|^2/2)
inline complex_t vacuum_overlap(complex_t lam) { return {std::exp(-0.5 * std::norm(lam)), 0.0}; }

inline double total_energy(const PhaseSpacePoint &lam) {
    double e = 0.0;
    for (const auto &z : lam.amplitudes())
        e += std::norm(z);
    return e;
}

/**
 * Characteristic function of the network output for input |1^n 0^(m-n)>:
 * exp(-E/2) prod_{j<=n} (1 - |mu_j|^2). Real for this input state.
 */
inline double characteristic_function(const UnitaryMatrix &u, std::size_t n,
                                      const PhaseSpacePoint &lam) {
    detail::require_modes(u, lam.modes(), n);
    const PhaseSpacePoint mu = displaced_amplitudes(u, lam);
    double value = std::exp(-0.5 * total_energy(mu));
    for (std::size_t j = 0; j < n; ++j)
        value *= 1.0 - std::norm(mu[j]);
    return value;
}

/// sum_k alpha_k U_{k,j} over k < `rows`; the column-j inner product.
inline complex_t column_projection(const UnitaryMatrix &u, std::span<const complex_t> alpha,
                                   std::size_t j, std::size_t rows) {
    complex_t s{0.0, 0.0};
    for (std::size_t k = 0; k < rows; ++k)
        s += alpha[k] * u(k, j);
    return s;
}

/// (2/pi)^m exp(-2|alpha|^2) prod_{j<=n} (4 |sum_k alpha_k U_{k,j}|^2 - 1)
inline double wigner_closed_form(const UnitaryMatrix &u, std::size_t n, const PhaseSpacePoint &alpha) {
    detail::require_modes(u, alpha.modes(), n);
    const std::size_t m = u.modes();
    double value = std::pow(2.0 / std::numbers::pi, static_cast<double>(m)) *
                   std::exp(-2.0 * total_energy(alpha));
    for (std::size_t j = 0; j < n; ++j)
        value *= 4.0 * std::norm(column_projection(u, alpha.amplitudes(), j, m)) - 1.0;
    return value;
}

/// Symmetrically ordered kernel of n_1...n_n: prod_{j<=n} (|alpha_j|^2 - 1/2).
inline double number_kernel(const PhaseSpacePoint &alpha, std::size_t n) {
    if (n > alpha.modes())
        throw shape_error("number_kernel: n exceeds mode count");
    double value = 1.0;
    for (std::size_t j = 0; j < n; ++j)
        value *= std::norm(alpha[j]) - 0.5;
    return value;
}

} // namespace phaseperm
