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

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "configuration.hpp"
#include "errors.hpp"
#include "linops.hpp"
#include "matrix.hpp"
#include "permanent.hpp"

namespace phaseperm {

inline constexpr std::uint64_t distribution_max_entries = 1'000'000;
inline constexpr std::size_t fock_oracle_max_photons = 5;
inline constexpr std::size_t fock_oracle_max_modes = 8;

namespace detail {
inline constexpr std::size_t max_tabulated_factorial = 20;

inline constexpr std::array<double, max_tabulated_factorial + 1> factorial_table = [] {
    std::array<double, max_tabulated_factorial + 1> f{};
    f[0] = 1.0;
    for (std::size_t i = 1; i < f.size(); ++i)
        f[i] = f[i - 1] * static_cast<double>(i);
    return f;
}();

/// sqrt(prod_k T_k!)
inline double occupation_normalizer(const PhotonConfiguration &t) {
    double prod = 1.0;
    for (unsigned tk : t.occupations()) {
        if (tk > max_tabulated_factorial)
            throw size_guard_error("occupation " + std::to_string(tk) + " exceeds factorial table");
        prod *= factorial_table[tk];
    }
    return std::sqrt(prod);
}

inline void append_compositions(unsigned remaining, std::size_t mode, std::vector<unsigned> &prefix,
                                std::vector<PhotonConfiguration> &out) {
    if (mode + 1 == prefix.size()) {
        prefix[mode] = remaining;
        out.emplace_back(prefix);
        return;
    }
    for (unsigned here = 0; here <= remaining; ++here) {
        prefix[mode] = here;
        append_compositions(remaining - here, mode + 1, prefix, out);
    }
}
} // namespace detail

/// C(n+m-1, n), the number of ways to place n photons in m modes.
inline std::uint64_t configuration_count(std::uint64_t n, std::uint64_t m) {
    if (m == 0)
        throw std::invalid_argument("configuration_count requires m >= 1");
    // C(n+m-1, k) with k = min(n, m-1); each partial product is itself a binomial.
    const std::uint64_t top = n + m - 1;
    const std::uint64_t k = std::min(n, m - 1);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (top - k + i) / i;
        if (c > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("configuration count C(" + std::to_string(top) + ", " +
                                      std::to_string(n) + ") overflows 64 bits");
    }
    return static_cast<std::uint64_t>(c);
}

/// All weak compositions of n into m parts, lexicographically ascending.
inline std::vector<PhotonConfiguration> enumerate_configurations(unsigned n, std::size_t m) {
    if (m == 0)
        throw std::invalid_argument("enumerate_configurations requires m >= 1");
    std::vector<PhotonConfiguration> out;
    out.reserve(static_cast<std::size_t>(configuration_count(n, m)));
    std::vector<unsigned> prefix(m, 0);
    detail::append_compositions(n, 0, prefix, out);
    return out;
}

/// gamma_T = perm(U_T) / sqrt(T_1! ... T_m!) for input |1^n 0^(m-n)>.
inline complex_t amplitude(const UnitaryMatrix &u, std::size_t n, const PhotonConfiguration &t) {
    const ComplexMatrix sub = submatrix_for_output(u, n, t);
    return permanent_ryser(sub) / detail::occupation_normalizer(t);
}

/**
 * Amplitude by direct expansion of prod_j sum_k U_{j,k} a_k^dagger |0>.
 *
 * Enumerates every map f from photons to output modes; maps whose image
 * histogram equals T contribute prod_j U_{j,f(j)}, and (a^dagger)^t|0> =
 * sqrt(t!)|t> supplies the bosonic factor. Independent of the permanent code.
 */
inline complex_t fock_oracle_amplitude(const UnitaryMatrix &u, std::size_t n,
                                       const PhotonConfiguration &t) {
    const std::size_t m = u.modes();
    if (n > fock_oracle_max_photons || m > fock_oracle_max_modes)
        throw size_guard_error("fock_oracle_amplitude limited to n <= 5, m <= 8");
    if (n > m || t.modes() != m || t.total() != n)
        throw configuration_mismatch("configuration does not match (n, m)");

    std::vector<std::size_t> f(n, 0);
    std::vector<unsigned> hist(m, 0);
    complex_t sum{0.0, 0.0};
    while (true) {
        std::fill(hist.begin(), hist.end(), 0u);
        for (std::size_t j = 0; j < n; ++j)
            ++hist[f[j]];
        bool match = true;
        for (std::size_t k = 0; k < m && match; ++k)
            match = hist[k] == t[k];
        if (match) {
            complex_t term{1.0, 0.0};
            for (std::size_t j = 0; j < n; ++j)
                term *= u(j, f[j]);
            sum += term;
        }
        // odometer increment over {0..m-1}^n
        std::size_t pos = 0;
        while (pos < n && ++f[pos] == m)
            f[pos++] = 0;
        if (pos == n)
            break;
    }
    double bosonic = 1.0;
    for (unsigned tk : t.occupations())
        bosonic *= detail::factorial_table[tk];
    return sum * std::sqrt(bosonic);
}

struct DistributionEntry {
    PhotonConfiguration configuration;
    complex_t amplitude;
    double probability;
};

struct OutputDistribution {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<DistributionEntry> entries;

    [[nodiscard]] double total_probability() const {
        double s = 0.0;
        for (const auto &e : entries)
            s += e.probability;
        return s;
    }
};

/// Every output configuration with its amplitude and probability.
inline OutputDistribution output_distribution(const UnitaryMatrix &u, std::size_t n) {
    const std::size_t m = u.modes();
    if (n > m)
        throw configuration_mismatch("photon number exceeds mode count");
    const std::uint64_t count = configuration_count(n, m);
    if (count > distribution_max_entries)
        throw size_guard_error("distribution would hold " + std::to_string(count) +
                               " entries (guard " + std::to_string(distribution_max_entries) + ")");
    OutputDistribution dist{n, m, {}};
    dist.entries.reserve(static_cast<std::size_t>(count));
    for (auto &t : enumerate_configurations(static_cast<unsigned>(n), m)) {
        const complex_t gamma = amplitude(u, n, t);
        dist.entries.push_back({std::move(t), gamma, std::norm(gamma)});
    }
    return dist;
}

/// CSV with header `T,re_amp,im_amp,prob`; T is space-separated occupations.
inline void write_distribution_csv(std::ostream &os, const OutputDistribution &dist) {
    const auto old_precision = os.precision(17);
    os << "T,re_amp,im_amp,prob\n";
    for (const auto &e : dist.entries)
        os << e.configuration.to_string() << ',' << e.amplitude.real() << ','
           << e.amplitude.imag() << ',' << e.probability << '\n';
    os.precision(old_precision);
}

} // namespace phaseperm
