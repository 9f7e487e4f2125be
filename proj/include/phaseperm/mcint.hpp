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
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "linops.hpp"
#include "matrix.hpp"
#include "permanent.hpp"
#include "phasespace.hpp"
#include "rng.hpp"
#include "stats.hpp"

namespace phaseperm {

/// The four equivalent integral expressions for P = |perm(U^{n x n})|^2.
enum class IntegralForm {
    full,        ///< m-dimensional, column sums over all m modes, with the -1 term
    truncated,   ///< m-dimensional, column sums truncated to the first n modes
    no_constant, ///< truncated sums, -1 dropped, 4^n prefactor
    reduced,     ///< n-dimensional, (8/pi)^n prefactor
};

/// Single-mode Gaussian identities the simplification chain relies on.
enum class GaussianIdentity { idzer, idpi, idzer2, idpi2 };

inline constexpr std::uint64_t mc_min_samples = 1000;
/// Samples per substream. Part of the reproducibility contract: changing it
/// changes every estimate.
inline constexpr std::uint64_t mc_chunk_size = 1u << 14;

inline std::string_view to_string(IntegralForm f) {
    switch (f) {
    case IntegralForm::full: return "FULL";
    case IntegralForm::truncated: return "TRUNCATED";
    case IntegralForm::no_constant: return "NO_CONSTANT";
    case IntegralForm::reduced: return "REDUCED";
    }
    return "?";
}

inline std::string_view to_string(GaussianIdentity id) {
    switch (id) {
    case GaussianIdentity::idzer: return "IDZER";
    case GaussianIdentity::idpi: return "IDPI";
    case GaussianIdentity::idzer2: return "IDZER2";
    case GaussianIdentity::idpi2: return "IDPI2";
    }
    return "?";
}

inline std::optional<IntegralForm> parse_integral_form(std::string_view s) {
    for (auto f : {IntegralForm::full, IntegralForm::truncated, IntegralForm::no_constant,
                   IntegralForm::reduced})
        if (s == to_string(f))
            return f;
    return std::nullopt;
}

inline constexpr std::array<IntegralForm, 4> all_integral_forms{
    IntegralForm::full, IntegralForm::truncated, IntegralForm::no_constant, IntegralForm::reduced};
inline constexpr std::array<GaussianIdentity, 4> all_gaussian_identities{
    GaussianIdentity::idzer, GaussianIdentity::idpi, GaussianIdentity::idzer2,
    GaussianIdentity::idpi2};

/// Exact right-hand side of each identity.
inline double identity_reference(GaussianIdentity id) {
    switch (id) {
    case GaussianIdentity::idpi: return std::numbers::pi / 2.0;
    case GaussianIdentity::idpi2: return std::numbers::pi / 8.0;
    default: return 0.0;
    }
}

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    std::string form; ///< integral form or identity tag
};

struct McOptions {
    std::uint64_t n_samples = 100'000;
    std::uint64_t seed = 0;
    /// 0 selects std::thread::hardware_concurrency(). Never affects results.
    unsigned workers = 1;
};

/**
 * One draw from the importance density (2/pi) e^{-2|alpha|^2} per mode:
 * real and imaginary parts are independent N(0, 1/4).
 */
template <class Engine>
void fill_gaussian_phase_space(std::span<complex_t> out, Engine &engine, double component_sd = 0.5) {
    std::normal_distribution<double> normal(0.0, component_sd);
    for (auto &z : out) {
        const double re = normal(engine);
        const double im = normal(engine);
        z = complex_t{re, im};
    }
}

template <class Engine> PhaseSpacePoint sample_gaussian_phase_space(std::size_t m, Engine &engine) {
    std::vector<complex_t> a(m);
    fill_gaussian_phase_space(std::span<complex_t>(a), engine);
    return PhaseSpacePoint(std::move(a));
}

/**
 * Mean and standard error of `residual(alpha)` for alpha in C^dim, with
 * each component drawn independently with real/imag standard deviation
 * `component_sd`.
 *
 * Samples are cut into chunks of `mc_chunk_size`; chunk i draws from
 * substream(seed, i) and the per-chunk statistics are merged in chunk order
 * after all workers finish, so the result is bit-identical for any worker
 * count.
 */
template <class Residual>
RunningStats gaussian_expectation(std::size_t dim, const McOptions &opts, Residual residual,
                                  double component_sd = 0.5) {
    if (opts.n_samples < mc_min_samples)
        throw size_guard_error("Monte-Carlo runs need at least " + std::to_string(mc_min_samples) +
                               " samples");
    const std::uint64_t n_chunks = (opts.n_samples + mc_chunk_size - 1) / mc_chunk_size;
    std::vector<RunningStats> partial(n_chunks);
    std::vector<std::exception_ptr> failures(n_chunks);
    std::atomic<std::uint64_t> next{0};

    auto work = [&] {
        std::vector<complex_t> alpha(dim);
        for (std::uint64_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) {
            try {
                engine_t engine = substream(opts.seed, c);
                const std::uint64_t begin = c * mc_chunk_size;
                const std::uint64_t end = std::min(opts.n_samples, begin + mc_chunk_size);
                RunningStats stats;
                for (std::uint64_t s = begin; s < end; ++s) {
                    fill_gaussian_phase_space(std::span<complex_t>(alpha), engine, component_sd);
                    const double v = residual(std::span<const complex_t>(alpha));
                    if (!std::isfinite(v))
                        throw non_finite_sample("non-finite integrand at sample " +
                                                std::to_string(s) + " (chunk " +
                                                std::to_string(c) + ")");
                    stats.add(v);
                }
                partial[c] = stats;
            } catch (...) {
                failures[c] = std::current_exception();
            }
        }
    };

    unsigned workers = opts.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                         : opts.workers;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_chunks));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }

    RunningStats total;
    for (std::uint64_t c = 0; c < n_chunks; ++c) {
        if (failures[c])
            std::rethrow_exception(failures[c]);
        total.merge(partial[c]);
    }
    return total;
}

namespace detail {
inline void require_mc_inputs(const UnitaryMatrix &u, std::size_t n) {
    if (n > u.modes())
        throw configuration_mismatch("photon number exceeds mode count");
}

inline MCEstimate to_estimate(const RunningStats &s, const McOptions &opts, std::string_view tag) {
    return {s.mean(), s.std_error(), s.count(), opts.seed, std::string(tag)};
}
} // namespace detail

/**
 * Importance-sampled estimate of |perm(U^{n x n})|^2 from one integral form.
 *
 * The Gaussian weight and its normalization are absorbed by the sampling
 * density, so each sample contributes only the residual polynomial:
 *
 *   FULL         prod_{j<=n} (4|sum_{k<=m} a_k U_{k,j}|^2 - 1)(|a_j|^2 - 1/2)
 *   TRUNCATED    same with k <= n
 *   NO_CONSTANT  4^n prod_{j<=n} |sum_{k<=n} a_k U_{k,j}|^2 (|a_j|^2 - 1/2)
 *   REDUCED      as NO_CONSTANT but only alpha_1..alpha_n are drawn
 *
 * The m-dimensional forms draw all m components even where the residual
 * ignores some of them.
 */
inline MCEstimate mc_probability(const UnitaryMatrix &u, std::size_t n, IntegralForm form,
                                 const McOptions &opts) {
    detail::require_mc_inputs(u, n);
    const std::size_t m = u.modes();
    const double four_n = std::ldexp(1.0, 2 * static_cast<int>(n));

    RunningStats stats;
    switch (form) {
    case IntegralForm::full:
    case IntegralForm::truncated: {
        const std::size_t rows = form == IntegralForm::full ? m : n;
        stats = gaussian_expectation(m, opts, [&](std::span<const complex_t> a) {
            double v = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                v *= (4.0 * std::norm(column_projection(u, a, j, rows)) - 1.0) *
                     (std::norm(a[j]) - 0.5);
            return v;
        });
        break;
    }
    case IntegralForm::no_constant:
    case IntegralForm::reduced: {
        const std::size_t dim = form == IntegralForm::reduced ? n : m;
        stats = gaussian_expectation(dim, opts, [&](std::span<const complex_t> a) {
            double v = four_n;
            for (std::size_t j = 0; j < n; ++j)
                v *= std::norm(column_projection(u, a, j, n)) * (std::norm(a[j]) - 0.5);
            return v;
        });
        break;
    }
    }
    return detail::to_estimate(stats, opts, to_string(form));
}

namespace detail {
/// E[X^k] for X = |alpha|^2 under (2/pi)e^{-2|alpha|^2}: k!/2^k.
inline double gaussian_weight_moment(unsigned k) {
    double v = 1.0;
    for (unsigned i = 1; i <= k; ++i)
        v *= static_cast<double>(i) / 2.0;
    return v;
}

/**
 * (2/pi) int e^{-2|a|^2} (4|a|^2 - 1)^p (|a|^2 - 1/2)^q d^2a for p, q in {0,1},
 * expanded into weight moments. Each value is a small dyadic rational, so
 * the arithmetic is exact.
 */
inline double normalized_mode_integral(bool routed, bool counted) {
    // polynomial in X: (4X - 1)^p (X - 1/2)^q, coefficients c0 + c1 X + c2 X^2
    double c0 = 1.0, c1 = 0.0, c2 = 0.0;
    if (routed) {
        c1 = 4.0 * c0;
        c0 = -c0;
    }
    if (counted) {
        c2 = c1;
        c1 = c0 - 0.5 * c1;
        c0 = -0.5 * c0;
    }
    return c0 + c1 * gaussian_weight_moment(1) + c2 * gaussian_weight_moment(2);
}
} // namespace detail

/**
 * Closed-form value of the FULL integral for a permutation network.
 *
 * With U = sigma the column sums collapse to single amplitudes, sum_k a_k
 * U_{k,j} = a_{sigma^{-1}(j)}, and the 2m-dimensional integral factorizes
 * into one integral per mode. Mode k carries a (4|a_k|^2 - 1) factor when
 * sigma(k) <= n and a (|a_k|^2 - 1/2) factor when k <= n. The product is 1
 * exactly when sigma maps {1..n} onto itself and 0 exactly otherwise, equal
 * to |perm|^2 of the leading n x n block of sigma.
 */
inline double analytic_permutation_probability(const PermutationSpec &spec, std::size_t n) {
    const std::size_t m = spec.size();
    if (n > m)
        throw configuration_mismatch("photon number exceeds mode count");
    double p = 1.0;
    for (std::size_t k = 1; k <= m; ++k)
        p *= detail::normalized_mode_integral(spec(k) <= n, k <= n);
    return p;
}

/**
 * Monte-Carlo estimate of the left side of a single-mode Gaussian identity.
 *
 * Draws alpha from the unit density (1/pi) e^{-|alpha|^2}, twice as wide as
 * the weight being integrated, so the weight e^{-2|alpha|^2} itself is
 * sampled rather than absorbed. IDZER2 estimates Re int e^{-2|a|^2} a^2
 * (|a|^2 - 1/2); the imaginary part is the same integral rotated by pi/4.
 */
inline MCEstimate verify_identity(GaussianIdentity which, const McOptions &opts) {
    constexpr double pi = std::numbers::pi;
    const RunningStats stats = gaussian_expectation(
        1, opts,
        [which](std::span<const complex_t> a) {
            const double r2 = std::norm(a[0]);
            const double weight = pi * std::exp(-r2); // e^{-2r^2} / ((1/pi) e^{-r^2})
            switch (which) {
            case GaussianIdentity::idzer: return weight * (r2 - 0.5);
            case GaussianIdentity::idpi: return weight;
            case GaussianIdentity::idzer2: return weight * (a[0] * a[0]).real() * (r2 - 0.5);
            case GaussianIdentity::idpi2: return weight * r2 * (r2 - 0.5);
            }
            return 0.0;
        },
        std::numbers::sqrt2 / 2.0);
    return detail::to_estimate(stats, opts, to_string(which));
}

/// (a - b) / sqrt(se_a^2 + se_b^2); 0 when both sides agree exactly.
inline double z_score(double a, double se_a, double b, double se_b) {
    const double diff = a - b;
    const double se = std::sqrt(se_a * se_a + se_b * se_b);
    if (diff == 0.0)
        return 0.0;
    return diff / se; // +-inf for a nonzero gap with zero spread
}

struct FormResult {
    MCEstimate estimate;
    double z; ///< against the Ryser reference
};

struct PairwiseZ {
    IntegralForm a;
    IntegralForm b;
    double z;
};

struct CrossFormReport {
    double reference = 0.0; ///< |perm(U^{n x n})|^2 via Ryser
    std::vector<FormResult> forms;
    std::vector<PairwiseZ> pairwise;

    [[nodiscard]] bool all_within(double z_max) const {
        for (const auto &f : forms)
            if (!(std::abs(f.z) <= z_max))
                return false;
        for (const auto &p : pairwise)
            if (!(std::abs(p.z) <= z_max))
                return false;
        return true;
    }
};

inline CrossFormReport cross_form_report(const UnitaryMatrix &u, std::size_t n, const McOptions &opts) {
    detail::require_mc_inputs(u, n);
    CrossFormReport report;
    report.reference = std::norm(permanent_ryser(u.matrix().leading_block(n)));
    for (auto form : all_integral_forms) {
        MCEstimate e = mc_probability(u, n, form, opts);
        const double z = z_score(e.mean, e.std_error, report.reference, 0.0);
        report.forms.push_back({std::move(e), z});
    }
    for (std::size_t i = 0; i < report.forms.size(); ++i)
        for (std::size_t j = i + 1; j < report.forms.size(); ++j) {
            const auto &a = report.forms[i].estimate;
            const auto &b = report.forms[j].estimate;
            report.pairwise.push_back({all_integral_forms[i], all_integral_forms[j],
                                       z_score(a.mean, a.std_error, b.mean, b.std_error)});
        }
    return report;
}

/// Monte-Carlo estimate of the integral of wigner_closed_form over C^m.
inline MCEstimate wigner_normalization(const UnitaryMatrix &u, std::size_t n, const McOptions &opts) {
    detail::require_mc_inputs(u, n);
    const std::size_t m = u.modes();
    const RunningStats stats = gaussian_expectation(m, opts, [&](std::span<const complex_t> a) {
        double v = 1.0;
        for (std::size_t j = 0; j < n; ++j)
            v *= 4.0 * std::norm(column_projection(u, a, j, m)) - 1.0;
        return v;
    });
    return detail::to_estimate(stats, opts, "WIGNER_NORM");
}

} // namespace phaseperm
