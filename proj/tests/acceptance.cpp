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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <phaseperm.hpp>

#include "test_support.hpp"

using namespace phaseperm;

namespace {

constexpr double z_limit = 4.0;

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string &)> check;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool within(const MCEstimate &e, double ref) { return std::abs(e.mean - ref) <= z_limit * e.std_error; }

double leading_probability(const UnitaryMatrix &u, std::size_t n) {
    return std::norm(permanent_ryser(u.matrix().leading_block(n)));
}

// 1. Central equivalence.
bool central_equivalence(std::string &detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::pair<std::size_t, std::size_t> cases[] = {{2, 3}, {2, 4}, {3, 4}, {3, 5}};
    int checked = 0, failed = 0;
    double worst_z = 0.0;
    for (auto [n, m] : cases)
        for (std::uint64_t i = 0; i < 5; ++i) {
            const UnitaryMatrix u = haar_random_unitary(m, 10'000 * n + 100 * m + i);
            const double ref = leading_probability(u, n);
            for (auto form : all_integral_forms) {
                const MCEstimate e = mc_probability(u, n, form, {1'000'000, 7 + i, 0});
                const double z = z_score(e.mean, e.std_error, ref, 0.0);
                worst_z = std::max(worst_z, std::abs(z));
                ++checked;
                if (!(std::abs(z) <= z_limit)) {
                    ++failed;
                    std::printf("    (n,m)=(%zu,%zu) U#%llu %s: %.6f +- %.6f vs %.6f (z=%.2f)\n", n, m,
                                static_cast<unsigned long long>(i), e.form.c_str(), e.mean, e.std_error,
                                ref, z);
                }
            }
        }
    const double elapsed = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d estimates, %d outside 4 sigma, max |z| = %.2f, %.1f s", checked,
                  failed, worst_z, elapsed);
    detail = buf;
    return failed == 0 && elapsed < 120.0;
}

// 2. Permutation networks. The separable value is 1 only when sigma keeps the
// photons inside the first n modes, so sigma is drawn from that subgroup.
bool permutation_case(std::string &detail) {
    std::mt19937_64 gen(2);
    int failed = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(gen);
        const std::size_t m = std::uniform_int_distribution<std::size_t>(n, 8)(gen);
        std::vector<std::size_t> v(m);
        std::iota(v.begin(), v.end(), std::size_t{1});
        std::shuffle(v.begin(), v.begin() + static_cast<long>(n), gen);
        std::shuffle(v.begin() + static_cast<long>(n), v.end(), gen);
        const PermutationSpec sigma(v);
        const double analytic = analytic_permutation_probability(sigma, n);
        const MCEstimate e =
            mc_probability(permutation_unitary(sigma), n, IntegralForm::full, {100'000, 200 + static_cast<unsigned>(trial), 0});
        if (analytic != 1.0 || !within(e, 1.0)) {
            ++failed;
            std::printf("    n=%zu m=%zu analytic=%.17g mc=%.5f +- %.5f\n", n, m, analytic, e.mean, e.std_error);
        }
    }
    detail = std::to_string(10 - failed) + "/10 permutations";
    return failed == 0;
}

// 3. Gaussian identities.
bool identity_suite(std::string &detail) {
    bool ok = true;
    for (auto id : all_gaussian_identities) {
        const auto t0 = std::chrono::steady_clock::now();
        const MCEstimate e = verify_identity(id, {1'000'000, 1, 0});
        const double elapsed = seconds_since(t0);
        const double ref = identity_reference(id);
        const bool pass = within(e, ref) && elapsed < 5.0;
        ok = ok && pass;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s %.5f+-%.5f (ref %.5f, %.2fs); ", e.form.c_str(), e.mean, e.std_error,
                      ref, elapsed);
        detail += buf;
    }
    return ok;
}

// 4. Permanent oracles.
bool permanent_oracles(std::string &detail) {
    double worst_naive = 0.0, worst_macmahon = 0.0;
    for (int i = 0; i < 100; ++i) {
        const ComplexMatrix a = fixtures::random_complex_matrix(1 + i % 8, 4000 + i);
        worst_naive = std::max(worst_naive, fixtures::relative_error(permanent_ryser(a), permanent_naive(a)));
    }
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::uint64_t s = 0; s < 5; ++s) {
            const UnitaryMatrix u = haar_random_unitary(8, 500 + 10 * n + s);
            worst_macmahon = std::max(worst_macmahon, fixtures::relative_error(permanent_via_macmahon(u, n),
                                                                               permanent_ryser(u.matrix().leading_block(n))));
        }
    std::mt19937_64 gen(4);
    bool exact = true;
    for (std::size_t m = 1; m <= 12; ++m)
        for (int t = 0; t < 3; ++t) {
            const UnitaryMatrix p = permutation_unitary(PermutationSpec(fixtures::random_mapping(m, gen)));
            exact = exact && permanent_ryser(p.matrix()) == complex_t(1.0, 0.0);
            if (m <= naive_permanent_max_dim)
                exact = exact && permanent_naive(p.matrix()) == complex_t(1.0, 0.0);
        }
    char buf[200];
    std::snprintf(buf, sizeof buf, "ryser/naive max rel %.2e, ryser/macmahon max rel %.2e, perm(sigma)==1 %s",
                  worst_naive, worst_macmahon, exact ? "yes" : "no");
    detail = buf;
    return worst_naive <= 1e-10 && worst_macmahon <= 1e-9 && exact;
}

// 5. Fock consistency.
bool fock_consistency(std::string &detail) {
    double worst_amp = 0.0, worst_norm = 0.0;
    for (auto [n, m] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 4}})
        for (std::uint64_t s = 0; s < 5; ++s) {
            const UnitaryMatrix u = haar_random_unitary(m, 700 + 10 * m + s);
            for (const auto &t : enumerate_configurations(static_cast<unsigned>(n), m))
                worst_amp = std::max(worst_amp, std::abs(amplitude(u, n, t) - fock_oracle_amplitude(u, n, t)));
            worst_norm = std::max(worst_norm, std::abs(output_distribution(u, n).total_probability() - 1.0));
        }
    const bool counts = configuration_count(2, 2) == 3 && configuration_count(3, 5) == 35 &&
                        enumerate_configurations(2, 2).size() == 3 && enumerate_configurations(3, 5).size() == 35 &&
                        configuration_count(2, 3) == enumerate_configurations(2, 3).size() &&
                        configuration_count(3, 4) == enumerate_configurations(3, 4).size();
    char buf[160];
    std::snprintf(buf, sizeof buf, "max |amp - oracle| %.2e, max |sum P - 1| %.2e, counts %s", worst_amp,
                  worst_norm, counts ? "ok" : "wrong");
    detail = buf;
    return worst_amp <= 1e-10 && worst_norm <= 1e-9 && counts;
}

// 6. Hong-Ou-Mandel.
bool hong_ou_mandel(std::string &detail) {
    const double s = 1.0 / std::sqrt(2.0);
    const UnitaryMatrix bs = UnitaryMatrix::from(ComplexMatrix(2, 2, {s, s, s, -s}), 1e-15);
    const double p11 = std::norm(amplitude(bs, 2, PhotonConfiguration({1, 1})));
    bool ok = p11 == 0.0;
    detail = "|gamma_11|^2 = " + std::to_string(p11) + "; ";
    for (auto form : all_integral_forms) {
        const MCEstimate e = mc_probability(bs, 2, form, {100'000, 66, 0});
        ok = ok && std::abs(e.mean) <= z_limit * e.std_error;
        char buf[80];
        std::snprintf(buf, sizeof buf, "%s %.4f+-%.4f; ", e.form.c_str(), e.mean, e.std_error);
        detail += buf;
    }
    return ok;
}

// 7. REDUCED form sees only the leading block.
bool submatrix_dependence(std::string &detail) {
    int checked = 0;
    bool ok = true;
    for (auto [n, m] : {std::pair<std::size_t, std::size_t>{1, 3}, {2, 4}, {3, 5}})
        for (std::uint64_t s = 0; s < 3; ++s) {
            const UnitaryMatrix u = haar_random_unitary(m, 900 + 10 * m + s);
            const UnitaryMatrix a = haar_random_unitary(m - n, 950 + s);
            const UnitaryMatrix b = haar_random_unitary(m - n, 970 + s);
            ComplexMatrix left = ComplexMatrix::identity(m), right = ComplexMatrix::identity(m);
            for (std::size_t r = 0; r < m - n; ++r)
                for (std::size_t c = 0; c < m - n; ++c) {
                    left(n + r, n + c) = a(r, c);
                    right(n + r, n + c) = b(r, c);
                }
            const UnitaryMatrix v = UnitaryMatrix::from(left * u.matrix() * right, 1e-12);
            const MCEstimate eu = mc_probability(u, n, IntegralForm::reduced, {200'000, 31, 0});
            const MCEstimate ev = mc_probability(v, n, IntegralForm::reduced, {200'000, 31, 0});
            ok = ok && u.matrix() != v.matrix() && eu.mean == ev.mean && eu.std_error == ev.std_error;
            ++checked;
        }
    detail = std::to_string(checked) + " modified unitaries, REDUCED means bit-identical";
    return ok;
}

// 8. Worker-count determinism.
bool determinism(std::string &detail) {
    const UnitaryMatrix u = haar_random_unitary(4, 8);
    int checked = 0;
    bool ok = true;
    auto same = [&](auto &&estimate) {
        const MCEstimate one = estimate(1u);
        for (unsigned w : {2u, 8u}) {
            const MCEstimate other = estimate(w);
            ok = ok && one.mean == other.mean && one.std_error == other.std_error;
        }
        ++checked;
    };
    for (auto form : all_integral_forms)
        same([&](unsigned w) { return mc_probability(u, 3, form, {300'001, 5, w}); });
    for (auto id : all_gaussian_identities)
        same([&](unsigned w) { return verify_identity(id, {300'001, 5, w}); });
    same([&](unsigned w) { return wigner_normalization(u, 2, {300'001, 5, w}); });
    for (std::size_t f = 0; f < 4; ++f)
        same([&](unsigned w) { return cross_form_report(u, 2, {100'000, 9, w}).forms[f].estimate; });
    detail = std::to_string(checked) + " estimators bit-identical at 1, 2, 8 workers";
    return ok;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "central equivalence, four integral forms vs Ryser", central_equivalence},
        {2, "permutation networks, analytic and FULL Monte-Carlo", permutation_case},
        {3, "Gaussian identities IDZER/IDPI/IDZER2/IDPI2", identity_suite},
        {4, "permanent oracles: naive, Ryser, MacMahon", permanent_oracles},
        {5, "Fock amplitudes vs direct expansion, normalization, counts", fock_consistency},
        {6, "Hong-Ou-Mandel zero", hong_ou_mandel},
        {7, "REDUCED form depends only on the leading n x n block", submatrix_dependence},
        {8, "Monte-Carlo determinism across worker counts", determinism},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        std::string detail;
        bool pass = false;
        try {
            pass = c.check(detail);
        } catch (const std::exception &e) {
            detail = std::string("exception: ") + e.what();
        }
        failures += !pass;
        std::printf("[%s] criterion %d: %s -- %s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
