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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include <phaseperm/linops.hpp>
#include <phaseperm/macmahon.hpp>
#include <phaseperm/permanent.hpp>

#include "test_support.hpp"

using namespace phaseperm;
using phaseperm::fixtures::relative_error;
using Poly = SparsePolynomial;

namespace {
UnitaryMatrix identity_unitary(std::size_t n) {
    return permutation_unitary(PermutationSpec::identity(n));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        c = c * (n - k + i) / i;
    return c;
}
} // namespace

TEST(BuildLinearForms, IdentityAndOnes) {
    const auto forms = build_linear_forms(identity_unitary(2), 2);
    ASSERT_EQ(forms.size(), 2u);
    EXPECT_EQ(forms[0].size(), 1u);
    EXPECT_EQ(forms[0].coefficient(Poly::variable(0)), complex_t(1.0));
    EXPECT_EQ(forms[1].coefficient(Poly::variable(1)), complex_t(1.0));

    const ComplexMatrix ones(2, 2, {1.0, 1.0, 1.0, 1.0});
    for (const auto &f : build_linear_forms(ones, 2)) {
        EXPECT_EQ(f.size(), 2u);
        EXPECT_EQ(f.coefficient(Poly::variable(0)), complex_t(1.0));
        EXPECT_EQ(f.coefficient(Poly::variable(1)), complex_t(1.0));
    }
}

TEST(BuildLinearForms, ColumnCoefficients) {
    const UnitaryMatrix u = haar_random_unitary(5, 3);
    const auto forms = build_linear_forms(u, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_EQ(forms[j].size(), 3u);
        for (std::size_t k = 0; k < 3; ++k)
            EXPECT_EQ(forms[j].coefficient(Poly::variable(k)), u(k, j));
    }
    EXPECT_THROW(build_linear_forms(u, 6), configuration_mismatch);
}

TEST(ExpandMultilinear, SmallProducts) {
    std::vector<Poly> id_forms = build_linear_forms(identity_unitary(2), 2);
    const Poly p = expand_multilinear(id_forms);
    EXPECT_EQ(p.size(), 1u);
    EXPECT_EQ(p.coefficient(p.all_variables()), complex_t(1.0));

    Poly sum(2);
    sum.add(Poly::variable(0), 1.0);
    sum.add(Poly::variable(1), 1.0);
    const std::vector<Poly> twice{sum, sum};
    const Poly q = expand_multilinear(twice);
    EXPECT_EQ(q.size(), 1u); // alpha_1^2 and alpha_2^2 pruned
    EXPECT_EQ(q.coefficient(q.all_variables()), complex_t(2.0));

    const Poly full = sum.multiply(sum);
    EXPECT_EQ(full.size(), 3u);
    const unsigned sq[] = {2, 0};
    EXPECT_EQ(full.coefficient(Poly::pack(sq)), complex_t(1.0));
}

TEST(ExpandMultilinear, Guards) {
    EXPECT_THROW(expand_multilinear(std::vector<Poly>{}), std::invalid_argument);
    EXPECT_THROW(expand_multilinear(std::vector<Poly>(13, Poly(13))), size_guard_error);
    EXPECT_THROW(Poly(17), size_guard_error);
    EXPECT_THROW(permanent_via_macmahon(haar_random_unitary(13, 1), 13), size_guard_error);
}

TEST(ExpandMultilinear, PruningIsSound) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto forms = build_linear_forms(haar_random_unitary(n + 1, 60 + n), n);
        Poly full = Poly::constant(n, 1.0);
        for (const auto &f : forms)
            full = full.multiply(f, Poly::Pruning::none);
        const Poly pruned = expand_multilinear(forms);
        EXPECT_EQ(pruned.coefficient(pruned.all_variables()), full.coefficient(full.all_variables()));
        for (const auto &[key, c] : pruned.terms()) {
            EXPECT_TRUE(Poly::is_multilinear(key));
            EXPECT_EQ(c, full.coefficient(key));
        }
    }
}

TEST(ExpandMultilinear, TermCountStaysBounded) {
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto forms = build_linear_forms(haar_random_unitary(n, 80 + n), n);
        Poly acc = Poly::constant(n, 1.0);
        std::size_t peak = 0;
        for (const auto &f : forms) {
            acc = acc.multiply(f, Poly::Pruning::multilinear);
            peak = std::max(peak, acc.size());
        }
        EXPECT_LE(peak, binomial(n, n / 2));
        EXPECT_LE(peak, std::size_t{1} << n);
        EXPECT_EQ(acc.size(), 1u);
    }
}

TEST(PermanentViaMacMahon, Examples) {
    EXPECT_EQ(permanent_via_macmahon(identity_unitary(4), 4), complex_t(1.0));
    ComplexMatrix ones(4, 4, std::vector<complex_t>(16, 1.0));
    EXPECT_EQ(permanent_via_macmahon(ones, 3), complex_t(6.0));
    EXPECT_EQ(permanent_via_macmahon(haar_random_unitary(3, 1), 0), complex_t(1.0));
}

TEST(PermanentViaMacMahon, MatchesRyser) {
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::uint64_t s = 0; s < 4; ++s) {
            const UnitaryMatrix u = haar_random_unitary(n + 2, 10 * n + s);
            const complex_t ryser = permanent_ryser(u.matrix().leading_block(n));
            const complex_t mm = permanent_via_macmahon(u, n);
            EXPECT_LE(relative_error(mm, ryser), 1e-9) << n;
            EXPECT_NEAR(std::norm(mm) / std::norm(ryser), 1.0, 1e-9);
        }
    const UnitaryMatrix u6 = haar_random_unitary(6, 600);
    EXPECT_LE(relative_error(expand_multilinear(build_linear_forms(u6, 6)).coefficient(Poly(6).all_variables()),
                             permanent_ryser(u6.matrix())),
              1e-9);
}
