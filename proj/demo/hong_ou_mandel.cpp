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

// Two photons on a balanced beam splitter: the coincidence amplitude is a
// vanishing permanent, and the phase-space integral agrees.

#include <cmath>
#include <cstdio>

#include <phaseperm.hpp>

int main() {
    using namespace phaseperm;
    const double s = 1.0 / std::sqrt(2.0);
    const auto bs = UnitaryMatrix::from(ComplexMatrix(2, 2, {s, s, s, -s}), 1e-15);

    for (const auto &e : output_distribution(bs, 2).entries)
        std::printf("T = (%s)  P = %.6f\n", e.configuration.to_string().c_str(), e.probability);

    const MCEstimate est = mc_probability(bs, 2, IntegralForm::full, {1'000'000, 2024, 0});
    std::printf("FULL integral: %.5f +- %.5f (exact 0)\n", est.mean, est.std_error);
}
