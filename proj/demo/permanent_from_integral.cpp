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

// Compares |perm(U^{n x n})|^2 from Ryser, MacMahon and the four integral
// forms for a Haar-random interferometer.

#include <cstdio>
#include <cstdlib>

#include <phaseperm.hpp>

int main(int argc, char **argv) {
    using namespace phaseperm;
    const std::size_t m = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
    const std::size_t n = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 3;
    const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;

    const UnitaryMatrix u = haar_random_unitary(m, seed);
    std::printf("Ryser    |perm|^2 = %.8f\n", std::norm(permanent_ryser(u.matrix().leading_block(n))));
    std::printf("MacMahon |perm|^2 = %.8f\n", std::norm(permanent_via_macmahon(u, n)));

    const CrossFormReport r = cross_form_report(u, n, {1'000'000, seed, 0});
    for (const auto &f : r.forms)
        std::printf("%-12s %.6f +- %.6f  z = %+.2f\n", f.estimate.form.c_str(), f.estimate.mean,
                    f.estimate.std_error, f.z);
}
