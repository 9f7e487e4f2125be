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

#include <cstdint>
#include <random>

namespace phaseperm {

/// SplitMix64 finalizer; used to turn (seed, index) pairs into engine seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

using engine_t = std::mt19937_64;

inline engine_t make_engine(std::uint64_t seed) { return engine_t(splitmix64(seed)); }

/**
 * Independent substream `index` of the base `seed`.
 *
 * The result depends only on (seed, index), never on which thread asks for
 * it, so chunked Monte-Carlo runs reproduce bit-for-bit at any worker count.
 */
inline engine_t substream(std::uint64_t seed, std::uint64_t index) {
    return engine_t(splitmix64(splitmix64(seed) ^ splitmix64(~index)));
}

} // namespace phaseperm
