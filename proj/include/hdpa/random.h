/*
 * SPDX-FileCopyrightText: <text>Copyright 2026 The hdpa-sim authors</text>
 * SPDX-License-Identifier: Apache-2.0
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

// Seeded random streams. Everything here is built directly on
// std::mt19937_64 output so results do not depend on the standard
// library's distribution implementations.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace hdpa {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; mixes an experiment seed with a stream label.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Stream labels used with derive_seed.
enum class Stream : uint64_t {
    Sequence = 1,
    Key = 2,
    ScalarBlinding = 3,
    PointBlinding = 4,
    Projective = 5,
    Noise = 6,
    Point = 7,
};

inline Rng make_rng(uint64_t seed, Stream stream) {
    return Rng(derive_seed(seed, static_cast<uint64_t>(stream)));
}

/// Unbiased integer in [0, bound) by rejection.
inline uint64_t uniform_below(Rng &rng, uint64_t bound) {
    const uint64_t limit = bound == 0 ? 0 : (0 - bound) % bound;
    for (;;) {
        const uint64_t r = rng();
        if (r >= limit)
            return r % bound;
    }
}

/// Uniform double in (0, 1).
inline double uniform_open01(Rng &rng) {
    return (double(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal sample, Box-Muller (one value per call).
inline double standard_normal(Rng &rng) {
    const double u1 = uniform_open01(rng);
    const double u2 = uniform_open01(rng);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace hdpa
