/*
 * Copyright 2026 The surfqp Authors
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

#include "surfqp/free_group.hpp"

#include <cstdint>
#include <random>

namespace surfqp {

// Deterministic per-trial random stream.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. It is seeded with splitmix64(seed) ^ splitmix64(stream + 1).
// Bounded integers use rejection sampling on the raw 64-bit output, so the
// sampled values do not depend on the standard library's distributions.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next() { return engine_(); }
    // Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);
    // Uniform in [lo, hi].
    int uniform(int lo, int hi);

    static std::uint64_t splitmix64(std::uint64_t x);

private:
    std::mt19937_64 engine_;
};

// Draws a length uniformly from [1, max_length], then that many letters
// uniformly from the signed alphabet, then reduces.
Word random_word(const SurfaceSignature &sig, Rng &rng, int max_length);

} // namespace surfqp
