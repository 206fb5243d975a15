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

#include "surfqp/random.hpp"

#include <stdexcept>
#include <vector>

namespace surfqp {

std::uint64_t Rng::splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(splitmix64(seed) ^ splitmix64(stream + 1)) {}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

int Rng::uniform(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Word random_word(const SurfaceSignature &sig, Rng &rng, int max_length) {
    const int alphabet = 2 * sig.rank();
    if (alphabet == 0 || max_length < 1)
        return Word();
    const int length = rng.uniform(1, max_length);
    std::vector<Letter> raw;
    raw.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
        const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(alphabet)));
        raw.push_back(make_letter(k / 2, k % 2 == 0 ? 1 : -1));
    }
    return Word::reduce(raw);
}

} // namespace surfqp
