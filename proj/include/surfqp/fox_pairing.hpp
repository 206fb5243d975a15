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

#include "surfqp/group_algebra.hpp"

#include <functional>
#include <span>
#include <vector>

namespace surfqp {

// A bilinear pairing given by its values on pairs of group elements.
using WordPairing = std::function<AlgElem(const Word &, const Word &)>;

AlgElem apply_pairing(const WordPairing &rho, const AlgElem &a, const AlgElem &b);

// rho_e(a, b) = (a - eps(a)) e (b - eps(b))
AlgElem inner_pairing(const AlgElem &e, const AlgElem &a, const AlgElem &b);
WordPairing inner_pairing(const AlgElem &e);

// The transpose pairing, computed on group-likes as a S(rho(b, a)) b.
WordPairing transpose(WordPairing rho);
// The transpose computed as S rho(S b, S a); agrees with transpose() for Fox pairings.
WordPairing transpose_by_antipode(WordPairing rho);

// The homotopy intersection pairing eta of a surface, determined by its
// values on ordered generator pairs and the Fox product rules.
class FoxPairingTable {
public:
    explicit FoxPairingTable(const SurfaceSignature &sig);

    const SurfaceSignature &signature() const { return sig_; }

    // Stored value for generators x <= y. Throws std::invalid_argument when x > y.
    AlgElem base(int x, int y) const;
    // Any ordered pair of generators; x > y goes through the transpose identity.
    const AlgElem &generator_value(int x, int y) const { return values_[x * sig_.rank() + y]; }
    AlgElem letter_value(Letter a, Letter b) const;

    AlgElem eta(const Word &a, const Word &b) const;
    // Accepts letter sequences that need not be reduced.
    AlgElem eta_letters(std::span<const Letter> a, std::span<const Letter> b) const;
    AlgElem eta(const AlgElem &a, const AlgElem &b) const;

    // eta^s = 2 eta + rho_1
    AlgElem eta_s(const Word &a, const Word &b) const;
    AlgElem eta_s(const AlgElem &a, const AlgElem &b) const;

    WordPairing pairing() const;
    WordPairing skew_pairing() const;

private:
    SurfaceSignature sig_;
    std::vector<AlgElem> values_;
};

} // namespace surfqp
