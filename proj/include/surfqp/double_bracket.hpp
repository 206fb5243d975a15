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

#include "surfqp/fox_pairing.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace surfqp {

// A bilinear double bracket given by its values on pairs of group elements.
using WordDoubleBracket = std::function<Tensor2(const Word &, const Word &)>;

Tensor2 apply_bracket(const WordDoubleBracket &dbl, const AlgElem &a, const AlgElem &b);

// <<a, b>>^rho = sum_w c_w (b w^-1 a) ⊗ w for group-likes, where rho(a, b) = sum_w c_w w.
Tensor2 dbl_from_pairing(const WordPairing &rho, const Word &a, const Word &b);
Tensor2 dbl_from_pairing(const WordPairing &rho, const AlgElem &a, const AlgElem &b);
WordDoubleBracket dbl_from_pairing(WordPairing rho);

// The surface double bracket <<-,->>^s, computed from its values on generator
// pairs with the derivation rules (outer structure in the second argument,
// inner structure in the first).
class SurfaceDoubleBracket {
public:
    explicit SurfaceDoubleBracket(const SurfaceSignature &sig);

    const SurfaceSignature &signature() const { return sig_; }
    const Tensor2 &generator_value(int x, int y) const { return values_[x * sig_.rank() + y]; }
    Tensor2 letter_value(Letter a, Letter b) const;

    Tensor2 operator()(const Word &a, const Word &b) const;
    Tensor2 operator()(const AlgElem &a, const AlgElem &b) const;
    WordDoubleBracket function() const;

private:
    SurfaceSignature sig_;
    std::vector<Tensor2> values_;
};

// The associated triple bracket, sum over i of P_312^i (dbl ⊗ id)(id ⊗ dbl) P_312^-i.
Tensor3 triple(const WordDoubleBracket &dbl, const Word &a, const Word &b, const Word &c);
Tensor3 triple(const WordDoubleBracket &dbl, const AlgElem &a, const AlgElem &b, const AlgElem &c);

// a⊗1⊗bc + 1⊗ab⊗c + ca⊗b⊗1 + c⊗a⊗b - 1⊗a⊗bc - a⊗b⊗c - ca⊗1⊗b - c⊗ab⊗1
Tensor3 triple_E(const Word &a, const Word &b, const Word &c);
Tensor3 triple_E(const AlgElem &a, const AlgElem &b, const AlgElem &c);

// <a, b> = <<a, b>>' <<a, b>>''
AlgElem angle(const WordDoubleBracket &dbl, const AlgElem &a, const AlgElem &b);

using CyclicAlgElem = LinearCombination<CyclicWord>;

CyclicAlgElem project_cyclic(const AlgElem &x);
AlgElem representatives(const CyclicAlgElem &x);

// Half the cyclic projection of <a, b> under <<-,->>^s.
CyclicAlgElem goldman(const SurfaceDoubleBracket &dbl, const CyclicWord &a, const CyclicWord &b);
CyclicAlgElem goldman(const SurfaceDoubleBracket &dbl, const CyclicAlgElem &a, const CyclicAlgElem &b);

struct QuasiPoissonReport {
    bool passed = true;
    int checked = 0;
    std::optional<std::array<Word, 3>> witness;
    Tensor3 triple_value;
    Tensor3 expected;
};

// Compares triple(dbl) with triple_E on all generator triples, then on
// `trials` random word triples (trial t uses Rng(seed, t)). Stops at the
// first counterexample.
QuasiPoissonReport is_quasi_poisson(const WordDoubleBracket &dbl, const SurfaceSignature &sig, int trials,
                                    std::uint64_t seed, int max_word_length);

} // namespace surfqp
