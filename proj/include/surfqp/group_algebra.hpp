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
#include "surfqp/rational.hpp"

#include <array>
#include <map>

namespace surfqp {

// Finite Q-linear combination of basis keys. Zero coefficients are never
// stored, so equality is structural.
template <class Key> class LinearCombination {
public:
    using Terms = std::map<Key, Rational>;

    LinearCombination() = default;
    explicit LinearCombination(const Key &key, const Rational &coeff = 1) { add(key, coeff); }

    void add(const Key &key, const Rational &coeff) {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    const Terms &terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Key &key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    LinearCombination &operator+=(const LinearCombination &o) {
        for (const auto &[k, c] : o.terms_)
            add(k, c);
        return *this;
    }
    LinearCombination &operator-=(const LinearCombination &o) {
        for (const auto &[k, c] : o.terms_)
            add(k, -c);
        return *this;
    }
    LinearCombination &operator*=(const Rational &s) {
        if (s == 0)
            terms_.clear();
        for (auto &[k, c] : terms_)
            c *= s;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination &b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination &b) { return a -= b; }
    friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
    friend LinearCombination operator*(const Rational &s, LinearCombination a) { return a *= s; }
    friend bool operator==(const LinearCombination &a, const LinearCombination &b) = default;

private:
    Terms terms_;
};

using AlgElem = LinearCombination<Word>;
using Tensor2 = LinearCombination<std::array<Word, 2>>;
using Tensor3 = LinearCombination<std::array<Word, 3>>;

inline AlgElem unit() { return AlgElem(Word()); }
inline AlgElem scalar(const Rational &q) { return AlgElem(Word(), q); }

AlgElem operator*(const AlgElem &x, const AlgElem &y);
AlgElem operator*(const Word &w, const AlgElem &x);
AlgElem operator*(const AlgElem &x, const Word &w);

Rational counit(const AlgElem &x);
AlgElem antipode(const AlgElem &x);
Tensor2 comultiply(const AlgElem &x);

Tensor2 tensor(const AlgElem &a, const AlgElem &b);
Tensor3 tensor(const AlgElem &a, const AlgElem &b, const AlgElem &c);
Tensor2 tensor(const Word &a, const Word &b, const Rational &coeff = 1);
Tensor3 tensor(const Word &a, const Word &b, const Word &c, const Rational &coeff = 1);

// P_{i1 i2}: the factor at output position k is x^{(perm[k])}, 1-based.
Tensor2 permute(const Tensor2 &t, const std::array<int, 2> &perm);
Tensor3 permute(const Tensor3 &t, const std::array<int, 3> &perm);

// l (x1 ⊗ ... ⊗ xn) r = l x1 ⊗ ... ⊗ xn r
Tensor2 outer_act(const AlgElem &l, const Tensor2 &t, const AlgElem &r);
Tensor3 outer_act(const AlgElem &l, const Tensor3 &t, const AlgElem &r);
Tensor2 outer_act(const Word &l, const Tensor2 &t, const Word &r);

// l * (a1 ⊗ a2) * r = a1 r ⊗ l a2
Tensor2 inner_act(const AlgElem &l, const Tensor2 &t, const AlgElem &r);
Tensor2 inner_act(const Word &l, const Tensor2 &t, const Word &r);

AlgElem multiply_factors(const Tensor2 &t);
AlgElem m3(const Tensor3 &t);

} // namespace surfqp
