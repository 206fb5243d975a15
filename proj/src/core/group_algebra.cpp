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

#include "surfqp/group_algebra.hpp"

#include <stdexcept>

namespace surfqp {

AlgElem operator*(const AlgElem &x, const AlgElem &y) {
    AlgElem out;
    for (const auto &[a, ca] : x)
        for (const auto &[b, cb] : y)
            out.add(a * b, ca * cb);
    return out;
}

AlgElem operator*(const Word &w, const AlgElem &x) {
    AlgElem out;
    for (const auto &[a, c] : x)
        out.add(w * a, c);
    return out;
}

AlgElem operator*(const AlgElem &x, const Word &w) {
    AlgElem out;
    for (const auto &[a, c] : x)
        out.add(a * w, c);
    return out;
}

Rational counit(const AlgElem &x) {
    Rational sum = 0;
    for (const auto &[w, c] : x)
        sum += c;
    return sum;
}

AlgElem antipode(const AlgElem &x) {
    AlgElem out;
    for (const auto &[w, c] : x)
        out.add(w.inverse(), c);
    return out;
}

Tensor2 comultiply(const AlgElem &x) {
    Tensor2 out;
    for (const auto &[w, c] : x)
        out.add({w, w}, c);
    return out;
}

Tensor2 tensor(const AlgElem &a, const AlgElem &b) {
    Tensor2 out;
    for (const auto &[x, cx] : a)
        for (const auto &[y, cy] : b)
            out.add({x, y}, cx * cy);
    return out;
}

Tensor3 tensor(const AlgElem &a, const AlgElem &b, const AlgElem &c) {
    Tensor3 out;
    for (const auto &[x, cx] : a)
        for (const auto &[y, cy] : b)
            for (const auto &[z, cz] : c)
                out.add({x, y, z}, cx * cy * cz);
    return out;
}

Tensor2 tensor(const Word &a, const Word &b, const Rational &coeff) { return Tensor2({a, b}, coeff); }

Tensor3 tensor(const Word &a, const Word &b, const Word &c, const Rational &coeff) {
    return Tensor3({a, b, c}, coeff);
}

namespace {

template <std::size_t K> void check_permutation(const std::array<int, K> &perm) {
    std::array<bool, K> seen{};
    for (int p : perm) {
        if (p < 1 || p > static_cast<int>(K) || seen[p - 1])
            throw std::invalid_argument("not a permutation");
        seen[p - 1] = true;
    }
}

template <std::size_t K>
LinearCombination<std::array<Word, K>> permute_impl(const LinearCombination<std::array<Word, K>> &t,
                                                    const std::array<int, K> &perm) {
    check_permutation(perm);
    LinearCombination<std::array<Word, K>> out;
    for (const auto &[key, c] : t) {
        std::array<Word, K> moved;
        for (std::size_t k = 0; k < K; ++k)
            moved[k] = key[perm[k] - 1];
        out.add(moved, c);
    }
    return out;
}

template <std::size_t K>
LinearCombination<std::array<Word, K>> outer_impl(const AlgElem &l, const LinearCombination<std::array<Word, K>> &t,
                                                  const AlgElem &r) {
    LinearCombination<std::array<Word, K>> out;
    for (const auto &[key, c] : t)
        for (const auto &[lw, lc] : l)
            for (const auto &[rw, rc] : r) {
                auto moved = key;
                moved.front() = lw * moved.front();
                moved.back() = moved.back() * rw;
                out.add(moved, c * lc * rc);
            }
    return out;
}

} // namespace

Tensor2 permute(const Tensor2 &t, const std::array<int, 2> &perm) { return permute_impl(t, perm); }
Tensor3 permute(const Tensor3 &t, const std::array<int, 3> &perm) { return permute_impl(t, perm); }

Tensor2 outer_act(const AlgElem &l, const Tensor2 &t, const AlgElem &r) { return outer_impl(l, t, r); }
Tensor3 outer_act(const AlgElem &l, const Tensor3 &t, const AlgElem &r) { return outer_impl(l, t, r); }

Tensor2 outer_act(const Word &l, const Tensor2 &t, const Word &r) {
    Tensor2 out;
    for (const auto &[key, c] : t)
        out.add({l * key[0], key[1] * r}, c);
    return out;
}

Tensor2 inner_act(const AlgElem &l, const Tensor2 &t, const AlgElem &r) {
    Tensor2 out;
    for (const auto &[key, c] : t)
        for (const auto &[lw, lc] : l)
            for (const auto &[rw, rc] : r)
                out.add({key[0] * rw, lw * key[1]}, c * lc * rc);
    return out;
}

Tensor2 inner_act(const Word &l, const Tensor2 &t, const Word &r) {
    Tensor2 out;
    for (const auto &[key, c] : t)
        out.add({key[0] * r, l * key[1]}, c);
    return out;
}

AlgElem multiply_factors(const Tensor2 &t) {
    AlgElem out;
    for (const auto &[key, c] : t)
        out.add(key[0] * key[1], c);
    return out;
}

AlgElem m3(const Tensor3 &t) {
    AlgElem out;
    for (const auto &[key, c] : t)
        out.add(key[0] * key[1] * key[2], c);
    return out;
}

} // namespace surfqp
