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

#include "surfqp/double_bracket.hpp"
#include "surfqp/random.hpp"

#include <memory>

namespace surfqp {

Tensor2 apply_bracket(const WordDoubleBracket &dbl, const AlgElem &a, const AlgElem &b) {
    Tensor2 out;
    for (const auto &[x, cx] : a)
        for (const auto &[y, cy] : b) {
            Tensor2 v = dbl(x, y);
            v *= cx * cy;
            out += v;
        }
    return out;
}

Tensor2 dbl_from_pairing(const WordPairing &rho, const Word &a, const Word &b) {
    Tensor2 out;
    for (const auto &[w, c] : rho(a, b))
        out.add({b * w.inverse() * a, w}, c);
    return out;
}

Tensor2 dbl_from_pairing(const WordPairing &rho, const AlgElem &a, const AlgElem &b) {
    return apply_bracket(dbl_from_pairing(rho), a, b);
}

WordDoubleBracket dbl_from_pairing(WordPairing rho) {
    return [rho = std::move(rho)](const Word &a, const Word &b) { return dbl_from_pairing(rho, a, b); };
}

SurfaceDoubleBracket::SurfaceDoubleBracket(const SurfaceSignature &sig) : sig_(sig) {
    sig_.validate();
    using Kind = SurfaceSignature::Kind;
    const int n = sig_.rank();
    values_.resize(static_cast<std::size_t>(n) * n);
    const Word one;
    for (int x = 0; x < n; ++x) {
        const Word gx = Word::generator(x);
        const Word xx = gx * gx;
        Tensor2 &diag = values_[x * n + x];
        if (sig_.kind(x) == Kind::Q) {
            diag.add({one, xx}, 1);
            diag.add({xx, one}, -1);
        } else {
            diag.add({xx, one}, 1);
            diag.add({one, xx}, -1);
        }
        for (int y = x + 1; y < n; ++y) {
            const Word gy = Word::generator(y);
            Tensor2 &v = values_[x * n + y];
            v.add({one, gx * gy}, 1);
            v.add({gy * gx, one}, 1);
            v.add({gx, gy}, -1);
            const bool same_handle = sig_.kind(x) == Kind::P && y == x + 1;
            v.add({gy, gx}, same_handle ? 1 : -1);
            values_[y * n + x] = -permute(v, {2, 1});
        }
    }
}

Tensor2 SurfaceDoubleBracket::letter_value(Letter a, Letter b) const {
    Tensor2 v = generator_value(letter_generator(a), letter_generator(b));
    if (letter_exponent(a) < 0) {
        const Word inv = Word::generator(letter_generator(a), -1);
        v = -inner_act(inv, v, inv);
    }
    if (letter_exponent(b) < 0) {
        const Word inv = Word::generator(letter_generator(b), -1);
        v = -outer_act(inv, v, inv);
    }
    return v;
}

// Term (i, j) is b_<j X' a_>i ⊗ a_<i X'' b_>j where X = <<a_i, b_j>>.
Tensor2 SurfaceDoubleBracket::operator()(const Word &a, const Word &b) const {
    Tensor2 out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Word a_before = a.slice(0, i);
        const Word a_after = a.slice(i + 1, a.size());
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Word b_before = b.slice(0, j);
            const Word b_after = b.slice(j + 1, b.size());
            for (const auto &[key, c] : letter_value(a[i], b[j]))
                out.add({b_before * key[0] * a_after, a_before * key[1] * b_after}, c);
        }
    }
    return out;
}

Tensor2 SurfaceDoubleBracket::operator()(const AlgElem &a, const AlgElem &b) const {
    return apply_bracket(function(), a, b);
}

WordDoubleBracket SurfaceDoubleBracket::function() const {
    auto self = std::make_shared<const SurfaceDoubleBracket>(*this);
    return [self](const Word &a, const Word &b) { return (*self)(a, b); };
}

namespace {

// (dbl ⊗ id)(a ⊗ <<b, c>>)
Tensor3 left_nested(const WordDoubleBracket &dbl, const Word &a, const Word &b, const Word &c) {
    Tensor3 out;
    for (const auto &[outer_key, outer_c] : dbl(b, c))
        for (const auto &[inner_key, inner_c] : dbl(a, outer_key[0]))
            out.add({inner_key[0], inner_key[1], outer_key[1]}, outer_c * inner_c);
    return out;
}

} // namespace

Tensor3 triple(const WordDoubleBracket &dbl, const Word &a, const Word &b, const Word &c) {
    Tensor3 out = left_nested(dbl, a, b, c);
    out += permute(left_nested(dbl, b, c, a), {3, 1, 2});
    out += permute(left_nested(dbl, c, a, b), {2, 3, 1});
    return out;
}

Tensor3 triple(const WordDoubleBracket &dbl, const AlgElem &a, const AlgElem &b, const AlgElem &c) {
    Tensor3 out;
    for (const auto &[x, cx] : a)
        for (const auto &[y, cy] : b)
            for (const auto &[z, cz] : c) {
                Tensor3 v = triple(dbl, x, y, z);
                v *= cx * cy * cz;
                out += v;
            }
    return out;
}

Tensor3 triple_E(const Word &a, const Word &b, const Word &c) {
    const Word one;
    Tensor3 out;
    out.add({a, one, b * c}, 1);
    out.add({one, a * b, c}, 1);
    out.add({c * a, b, one}, 1);
    out.add({c, a, b}, 1);
    out.add({one, a, b * c}, -1);
    out.add({a, b, c}, -1);
    out.add({c * a, one, b}, -1);
    out.add({c, a * b, one}, -1);
    return out;
}

Tensor3 triple_E(const AlgElem &a, const AlgElem &b, const AlgElem &c) {
    Tensor3 out;
    for (const auto &[x, cx] : a)
        for (const auto &[y, cy] : b)
            for (const auto &[z, cz] : c) {
                Tensor3 v = triple_E(x, y, z);
                v *= cx * cy * cz;
                out += v;
            }
    return out;
}

AlgElem angle(const WordDoubleBracket &dbl, const AlgElem &a, const AlgElem &b) {
    return multiply_factors(apply_bracket(dbl, a, b));
}

CyclicAlgElem project_cyclic(const AlgElem &x) {
    CyclicAlgElem out;
    for (const auto &[w, c] : x)
        out.add(CyclicWord(w), c);
    return out;
}

AlgElem representatives(const CyclicAlgElem &x) {
    AlgElem out;
    for (const auto &[w, c] : x)
        out.add(w.word(), c);
    return out;
}

CyclicAlgElem goldman(const SurfaceDoubleBracket &dbl, const CyclicWord &a, const CyclicWord &b) {
    CyclicAlgElem out = project_cyclic(multiply_factors(dbl(a.word(), b.word())));
    out *= Rational(1, 2);
    return out;
}

CyclicAlgElem goldman(const SurfaceDoubleBracket &dbl, const CyclicAlgElem &a, const CyclicAlgElem &b) {
    CyclicAlgElem out;
    for (const auto &[x, cx] : a)
        for (const auto &[y, cy] : b) {
            CyclicAlgElem v = goldman(dbl, x, y);
            v *= cx * cy;
            out += v;
        }
    return out;
}

QuasiPoissonReport is_quasi_poisson(const WordDoubleBracket &dbl, const SurfaceSignature &sig, int trials,
                                    std::uint64_t seed, int max_word_length) {
    QuasiPoissonReport report;
    auto check = [&](const Word &a, const Word &b, const Word &c) {
        ++report.checked;
        Tensor3 lhs = triple(dbl, a, b, c);
        Tensor3 rhs = triple_E(a, b, c);
        if (lhs == rhs)
            return true;
        report.passed = false;
        report.witness = {a, b, c};
        report.triple_value = std::move(lhs);
        report.expected = std::move(rhs);
        return false;
    };
    const int n = sig.rank();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (!check(Word::generator(x), Word::generator(y), Word::generator(z)))
                    return report;
    for (int t = 0; t < trials; ++t) {
        Rng rng(seed, static_cast<std::uint64_t>(t));
        const Word a = random_word(sig, rng, max_word_length);
        const Word b = random_word(sig, rng, max_word_length);
        const Word c = random_word(sig, rng, max_word_length);
        if (!check(a, b, c))
            return report;
    }
    return report;
}

} // namespace surfqp
