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

#include "surfqp/fox_pairing.hpp"

#include <memory>
#include <stdexcept>

namespace surfqp {

AlgElem apply_pairing(const WordPairing &rho, const AlgElem &a, const AlgElem &b) {
    AlgElem out;
    for (const auto &[x, cx] : a)
        for (const auto &[y, cy] : b) {
            AlgElem v = rho(x, y);
            v *= cx * cy;
            out += v;
        }
    return out;
}

AlgElem inner_pairing(const AlgElem &e, const AlgElem &a, const AlgElem &b) {
    const AlgElem left = a - scalar(counit(a));
    const AlgElem right = b - scalar(counit(b));
    return left * e * right;
}

WordPairing inner_pairing(const AlgElem &e) {
    return [e](const Word &a, const Word &b) { return inner_pairing(e, AlgElem(a), AlgElem(b)); };
}

WordPairing transpose(WordPairing rho) {
    return [rho = std::move(rho)](const Word &a, const Word &b) { return a * antipode(rho(b, a)) * b; };
}

WordPairing transpose_by_antipode(WordPairing rho) {
    return [rho = std::move(rho)](const Word &a, const Word &b) { return antipode(rho(b.inverse(), a.inverse())); };
}

FoxPairingTable::FoxPairingTable(const SurfaceSignature &sig) : sig_(sig) {
    sig_.validate();
    const int n = sig_.rank();
    values_.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            values_[x * n + y] = base(x, y);
    // eta(x, y) = x S(etabar(y, x)) y with etabar = -eta - rho_1
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < x; ++y) {
            const Word gx = Word::generator(x);
            const Word gy = Word::generator(y);
            const AlgElem bar = -values_[y * n + x] - inner_pairing(unit(), AlgElem(gy), AlgElem(gx));
            values_[x * n + y] = gx * antipode(bar) * gy;
        }
}

AlgElem FoxPairingTable::base(int x, int y) const {
    if (x > y)
        throw std::invalid_argument("base table holds ordered pairs x <= y only");
    const Word gx = Word::generator(x);
    if (x == y) {
        switch (sig_.kind(x)) {
        case SurfaceSignature::Kind::Q:
            return AlgElem(gx) - unit();
        case SurfaceSignature::Kind::P:
        case SurfaceSignature::Kind::Z:
            return AlgElem(gx) - AlgElem(gx * gx);
        }
    }
    if (sig_.kind(x) == SurfaceSignature::Kind::P && y == x + 1)
        return AlgElem(gx);
    return AlgElem();
}

AlgElem FoxPairingTable::letter_value(Letter a, Letter b) const {
    AlgElem v = generator_value(letter_generator(a), letter_generator(b));
    if (letter_exponent(a) < 0)
        v = -(Word::generator(letter_generator(a), -1) * v);
    if (letter_exponent(b) < 0)
        v = -(v * Word::generator(letter_generator(b), -1));
    return v;
}

// eta(a1...an, b1...bm) = sum_{i,j} a1...a(i-1) eta(ai, bj) b(j+1)...bm,
// the unrolled form of the two Fox product rules.
AlgElem FoxPairingTable::eta_letters(std::span<const Letter> a, std::span<const Letter> b) const {
    AlgElem out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Word prefix = Word::reduce(a.first(i));
        for (std::size_t j = 0; j < b.size(); ++j) {
            const AlgElem v = letter_value(a[i], b[j]);
            if (v.is_zero())
                continue;
            const Word suffix = Word::reduce(b.subspan(j + 1));
            out += prefix * v * suffix;
        }
    }
    return out;
}

AlgElem FoxPairingTable::eta(const Word &a, const Word &b) const { return eta_letters(a.letters(), b.letters()); }

AlgElem FoxPairingTable::eta(const AlgElem &a, const AlgElem &b) const { return apply_pairing(pairing(), a, b); }

AlgElem FoxPairingTable::eta_s(const Word &a, const Word &b) const {
    AlgElem v = eta(a, b);
    v *= 2;
    v += inner_pairing(unit(), AlgElem(a), AlgElem(b));
    return v;
}

AlgElem FoxPairingTable::eta_s(const AlgElem &a, const AlgElem &b) const {
    return apply_pairing(skew_pairing(), a, b);
}

WordPairing FoxPairingTable::pairing() const {
    auto self = std::make_shared<const FoxPairingTable>(*this);
    return [self](const Word &a, const Word &b) { return self->eta(a, b); };
}

WordPairing FoxPairingTable::skew_pairing() const {
    auto self = std::make_shared<const FoxPairingTable>(*this);
    return [self](const Word &a, const Word &b) { return self->eta_s(a, b); };
}

} // namespace surfqp
