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
#include "surfqp/fox_pairing.hpp"
#include "surfqp/random.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace surfqp;

namespace {

const SurfaceSignature kSig{2, 2};

Word w(const char *text) { return parse_word(text, kSig); }
AlgElem e(const char *text, const Rational &c = 1) { return AlgElem(w(text), c); }

} // namespace

TEST_CASE("stored generator values") {
    const FoxPairingTable eta(kSig);
    const int p1 = kSig.p(1), q1 = kSig.q(1), p2 = kSig.p(2), q2 = kSig.q(2), z1 = kSig.z(1), z2 = kSig.z(2);
    CHECK(eta.base(p1, q1) == e("p1"));
    CHECK(eta.base(p1, p1) == e("p1") - e("p1^2"));
    CHECK(eta.base(q1, q1) == e("q1") - unit());
    CHECK(eta.base(z1, z1) == e("z1") - e("z1^2"));
    CHECK(eta.base(z1, z2).is_zero());
    CHECK(eta.base(p1, q2).is_zero());
    CHECK(eta.base(q1, p2).is_zero());
    CHECK(eta.base(p2, z1).is_zero());
    CHECK(eta.base(q2, z2).is_zero());
    CHECK_THROWS_AS(eta.base(q1, p1), std::invalid_argument);
    CHECK_THROWS_AS(eta.base(z2, z1), std::invalid_argument);
}

TEST_CASE("generator values reproduce the eta double brackets") {
    const FoxPairingTable eta(kSig);
    const WordPairing rho = eta.pairing();
    auto dbl = [&](const char *a, const char *b) { return dbl_from_pairing(rho, w(a), w(b)); };
    for (int u = 1; u <= 2; ++u) {
        const Word p = Word::generator(kSig.p(u)), q = Word::generator(kSig.q(u));
        CHECK(dbl_from_pairing(rho, p, q) == tensor(q, p));
        CHECK(dbl_from_pairing(rho, p, p) == tensor(p, p) - tensor(Word(), p * p));
        CHECK(dbl_from_pairing(rho, q, q) == tensor(q, q) - tensor(q * q, Word()));
        const Word z = Word::generator(kSig.z(u));
        CHECK(dbl_from_pairing(rho, z, z) == tensor(z, z) - tensor(Word(), z * z));
    }
    CHECK(dbl("z1", "z2").is_zero());
    CHECK(dbl("p1", "q2").is_zero());
    CHECK(dbl("q1", "p2").is_zero());
    CHECK(dbl("p1", "p2").is_zero());
    CHECK(dbl("q1", "q2").is_zero());
    CHECK(dbl("p2", "z1").is_zero());
    CHECK(dbl("q1", "z2").is_zero());
}

TEST_CASE("eta on words") {
    const FoxPairingTable eta(kSig);
    CHECK(eta.eta(Word(), w("p1 q1")).is_zero());
    CHECK(eta.eta(w("p1 q1"), Word()).is_zero());
    CHECK(eta.eta(w("q1"), w("p1")) == e("p1") - e("q1 p1") - unit());
    CHECK(eta.eta(w("p1^2"), w("q1")) == e("p1") + e("p1^2"));
    CHECK(eta.eta(w("p1^-1"), w("q1")) == -unit());
    CHECK(eta.eta(w("p1"), w("q1^-1")) == -e("p1 q1^-1"));
    CHECK(eta.generator_value(kSig.q(1), kSig.p(1)) == e("p1") - e("q1 p1") - unit());
}

TEST_CASE("inner pairings") {
    const AlgElem one = unit();
    CHECK(inner_pairing(one, e("p1"), e("q1")) == e("p1 q1") - e("p1") - e("q1") + unit());
    CHECK(inner_pairing(e("z1"), unit(), e("q1")).is_zero());
    CHECK(inner_pairing(e("z1"), e("q1"), unit()).is_zero());
    CHECK(inner_pairing(e("z1"), e("p1"), e("q1")) ==
          e("p1 z1 q1") - e("p1 z1") - e("z1 q1") + e("z1"));
    const AlgElem a1 = e("p1") + e("q2", 3), a2 = e("z1^-1"), b = e("q1 p2") - e("z2", Rational(1, 2));
    const AlgElem x = e("p1") - e("q2^-1", 2);
    CHECK(inner_pairing(x, a1 + a2, b) == inner_pairing(x, a1, b) + inner_pairing(x, a2, b));
    CHECK(inner_pairing(x, b, a1 + a2) == inner_pairing(x, b, a1) + inner_pairing(x, b, a2));
    CHECK(inner_pairing(x, Rational(3) * a1, b) == Rational(3) * inner_pairing(x, a1, b));
}

TEST_CASE("transpose") {
    const FoxPairingTable eta(kSig);
    const WordPairing bar = transpose(eta.pairing());
    CHECK(bar(w("p1"), w("q1")) == -e("p1 q1") + e("q1") - unit());
    CHECK(bar(w("p1"), w("q1")) == -eta.eta(w("p1"), w("q1")) - inner_pairing(unit(), e("p1"), e("q1")));

    for (int t = 0; t < 100; ++t) {
        Rng rng(8, static_cast<std::uint64_t>(t));
        const Word a = random_word(kSig, rng, 4), b = random_word(kSig, rng, 4), c = random_word(kSig, rng, 3);
        const AlgElem x = AlgElem(c) - AlgElem(random_word(kSig, rng, 3), 2);
        CHECK(transpose(inner_pairing(x))(a, b) == inner_pairing(antipode(x), AlgElem(a), AlgElem(b)));
        CHECK(transpose(transpose(eta.pairing()))(a, b) == eta.eta(a, b));
        CHECK(transpose_by_antipode(eta.pairing())(a, b) == bar(a, b));
        CHECK(eta.eta(a, b) + bar(a, b) == -inner_pairing(unit(), AlgElem(a), AlgElem(b)));
    }
}

TEST_CASE("skew pairing") {
    const FoxPairingTable eta(kSig);
    CHECK(eta.eta_s(w("p1"), w("q1")) == e("p1") + e("p1 q1") - e("q1") + unit());
    CHECK(eta.eta_s(Word(), w("q1")).is_zero());
    CHECK(eta.eta_s(w("z1"), w("z2")) == e("z1 z2") - e("z1") - e("z2") + unit());
    const WordPairing s = eta.skew_pairing();
    const WordPairing sbar = transpose(s);
    for (int t = 0; t < 100; ++t) {
        Rng rng(6, static_cast<std::uint64_t>(t));
        const Word a = random_word(kSig, rng, 4), b = random_word(kSig, rng, 4);
        CHECK(sbar(a, b) == -s(a, b));
        CHECK(s(a, b) == Rational(2) * eta.eta(a, b) + inner_pairing(unit(), AlgElem(a), AlgElem(b)));
    }
}

TEST_CASE("Fox product rules on random words") {
    const FoxPairingTable eta(kSig);
    for (int t = 0; t < 200; ++t) {
        Rng rng(7, static_cast<std::uint64_t>(t));
        const Word a = random_word(kSig, rng, 4), b = random_word(kSig, rng, 4), c = random_word(kSig, rng, 4);
        CHECK(eta.eta(a * b, c) == eta.eta(a, c) + a * eta.eta(b, c));
        CHECK(eta.eta(a, b * c) == eta.eta(a, b) * c + eta.eta(a, c));
        const AlgElem x = AlgElem(a) + AlgElem(b, Rational(-2, 3));
        CHECK(eta.eta(x, AlgElem(c)) == eta.eta(a, c) + Rational(-2, 3) * eta.eta(b, c));
    }
}

TEST_CASE("unreduced factorizations give the same value") {
    const FoxPairingTable eta(kSig);
    for (int t = 0; t < 100; ++t) {
        Rng rng(12, static_cast<std::uint64_t>(t));
        const Word a = random_word(kSig, rng, 4), b = random_word(kSig, rng, 4), u = random_word(kSig, rng, 3);
        std::vector<Letter> la(a.letters().begin(), a.letters().end());
        const std::size_t cut = rng.below(la.size() + 1);
        const Word ui = u.inverse();
        la.insert(la.begin() + static_cast<std::ptrdiff_t>(cut), ui.letters().begin(), ui.letters().end());
        la.insert(la.begin() + static_cast<std::ptrdiff_t>(cut), u.letters().begin(), u.letters().end());
        std::vector<Letter> lb(u.letters().begin(), u.letters().end());
        lb.insert(lb.end(), ui.letters().begin(), ui.letters().end());
        lb.insert(lb.end(), b.letters().begin(), b.letters().end());
        CHECK(eta.eta_letters(la, lb) == eta.eta(a, b));
    }
}
