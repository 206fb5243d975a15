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

#include <doctest.h>

using namespace surfqp;

namespace {

const SurfaceSignature kSig{2, 2};

Word w(const char *text) { return parse_word(text, kSig); }
AlgElem e(const char *text, const Rational &c = 1) { return AlgElem(w(text), c); }
Tensor2 t2(const char *a, const char *b, const Rational &c = 1) { return tensor(w(a), w(b), c); }

// 1⊗ab + ba⊗1 - a⊗b - b⊗a
Tensor2 disjoint_value(const Word &a, const Word &b) {
    return tensor(Word(), a * b) + tensor(b * a, Word()) - tensor(a, b) - tensor(b, a);
}

Word gen(int g) { return Word::generator(g); }

} // namespace

TEST_CASE("surface double bracket on generators") {
    const SurfaceDoubleBracket dbl(kSig);
    CHECK(dbl(w("z1"), w("z1")) == t2("z1^2", "1") - t2("1", "z1^2"));
    CHECK(dbl(w("z2"), w("z2")) == t2("z2^2", "1") - t2("1", "z2^2"));
    CHECK(dbl(w("z1"), w("z2")) == disjoint_value(w("z1"), w("z2")));
    for (int u = 1; u <= 2; ++u) {
        const Word p = gen(kSig.p(u)), q = gen(kSig.q(u));
        CHECK(dbl(p, p) == tensor(p * p, Word()) - tensor(Word(), p * p));
        CHECK(dbl(q, q) == tensor(Word(), q * q) - tensor(q * q, Word()));
        CHECK(dbl(p, q) == tensor(Word(), p * q) + tensor(q * p, Word()) - tensor(p, q) + tensor(q, p));
        for (int v = 1; v <= 2; ++v) {
            const Word z = gen(kSig.z(v));
            CHECK(dbl(p, z) == disjoint_value(p, z));
            CHECK(dbl(q, z) == disjoint_value(q, z));
        }
    }
    for (int a : {0, 1})
        for (int b : {0, 1}) {
            const Word x = gen(kSig.p(1) + a), y = gen(kSig.p(2) + b);
            CHECK(dbl(x, y) == disjoint_value(x, y));
        }
    CHECK(dbl(w("p1 q1"), Word()).is_zero());
    CHECK(dbl(Word(), w("z1")).is_zero());
}

TEST_CASE("reversed generator pairs follow from skew-symmetry") {
    const SurfaceDoubleBracket dbl(kSig);
    CHECK(dbl(w("q1"), w("p1")) == t2("q1", "p1") - t2("p1", "q1") - t2("p1 q1", "1") - t2("1", "q1 p1"));
    CHECK(dbl(w("q1"), w("p2")) == disjoint_value(w("q1"), w("p2")));
    CHECK(dbl(w("p2"), w("q1")) == t2("p2", "q1") + t2("q1", "p2") - t2("q1 p2", "1") - t2("1", "p2 q1"));
    CHECK(dbl(w("z2"), w("z1")) == t2("z2", "z1") + t2("z1", "z2") - t2("z1 z2", "1") - t2("1", "z2 z1"));
    for (int x = 0; x < kSig.rank(); ++x)
        for (int y = 0; y < kSig.rank(); ++y)
            CHECK(dbl(gen(y), gen(x)) == -permute(dbl(gen(x), gen(y)), {2, 1}));
}

TEST_CASE("generator table against the eta route") {
    const SurfaceDoubleBracket dbl(kSig);
    const FoxPairingTable eta(kSig);
    const WordPairing rho = eta.pairing();
    for (int x = 0; x < kSig.rank(); ++x)
        for (int y = 0; y < kSig.rank(); ++y) {
            const Word a = gen(x), b = gen(y);
            Tensor2 expected = dbl_from_pairing(rho, a, b);
            expected *= 2;
            expected += tensor(Word(), a * b) + tensor(b * a, Word()) - tensor(a, b) - tensor(b, a);
            CHECK(dbl(a, b) == expected);
        }
}

TEST_CASE("pairing construction") {
    const FoxPairingTable eta(kSig);
    const WordPairing s = eta.skew_pairing();
    CHECK(dbl_from_pairing(s, w("p1"), w("q1")) == t2("1", "p1 q1") + t2("q1 p1", "1") - t2("p1", "q1") + t2("q1", "p1"));
    CHECK(dbl_from_pairing(s, Word(), w("q1")).is_zero());

    for (int t = 0; t < 30; ++t) {
        Rng rng(21, static_cast<std::uint64_t>(t));
        const Word a = random_word(kSig, rng, 3), b = random_word(kSig, rng, 3), x = random_word(kSig, rng, 2);
        const Word xi = x.inverse();
        const Tensor2 expected =
            tensor(xi, a * x * b) + tensor(b * xi * a, x) - tensor(b * xi, a * x) - tensor(xi * a, x * b);
        CHECK(dbl_from_pairing(inner_pairing(AlgElem(x)), a, b) == expected);
    }

    const SurfaceDoubleBracket dbl(kSig);
    const WordPairing bar = transpose(eta.pairing());
    for (int t = 0; t < 100; ++t) {
        Rng rng(22, static_cast<std::uint64_t>(t));
        const Word a = random_word(kSig, rng, 4), b = random_word(kSig, rng, 4);
        CHECK(dbl(a, b) == dbl_from_pairing(s, a, b));
        CHECK(dbl_from_pairing(bar, a, b) == permute(dbl_from_pairing(eta.pairing(), b, a), {2, 1}));
    }
}

TEST_CASE("double bracket axioms on random words") {
    const SurfaceDoubleBracket dbl(kSig);
    for (int t = 0; t < 100; ++t) {
        Rng rng(23, static_cast<std::uint64_t>(t));
        const Word a = random_word(kSig, rng, 4), b = random_word(kSig, rng, 4), c = random_word(kSig, rng, 4);
        CHECK(dbl(b, a) == -permute(dbl(a, b), {2, 1}));
        CHECK(dbl(a, b * c) == outer_act(b, dbl(a, c), Word()) + outer_act(Word(), dbl(a, b), c));
        CHECK(dbl(a * b, c) == inner_act(a, dbl(b, c), Word()) + inner_act(Word(), dbl(a, c), b));
        const AlgElem x = AlgElem(a) + AlgElem(b, -3);
        CHECK(dbl(x, AlgElem(c)) == dbl(a, c) + Rational(-3) * dbl(b, c));
    }
}

TEST_CASE("triple bracket") {
    const SurfaceDoubleBracket dbl(kSig);
    const WordDoubleBracket f = dbl.function();
    for (int t = 0; t < 30; ++t) {
        Rng rng(24, static_cast<std::uint64_t>(t));
        const Word a = random_word(kSig, rng, 3), b = random_word(kSig, rng, 3), c = random_word(kSig, rng, 3),
                   d = random_word(kSig, rng, 3);
        const Tensor3 abc = triple(f, a, b, c);
        CHECK(abc == triple_E(a, b, c));
        CHECK(triple(f, a, b, c * d) == outer_act(AlgElem(c), triple(f, a, b, d), unit()) +
                                            outer_act(unit(), abc, AlgElem(d)));
        CHECK(triple(f, c, a, b) == permute(triple(f, a, b, c), {3, 1, 2}));
    }
}

TEST_CASE("triple_E") {
    const Word p = w("p1"), q = w("q1"), z = w("z1"), one;
    const Tensor3 expected = tensor(p, one, q * z) + tensor(one, p * q, z) + tensor(z * p, q, one) +
                             tensor(z, p, q) - tensor(one, p, q * z) - tensor(p, q, z) - tensor(z * p, one, q) -
                             tensor(z, p * q, one);
    CHECK(triple_E(p, q, z) == expected);
    for (int t = 0; t < 50; ++t) {
        Rng rng(25, static_cast<std::uint64_t>(t));
        const Word a = random_word(kSig, rng, 4), b = random_word(kSig, rng, 4), c = random_word(kSig, rng, 4);
        CHECK(triple_E(one, b, c).is_zero());
        CHECK(m3(triple_E(a, b, c)) == m3(triple_E(b, a, c)));
    }
}

TEST_CASE("angle bracket") {
    const SurfaceDoubleBracket dbl(kSig);
    const WordDoubleBracket f = dbl.function();
    CHECK(angle(f, e("p1"), e("q1")) == e("q1 p1", 2));
    CHECK(angle(f, e("p1 q1"), unit()).is_zero());
    for (int t = 0; t < 50; ++t) {
        Rng rng(26, static_cast<std::uint64_t>(t));
        const AlgElem a(random_word(kSig, rng, 3)), b(random_word(kSig, rng, 3)), c(random_word(kSig, rng, 3));
        CHECK(project_cyclic(angle(f, a * b - b * a, c)).is_zero());
    }
}

TEST_CASE("angle bracket against the triple bracket") {
    const SurfaceDoubleBracket dbl(kSig);
    const WordDoubleBracket f = dbl.function();
    for (int t = 0; t < 20; ++t) {
        Rng rng(27, static_cast<std::uint64_t>(t));
        const AlgElem a(random_word(kSig, rng, 3)), b(random_word(kSig, rng, 3)), c(random_word(kSig, rng, 3));
        const AlgElem lhs = angle(f, angle(f, a, b), c) - angle(f, a, angle(f, b, c)) + angle(f, b, angle(f, a, c));
        CHECK(lhs == m3(triple(f, b, a, c) - triple(f, a, b, c)));
    }
}

TEST_CASE("Goldman bracket") {
    const SurfaceDoubleBracket dbl(kSig);
    auto cls = [&](const char *text) { return conjugacy_class(w(text)); };
    const CyclicAlgElem pq = goldman(dbl, cls("p1"), cls("q1"));
    CHECK(pq == CyclicAlgElem(cls("q1 p1")));
    CHECK(pq == CyclicAlgElem(cls("p1 q1")));
    CHECK(goldman(dbl, cls("z1"), cls("z2")).is_zero());
    CHECK(goldman(dbl, cls("p1"), cls("p1")).is_zero());
    CHECK(goldman(dbl, cls("p1"), cls("p2")).is_zero());

    for (int t = 0; t < 30; ++t) {
        Rng rng(28, static_cast<std::uint64_t>(t));
        const Word a = random_word(kSig, rng, 3), b = random_word(kSig, rng, 3), c = random_word(kSig, rng, 3),
                   u = random_word(kSig, rng, 3);
        const CyclicWord ca = conjugacy_class(a), cb = conjugacy_class(b), cc = conjugacy_class(c);
        CyclicAlgElem half = project_cyclic(angle(dbl.function(), AlgElem(u * a * u.inverse()), AlgElem(b)));
        half *= Rational(1, 2);
        CHECK(goldman(dbl, ca, cb) == half);
        CHECK(goldman(dbl, cb, ca) == -goldman(dbl, ca, cb));
        const CyclicAlgElem jacobi = goldman(dbl, CyclicAlgElem(ca), goldman(dbl, cb, cc)) +
                                     goldman(dbl, CyclicAlgElem(cb), goldman(dbl, cc, ca)) +
                                     goldman(dbl, CyclicAlgElem(cc), goldman(dbl, ca, cb));
        CHECK(jacobi.is_zero());
    }
}

TEST_CASE("quasi-Poisson verifier") {
    for (const SurfaceSignature sig : {SurfaceSignature{1, 0}, SurfaceSignature{1, 1}, SurfaceSignature{0, 2}}) {
        const SurfaceDoubleBracket dbl(sig);
        const QuasiPoissonReport r = is_quasi_poisson(dbl.function(), sig, 20, 3, 4);
        CHECK(r.passed);
        CHECK(r.checked == sig.rank() * sig.rank() * sig.rank() + 20);
    }

    const WordDoubleBracket zero = [](const Word &, const Word &) { return Tensor2(); };
    const SurfaceSignature torus{1, 0};
    const QuasiPoissonReport r = is_quasi_poisson(zero, torus, 10, 1, 4);
    CHECK_FALSE(r.passed);
    REQUIRE(r.witness);
    // Generator triples are scanned in order, so the first failure is (p1, p1, p1).
    CHECK((*r.witness)[0] == gen(0));
    CHECK((*r.witness)[1] == gen(0));
    CHECK((*r.witness)[2] == gen(0));
    CHECK(r.triple_value.is_zero());
    CHECK(r.expected == triple_E(gen(0), gen(0), gen(0)));
    CHECK_FALSE(triple_E(gen(0), gen(1), gen(0)).is_zero());

    const SurfaceSignature disk{0, 0};
    const QuasiPoissonReport d = is_quasi_poisson(zero, disk, 10, 1, 4);
    CHECK(d.passed);
}
