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

#include "surfqp/rep_algebra.hpp"
#include "surfqp/random.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace surfqp;

namespace {

Rational delta(int a, int b) { return a == b ? 1 : 0; }

// Polynomial oracles built directly from entry symbols.
struct Symbols {
    const RepAlgebra &alg;
    Polynomial operator()(int g, int i, int j) const { return Polynomial::variable(alg.space()->variable(g, i, j)); }
    RepElem elem(Polynomial p) const { return RepElem(alg.space(), std::move(p)); }
};

// d_kj X_ir Y_rl + Y_ks X_sj d_il - X_kj Y_il - Y_kj X_il
Polynomial disjoint_formula(const Symbols &s, int x, int y, int i, int j, int k, int l) {
    const int n = s.alg.dim();
    Polynomial out;
    for (int r = 0; r < n; ++r) {
        out += delta(k, j) * (s(x, i, r) * s(y, r, l));
        out += delta(i, l) * (s(y, k, r) * s(x, r, j));
    }
    out -= s(x, k, j) * s(y, i, l);
    out -= s(y, k, j) * s(x, i, l);
    return out;
}

// X_kr X_rj d_il - d_kj X_is X_sl
Polynomial self_formula(const Symbols &s, int x, int i, int j, int k, int l) {
    const int n = s.alg.dim();
    Polynomial out;
    for (int r = 0; r < n; ++r) {
        out += delta(i, l) * (s(x, k, r) * s(x, r, j));
        out -= delta(k, j) * (s(x, i, r) * s(x, r, l));
    }
    return out;
}

RationalMatrix matrix(int n, std::initializer_list<int> entries) {
    RationalMatrix m(n);
    int k = 0;
    for (int v : entries) {
        m(k / n, k % n) = v;
        ++k;
    }
    return m;
}

} // namespace

TEST_CASE("entries and traces") {
    const SurfaceSignature sig{1, 1};
    const RepAlgebra alg(sig, 2);
    const Symbols s{alg};
    const Word pq = parse_word("p1 q1", sig);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(alg.entry(Word(), i, j) == alg.constant(delta(i, j)));
            CHECK(alg.entry(pq, i, j) == s.elem(s(0, i, 0) * s(1, 0, j) + s(0, i, 1) * s(1, 1, j)));
        }
    CHECK(alg.trace(Word()) == alg.constant(2));
    CHECK(alg.trace(parse_word("q1 p1 q1^-1", sig)) == alg.trace(parse_word("p1", sig)));
    CHECK(alg.trace(parse_word("z1^-1 p1 q1 z1", sig)) == alg.trace(pq));
    CHECK_THROWS_AS(alg.entry(pq, 2, 0), std::out_of_range);

    const RepElem d = alg.determinant(0);
    CHECK(d == s.elem(s(0, 0, 0) * s(0, 1, 1) - s(0, 0, 1) * s(0, 1, 0)));
    CHECK(d * alg.det_inverse(0) == alg.constant(1));
    const Word p = Word::generator(0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            RepElem sum = alg.zero();
            for (int l = 0; l < 2; ++l)
                sum += alg.entry(p, i, l) * alg.entry(p.inverse(), l, j);
            CHECK(sum == alg.constant(delta(i, j)));
        }
}

TEST_CASE("rank one entries are abelianization monomials") {
    const SurfaceSignature sig{1, 1};
    const RepAlgebra alg(sig, 1);
    const RepElem p = alg.symbol(0, 0, 0), q = alg.symbol(1, 0, 0), z = alg.symbol(2, 0, 0);
    CHECK(alg.entry(parse_word("p1^-1", sig), 0, 0) * p == alg.constant(1));
    CHECK(alg.trace(parse_word("p1 q1 p1 z1^-1", sig)) * z == p * p * q);
    CHECK(alg.trace(parse_word("p1 q1 p1^-1 q1^-1", sig)) == alg.constant(1));
}

TEST_CASE("generator brackets match the closed formulas") {
    const SurfaceSignature sig{2, 2};
    for (int n : {1, 2, 3}) {
        const RepAlgebra alg(sig, n);
        const Symbols s{alg};
        auto check_all = [&](int x, int y, auto formula) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        for (int l = 0; l < n; ++l) {
                            const Variable a = alg.space()->variable(x, i, j), b = alg.space()->variable(y, k, l);
                            CHECK(alg.generator_bracket(a, b) == formula(i, j, k, l));
                        }
        };
        for (int u = 1; u <= 2; ++u) {
            const int p = sig.p(u), q = sig.q(u);
            check_all(p, p, [&](int i, int j, int k, int l) { return self_formula(s, p, i, j, k, l); });
            check_all(q, q, [&](int i, int j, int k, int l) { return -self_formula(s, q, i, j, k, l); });
            check_all(p, q, [&](int i, int j, int k, int l) {
                const int m = alg.dim();
                Polynomial out;
                for (int r = 0; r < m; ++r) {
                    out += delta(k, j) * (s(p, i, r) * s(q, r, l));
                    out += delta(i, l) * (s(q, k, r) * s(p, r, j));
                }
                out -= s(p, k, j) * s(q, i, l);
                out += s(q, k, j) * s(p, i, l);
                return out;
            });
            const int z = sig.z(u);
            check_all(z, z, [&](int i, int j, int k, int l) { return self_formula(s, z, i, j, k, l); });
        }
        for (int x = 0; x < sig.rank(); ++x)
            for (int y = 0; y < sig.rank(); ++y) {
                const bool same_handle = x < 2 * sig.genus && y < 2 * sig.genus && x / 2 == y / 2;
                if (x < y && !same_handle)
                    check_all(x, y, [&](int i, int j, int k, int l) { return disjoint_formula(s, x, y, i, j, k, l); });
            }
    }
}

TEST_CASE("bracket examples") {
    const SurfaceSignature torus{1, 0};
    const RepAlgebra a1(torus, 1);
    const Word p = Word::generator(0), q = Word::generator(1);
    CHECK(a1.bracket(a1.trace(p), a1.trace(q)) == Rational(2) * a1.trace(p * q));

    const RepAlgebra alg(SurfaceSignature{1, 1}, 2);
    const RepElem f = alg.symbol(0, 0, 1) * alg.symbol(2, 1, 1) + alg.det_inverse(1);
    CHECK(alg.bracket(alg.constant(Rational(3, 2)), f).is_zero());
    CHECK(alg.bracket(f, alg.entry(Word(), 1, 1)).is_zero());
    CHECK(alg.bracket(f, f).is_zero());
}

TEST_CASE("bracket is a biderivation") {
    const SurfaceSignature sig{1, 1};
    const RepAlgebra alg(sig, 2);
    for (int t = 0; t < 10; ++t) {
        Rng rng(31, static_cast<std::uint64_t>(t));
        auto word_entry = [&] {
            const Word w = random_word(sig, rng, 2);
            return alg.entry(w, static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2)));
        };
        const RepElem f = word_entry(), g = word_entry(), h = word_entry();
        CHECK(alg.bracket(f, g) == -alg.bracket(g, f));
        CHECK(alg.bracket(f, g * h) == alg.bracket(f, g) * h + g * alg.bracket(f, h));
        CHECK(alg.bracket(f * g, h) == f * alg.bracket(g, h) + alg.bracket(f, h) * g);
    }
    const int u = sig.q(1);
    const RepElem g = alg.symbol(0, 1, 0) * alg.symbol(2, 0, 1);
    CHECK(alg.bracket(alg.det_inverse(u), g) ==
          -(alg.det_inverse(u) * alg.det_inverse(u)) * alg.bracket(alg.determinant(u), g));
}

TEST_CASE("entry brackets agree with the double bracket on products") {
    const SurfaceSignature sig{1, 1};
    const RepAlgebra alg(sig, 2);
    const SurfaceDoubleBracket &dbl = alg.double_bracket();
    for (int t = 0; t < 5; ++t) {
        Rng rng(32, static_cast<std::uint64_t>(t));
        const Word a = random_word(sig, rng, 2), b = random_word(sig, rng, 2);
        const int i = static_cast<int>(rng.below(2)), j = static_cast<int>(rng.below(2)),
                  u = static_cast<int>(rng.below(2)), v = static_cast<int>(rng.below(2));
        RepElem expected = alg.zero();
        for (const auto &[k, c] : dbl(a, b))
            expected += c * (alg.entry(k[0], u, j) * alg.entry(k[1], i, v));
        CHECK(alg.bracket(alg.entry(a, i, j), alg.entry(b, u, v)) == expected);
    }
}

TEST_CASE("gl_N action") {
    const SurfaceSignature sig{1, 1};
    const RepAlgebra alg(sig, 2);
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
            const RationalMatrix f = RationalMatrix::elementary(2, k, l);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    CHECK(alg.gl_action(f, alg.symbol(1, i, j)) ==
                          delta(l, j) * alg.symbol(1, i, k) - delta(i, k) * alg.symbol(1, l, j));
        }
    const RationalMatrix w = matrix(2, {1, -2, 3, 5});
    CHECK(alg.gl_action(w, alg.trace(parse_word("p1 q1^-1 z1", sig))).is_zero());
    CHECK(alg.gl_action(w, alg.determinant(0)).is_zero());
    CHECK(alg.gl_action(w, alg.det_inverse(2)).is_zero());
}

TEST_CASE("GL_N action") {
    const SurfaceSignature sig{1, 1};
    const RepAlgebra alg(sig, 2);
    const RepElem f = alg.entry(parse_word("p1 q1^-1", sig), 0, 1) + alg.symbol(2, 1, 0) * alg.symbol(0, 0, 0);
    const RationalMatrix g = matrix(2, {1, 2, 0, 1}), h = matrix(2, {2, 1, 1, 1});
    CHECK(alg.group_action(RationalMatrix::identity(2), f) == f);
    CHECK(alg.group_action(g, alg.trace(parse_word("p1 z1 q1^-1", sig))) == alg.trace(parse_word("p1 z1 q1^-1", sig)));
    CHECK(alg.group_action(g * h, f) == alg.group_action(g, alg.group_action(h, f)));
    const RationalMatrix gi = g.inverse();
    CHECK(alg.group_action(g, alg.symbol(0, 0, 1)) ==
          alg.constant(gi(0, 0) * g(1, 1)) * alg.symbol(0, 0, 1) + alg.constant(gi(0, 1) * g(0, 1)) * alg.symbol(0, 1, 0) +
              alg.constant(gi(0, 1) * g(1, 1)) * alg.symbol(0, 1, 1) + alg.constant(gi(0, 0) * g(0, 1)) * alg.symbol(0, 0, 0));
    CHECK_THROWS_AS(alg.group_action(matrix(2, {1, 2, 2, 4}), f), std::invalid_argument);
}

TEST_CASE("phi action") {
    const SurfaceSignature sig{1, 1};
    const RepAlgebra a1(sig, 1);
    CHECK(a1.phi_action(a1.symbol(0, 0, 0), a1.symbol(1, 0, 0), a1.symbol(2, 0, 0)).is_zero());

    const int n = 2;
    const RepAlgebra alg(sig, n);
    const Symbols s{alg};
    CHECK(alg.phi_action(alg.constant(1), alg.symbol(0, 0, 1), alg.symbol(1, 1, 1)).is_zero());

    // f_kl a_ij = d_lj a_ik - d_ik a_lj
    auto act = [&](int k, int l, int g, int i, int j) {
        return delta(l, j) * s(g, i, k) - delta(i, k) * s(g, l, j);
    };
    for (int t = 0; t < 10; ++t) {
        Rng rng(33, static_cast<std::uint64_t>(t));
        int idx[9];
        for (int &v : idx)
            v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int ga = 0, gb = 1, gc = 2;
        Polynomial expected;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    expected -= act(i, j, ga, idx[0], idx[1]) * act(j, k, gb, idx[2], idx[3]) *
                                act(k, i, gc, idx[4], idx[5]);
                    expected += act(j, k, ga, idx[0], idx[1]) * act(i, j, gb, idx[2], idx[3]) *
                                act(k, i, gc, idx[4], idx[5]);
                }
        CHECK(alg.phi_action(alg.symbol(ga, idx[0], idx[1]), alg.symbol(gb, idx[2], idx[3]),
                             alg.symbol(gc, idx[4], idx[5])) == s.elem(expected));
    }
}

TEST_CASE("Cartan trivector") {
    for (int n : {1, 2, 3}) {
        const CartanTrivector phi = CartanTrivector::phi(n);
        CHECK(phi.permuted({2, 1, 3}).terms() == -phi.terms());
        CHECK(phi.permuted({1, 3, 2}).terms() == -phi.terms());
        CHECK(phi.permuted({3, 2, 1}).terms() == -phi.terms());
        CHECK(phi.permuted({2, 3, 1}) == phi);
        for (int t = 0; t < 5; ++t) {
            Rng rng(34, static_cast<std::uint64_t>(n * 10 + t));
            const RationalMatrix u = random_matrix(n, rng), v = random_matrix(n, rng), w = random_matrix(n, rng);
            CHECK(phi.adjoint_action(u).terms().is_zero());
            const RationalMatrix g = random_invertible_matrix(n, rng);
            CHECK(phi.conjugated(g) == phi);
            CHECK(phi.contract(u, v, w) == (u * commutator(v, w)).trace());
        }
    }
}

TEST_CASE("moment map") {
    const SurfaceSignature sig{1, 1};
    const RepAlgebra alg(sig, 1);
    const Word mu = boundary_word(sig);
    CHECK(mu == parse_word("p1 q1 p1^-1 q1^-1 z1", sig));
    const MomentReport r = moment_check(alg, mu, 10, 1, 3);
    CHECK(r.passed);
    CHECK(r.checked > 0);

    const RepAlgebra torus(SurfaceSignature{1, 0}, 2);
    const MomentReport bad = moment_check(torus, Word::generator(0), 5, 1, 3, 1, 0);
    CHECK_FALSE(bad.passed);
    CHECK(bad.failed_identity == "moment map identity");
    REQUIRE(bad.witness);
    CHECK(*bad.witness == Word::generator(1));

    // For mu = 1 the left side vanishes but the right side is 2(a⊗1 - 1⊗a).
    const MomentReport unit_report = moment_check(torus, Word(), 5, 1, 3, 1, 0);
    CHECK_FALSE(unit_report.passed);
    REQUIRE(unit_report.witness);
    CHECK(*unit_report.witness == Word::generator(0));
    const Tensor2 rhs = Rational(2) * (tensor(Word::generator(0), Word()) - tensor(Word(), Word::generator(0)));
    CHECK_FALSE(rhs.is_zero());
    CHECK(torus.double_bracket()(Word(), Word::generator(0)).is_zero());
}
