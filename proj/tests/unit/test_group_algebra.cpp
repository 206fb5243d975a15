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
#include "surfqp/random.hpp"

#include <doctest.h>

using namespace surfqp;

namespace {

const SurfaceSignature kSig{1, 1};

Word w(const char *text) { return parse_word(text, kSig); }
AlgElem e(const char *text, const Rational &c = 1) { return AlgElem(w(text), c); }

AlgElem random_elem(Rng &rng) {
    AlgElem x;
    const int terms = rng.uniform(1, 3);
    for (int k = 0; k < terms; ++k)
        x.add(random_word(kSig, rng, 3), rng.uniform(-3, 3));
    return x;
}

Tensor3 random_tensor3(Rng &rng) {
    return tensor(random_elem(rng), random_elem(rng), random_elem(rng)) +
           tensor(random_elem(rng), random_elem(rng), random_elem(rng));
}

} // namespace

TEST_CASE("multiplication") {
    const AlgElem x = (e("p1") + e("q1")) * (e("p1") - e("q1"));
    CHECK(x == e("p1^2") - e("p1 q1") + e("q1 p1") - e("q1^2"));
    CHECK(unit() * x == x);
    CHECK((AlgElem() * x).is_zero());
    CHECK((e("p1") * e("p1^-1")) == unit());
    CHECK((e("p1", 2) + e("p1", -2)).is_zero());
    CHECK((Rational(0) * e("p1")).is_zero());
}

TEST_CASE("counit") {
    CHECK(counit(e("p1", 2) - e("q1", 3)) == -1);
    CHECK(counit(unit()) == 1);
    CHECK(counit(e("p1") - unit()) == 0);
}

TEST_CASE("antipode") {
    CHECK(antipode(e("p1 q1")) == e("q1^-1 p1^-1"));
    CHECK(antipode(e("p1", 2) + e("q1")) == e("p1^-1", 2) + e("q1^-1"));
}

TEST_CASE("comultiply") {
    CHECK(comultiply(e("p1")) == tensor(w("p1"), w("p1")));
    CHECK(comultiply(e("p1") + e("q1")) == tensor(w("p1"), w("p1")) + tensor(w("q1"), w("q1")));
    CHECK(comultiply(unit()) == tensor(Word(), Word()));
}

TEST_CASE("permutations") {
    const Word a = w("p1"), b = w("q1 z1"), c = w("z1^-1");
    CHECK(permute(tensor(a, b), {2, 1}) == tensor(b, a));
    CHECK(permute(tensor(a, b, c), {3, 1, 2}) == tensor(c, a, b));
    CHECK(permute(tensor(a, b, c), {1, 3, 2}) == tensor(a, c, b));
    for (int t = 0; t < 50; ++t) {
        Rng rng(3, static_cast<std::uint64_t>(t));
        const Tensor3 x = random_tensor3(rng);
        CHECK(permute(permute(permute(x, {3, 1, 2}), {3, 1, 2}), {3, 1, 2}) == x);
        CHECK(permute(permute(x, {3, 1, 2}), {2, 3, 1}) == x);
    }
}

TEST_CASE("outer and inner bimodule structures") {
    const Word a = w("p1"), b = w("q1"), l = w("z1"), r = w("p1^-1");
    CHECK(outer_act(l, tensor(a, b), r) == tensor(l * a, b * r));
    CHECK(outer_act(AlgElem(l), tensor(a, b, b), AlgElem(r)) == tensor(l * a, b, b * r));
    CHECK(inner_act(l, tensor(a, b), r) == tensor(a * r, l * b));
    for (int t = 0; t < 50; ++t) {
        Rng rng(4, static_cast<std::uint64_t>(t));
        const Tensor2 x = tensor(random_elem(rng), random_elem(rng));
        const AlgElem l1 = random_elem(rng), l2 = random_elem(rng), r1 = random_elem(rng), r2 = random_elem(rng);
        CHECK(outer_act(unit(), x, unit()) == x);
        CHECK(inner_act(unit(), x, unit()) == x);
        CHECK(inner_act(l1 * l2, x, unit()) == inner_act(l1, inner_act(l2, x, unit()), unit()));
        CHECK(inner_act(unit(), x, r1 * r2) == inner_act(unit(), inner_act(unit(), x, r1), r2));
        CHECK(outer_act(l1 * l2, x, r1 * r2) == outer_act(l1, outer_act(l2, x, r1), r2));
        CHECK(outer_act(l1 + l2, x, r1) == outer_act(l1, x, r1) + outer_act(l2, x, r1));
        CHECK(outer_act(l1, x, r1 + r2) == outer_act(l1, x, r1) + outer_act(l1, x, r2));
    }
}

TEST_CASE("m3") {
    const Word a = w("p1"), b = w("q1"), c = w("z1");
    CHECK(m3(tensor(a, b, c)) == e("p1 q1 z1"));
    CHECK(m3(tensor(Word(), Word(), Word())) == unit());
    CHECK(multiply_factors(tensor(a, b)) == e("p1 q1"));
    Rng rng(9, 0);
    const Tensor3 x = random_tensor3(rng), y = random_tensor3(rng);
    CHECK(m3(x + y) == m3(x) + m3(y));
}

TEST_CASE("Hopf algebra axioms on random elements") {
    for (int t = 0; t < 100; ++t) {
        Rng rng(1, static_cast<std::uint64_t>(t));
        const AlgElem x = random_elem(rng), y = random_elem(rng);
        CHECK(antipode(antipode(x)) == x);
        CHECK(counit(x * y) == counit(x) * counit(y));
        Tensor2 product;
        for (const auto &[k1, c1] : comultiply(x))
            for (const auto &[k2, c2] : comultiply(y))
                product.add({k1[0] * k2[0], k1[1] * k2[1]}, c1 * c2);
        CHECK(comultiply(x * y) == product);
        AlgElem left_counit, antipode_sum;
        for (const auto &[k, c] : comultiply(x)) {
            left_counit.add(k[1], c * counit(AlgElem(k[0])));
            antipode_sum += c * (antipode(AlgElem(k[0])) * AlgElem(k[1]));
        }
        CHECK(left_counit == x);
        CHECK(antipode_sum == scalar(counit(x)));
    }
}
