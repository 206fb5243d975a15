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

#include "surfqp/rep_algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace surfqp {

// One invertible N x N matrix per generator, in generator order.
struct RepPoint {
    std::vector<RationalMatrix> matrices;
};

// Entries uniform in [-3, 3], each matrix resampled until invertible.
RepPoint random_point(const SurfaceSignature &sig, int dim, Rng &rng);
// Throws std::invalid_argument on a shape mismatch or a singular matrix.
void validate_point(const RepPoint &pt, const SurfaceSignature &sig, int dim);
// Simultaneous conjugation x -> g^-1 x g.
RepPoint conjugate_point(const RationalMatrix &g, const RepPoint &pt);

Rational evaluate(const RepElem &f, const RepPoint &pt);

// Fundamental vector fields on one matrix factor, for v = f_rs:
//   L:    x_ij -> (x v)_ij
//   R:    x_ij -> -(v x)_ij
//   Conj: L + R
enum class FieldSide { L, R, Conj };

struct TaggedField {
    int slot = 0;
    FieldSide side = FieldSide::L;
    int r = 0;
    int s = 0;
};

struct WedgeTerm {
    Rational coeff;
    TaggedField first;
    TaggedField second;
};

struct BivectorSpec {
    int dim = 0;
    std::vector<WedgeTerm> terms;
};

// g copies of P_D (slots p_u, q_u) followed by m copies of P_G (slot z_v),
// fused left to right: sum of the pieces minus psi for every pair of pieces.
BivectorSpec build_fusion_bivector(const SurfaceSignature &sig, int dim, bool include_psi = true);

// Image of a generator-entry symbol under a field.
Polynomial field_on_symbol(const RepSpace &space, const TaggedField &v, Variable x);
RepElem field_apply(const RepAlgebra &alg, const TaggedField &v, const RepElem &f);
Rational field_apply(const RepAlgebra &alg, const TaggedField &v, const RepElem &f, const RepPoint &pt);

// sum over wedge terms v ∧ w of v(f) w(g) - v(g) w(f)
RepElem bivector_bracket(const RepAlgebra &alg, const BivectorSpec &b, const RepElem &f, const RepElem &g);
Rational bivector_bracket(const RepAlgebra &alg, const BivectorSpec &b, const RepElem &f, const RepElem &g,
                          const RepPoint &pt);

struct ConstructionReport {
    bool passed = true;
    int points = 0;
    int comparisons = 0;
    bool symbolic_checked = false;
    std::optional<std::string> witness_left;
    std::optional<std::string> witness_right;
    std::optional<Rational> bracket_value;
    std::optional<Rational> bivector_value;
    std::optional<RepPoint> witness_point;
};

// At `trials` random points (trial t uses Rng(seed, t)), compares the
// evaluated quasi-Poisson bracket with the fused bivector on every pair of
// generator-entry symbols and on `word_pairs` random entry pairs of words of
// length <= max_word_length. With `symbolic`, also compares both brackets as
// elements of A_N on every generator-entry pair.
ConstructionReport compare_constructions(const RepAlgebra &alg, int trials, std::uint64_t seed,
                                         bool include_psi = true, bool symbolic = false, int word_pairs = 2,
                                         int max_word_length = 3);

} // namespace surfqp
