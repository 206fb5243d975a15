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

#include "surfqp/double_bracket.hpp"
#include "surfqp/matrix.hpp"
#include "surfqp/polynomial.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace surfqp {

// Variables x^u_ij of A_N with determinant polynomials. Variable index is
// (u * N + i) * N + j with 0-based u, i, j.
class RepSpace {
public:
    RepSpace(const SurfaceSignature &sig, int dim);

    const SurfaceSignature &signature() const { return sig_; }
    int dim() const { return dim_; }
    int rank() const { return sig_.rank(); }
    std::size_t num_variables() const { return static_cast<std::size_t>(rank()) * dim_ * dim_; }

    Variable variable(int generator, int i, int j) const {
        return static_cast<Variable>((generator * dim_ + i) * dim_ + j);
    }
    int generator_of(Variable v) const { return static_cast<int>(v) / (dim_ * dim_); }
    int row_of(Variable v) const { return static_cast<int>(v) / dim_ % dim_; }
    int col_of(Variable v) const { return static_cast<int>(v) % dim_; }
    // "p1_1_2", 1-based indices.
    std::string variable_name(Variable v) const;

    const Polynomial &det(int generator) const { return dets_[generator]; }
    // d det(x^u) / d x^u_ij, which is the adjugate entry adj(x^u)_ji.
    const Polynomial &det_partial(Variable v) const { return det_partials_[v]; }
    Polynomial det_power(int generator, std::uint32_t k) const;

private:
    SurfaceSignature sig_;
    int dim_;
    std::vector<Polynomial> dets_;
    std::vector<Polynomial> det_partials_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<int, std::uint32_t>, Polynomial> det_powers_;
};

// An element n / prod_u det(x^u)^k_u of A_N.
class RepElem {
public:
    RepElem() = default;
    explicit RepElem(std::shared_ptr<const RepSpace> space);
    RepElem(std::shared_ptr<const RepSpace> space, Polynomial numerator, std::vector<std::uint32_t> den = {});

    const std::shared_ptr<const RepSpace> &space() const { return space_; }
    const Polynomial &numerator() const { return num_; }
    std::uint32_t den_exponent(int generator) const {
        return static_cast<std::size_t>(generator) < den_.size() ? den_[generator] : 0;
    }
    std::vector<std::uint32_t> den_exponents() const;
    bool is_zero() const { return num_.is_zero(); }

    // Numerator rewritten over prod det^target, target >= den componentwise.
    Polynomial numerator_over(const std::vector<std::uint32_t> &target) const;

    RepElem &operator+=(const RepElem &o);
    RepElem &operator-=(const RepElem &o);
    RepElem &operator*=(const RepElem &o);
    RepElem &operator*=(const Rational &s);

    friend RepElem operator+(RepElem a, const RepElem &b) { return a += b; }
    friend RepElem operator-(RepElem a, const RepElem &b) { return a -= b; }
    friend RepElem operator-(RepElem a) { return a *= Rational(-1); }
    friend RepElem operator*(RepElem a, const RepElem &b) { return a *= b; }
    friend RepElem operator*(const Rational &s, RepElem a) { return a *= s; }
    // Cross-multiplication test.
    friend bool operator==(const RepElem &a, const RepElem &b);

private:
    void adopt_space(const RepElem &o);
    void normalize_zero();

    std::shared_ptr<const RepSpace> space_;
    Polynomial num_;
    std::vector<std::uint32_t> den_;
};

// Partial derivatives of an element along each variable it depends on.
using Gradient = std::vector<std::pair<Variable, RepElem>>;

// The representation algebra A_N of a surface with its quasi-Poisson bracket.
class RepAlgebra {
public:
    RepAlgebra(const SurfaceSignature &sig, int dim);

    const std::shared_ptr<const RepSpace> &space() const { return space_; }
    const SurfaceSignature &signature() const { return space_->signature(); }
    int dim() const { return space_->dim(); }
    const SurfaceDoubleBracket &double_bracket() const { return dbl_; }

    RepElem zero() const { return RepElem(space_); }
    RepElem constant(const Rational &c) const;
    RepElem symbol(int generator, int i, int j) const;
    RepElem symbol(Variable v) const;
    RepElem determinant(int generator) const;
    RepElem det_inverse(int generator) const;

    // Indices are 0-based here; throws std::out_of_range otherwise.
    RepElem letter_entry(Letter l, int i, int j) const;
    // Row-major N x N matrix of entries of a group element.
    std::vector<RepElem> word_matrix(const Word &w) const;
    RepElem entry(const Word &w, int i, int j) const;
    RepElem entry(const AlgElem &a, int i, int j) const;
    RepElem trace(const Word &w) const;
    RepElem trace(const AlgElem &a) const;

    RepElem partial(const RepElem &f, Variable v) const;
    // Variables f may depend on: those of the numerator and all entries of
    // generators with a positive denominator exponent.
    std::vector<Variable> support(const RepElem &f) const;
    Gradient gradient(const RepElem &f) const;

    // {x, y} for generator-entry symbols.
    const Polynomial &generator_bracket(Variable x, Variable y) const {
        return table_[static_cast<std::size_t>(x) * space_->num_variables() + y];
    }
    RepElem bracket(const RepElem &f, const RepElem &g) const;
    RepElem bracket(const Gradient &df, const Gradient &dg) const;

    // w . x_ij = (x w - w x)_ij, extended as a derivation.
    RepElem gl_action(const RationalMatrix &w, const RepElem &f) const;
    // g . x_ij = (g^-1 x g)_ij, extended as an algebra automorphism.
    RepElem group_action(const RationalMatrix &g, const RepElem &f) const;
    // sum over the terms of phi_N of (w1 f)(w2 g)(w3 h).
    RepElem phi_action(const RepElem &f, const RepElem &g, const RepElem &h) const;

private:
    std::shared_ptr<const RepSpace> space_;
    SurfaceDoubleBracket dbl_;
    std::vector<Polynomial> table_;
};

// phi_N = sum_ijk -f_ij ⊗ f_jk ⊗ f_ki + f_jk ⊗ f_ij ⊗ f_ki as a combination of
// elementary triples. Key (r1, s1, r2, s2, r3, s3) stands for f_r1s1 ⊗ f_r2s2 ⊗ f_r3s3.
class CartanTrivector {
public:
    using Key = std::array<int, 6>;

    static CartanTrivector phi(int dim);

    int dim() const { return dim_; }
    const LinearCombination<Key> &terms() const { return terms_; }

    // Output slot k holds input slot perm[k] (1-based).
    CartanTrivector permuted(const std::array<int, 3> &perm) const;
    // Diagonal adjoint action: sum over slots of [w, -].
    CartanTrivector adjoint_action(const RationalMatrix &w) const;
    // Simultaneous conjugation g (-) g^-1 in every slot.
    CartanTrivector conjugated(const RationalMatrix &g) const;
    // sum of c tr(A u) tr(B v) tr(C w) over terms c A ⊗ B ⊗ C.
    Rational contract(const RationalMatrix &u, const RationalMatrix &v, const RationalMatrix &w) const;

    friend bool operator==(const CartanTrivector &, const CartanTrivector &) = default;

private:
    int dim_ = 0;
    LinearCombination<Key> terms_;
};

// p1 q1 p1^-1 q1^-1 ... pg qg pg^-1 qg^-1 z1 ... zm
Word boundary_word(const SurfaceSignature &sig);

struct MomentReport {
    bool passed = true;
    int checked = 0;
    std::string failed_identity;
    std::optional<Word> witness;
    int power = 0;
    std::array<int, 4> indices{};
};

// Checks <<mu, a>>^s against a⊗mu + a mu⊗1 - mu⊗a - 1⊗mu a and the power
// formulas for mu^m and mu^-m (1 <= m <= max_power), at the algebra level and
// in A_N. The test elements a are the generators followed by `trials` random
// words (trial t uses Rng(seed, t)); the A_N checks cover the generators and
// the first `rep_trials` random words at every index quadruple.
MomentReport moment_check(const RepAlgebra &alg, const Word &mu, int trials, std::uint64_t seed,
                          int max_word_length, int max_power = 3, int rep_trials = 2);

} // namespace surfqp
