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

#include "surfqp/random.hpp"
#include "surfqp/rational.hpp"

#include <vector>

namespace surfqp {

// Dense square matrix over Q; also used for elements of gl_N.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {}

    static RationalMatrix identity(int dim);
    // f_rs: 1 in row r, column s (0-based).
    static RationalMatrix elementary(int dim, int r, int s);

    int dim() const { return dim_; }
    Rational &operator()(int i, int j) { return data_[i * dim_ + j]; }
    const Rational &operator()(int i, int j) const { return data_[i * dim_ + j]; }

    Rational trace() const;
    Rational determinant() const;
    // Throws std::invalid_argument when singular.
    RationalMatrix inverse() const;

    friend RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b);
    friend RationalMatrix operator+(const RationalMatrix &a, const RationalMatrix &b);
    friend RationalMatrix operator-(const RationalMatrix &a, const RationalMatrix &b);
    friend RationalMatrix operator*(const Rational &s, const RationalMatrix &a);
    friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;

private:
    int dim_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix commutator(const RationalMatrix &a, const RationalMatrix &b);

// Independent uniform integer entries in [lo, hi].
RationalMatrix random_matrix(int dim, Rng &rng, int lo = -3, int hi = 3);
// random_matrix resampled until the determinant is nonzero.
RationalMatrix random_invertible_matrix(int dim, Rng &rng, int lo = -3, int hi = 3);

} // namespace surfqp
