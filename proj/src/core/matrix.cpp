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

#include "surfqp/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace surfqp {

RationalMatrix RationalMatrix::identity(int dim) {
    RationalMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::elementary(int dim, int r, int s) {
    RationalMatrix m(dim);
    m(r, s) = 1;
    return m;
}

Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (int i = 0; i < dim_; ++i)
        t += (*this)(i, i);
    return t;
}

Rational RationalMatrix::determinant() const {
    RationalMatrix a = *this;
    Rational det = 1;
    for (int col = 0; col < dim_; ++col) {
        int pivot = col;
        while (pivot < dim_ && a(pivot, col) == 0)
            ++pivot;
        if (pivot == dim_)
            return 0;
        if (pivot != col) {
            for (int k = 0; k < dim_; ++k)
                std::swap(a(pivot, k), a(col, k));
            det = -det;
        }
        det *= a(col, col);
        for (int row = col + 1; row < dim_; ++row) {
            if (a(row, col) == 0)
                continue;
            const Rational f = a(row, col) / a(col, col);
            for (int k = col; k < dim_; ++k)
                a(row, k) -= f * a(col, k);
        }
    }
    return det;
}

RationalMatrix RationalMatrix::inverse() const {
    RationalMatrix a = *this;
    RationalMatrix inv = identity(dim_);
    for (int col = 0; col < dim_; ++col) {
        int pivot = col;
        while (pivot < dim_ && a(pivot, col) == 0)
            ++pivot;
        if (pivot == dim_)
            throw std::invalid_argument("singular matrix");
        if (pivot != col)
            for (int k = 0; k < dim_; ++k) {
                std::swap(a(pivot, k), a(col, k));
                std::swap(inv(pivot, k), inv(col, k));
            }
        const Rational p = a(col, col);
        for (int k = 0; k < dim_; ++k) {
            a(col, k) /= p;
            inv(col, k) /= p;
        }
        for (int row = 0; row < dim_; ++row) {
            if (row == col || a(row, col) == 0)
                continue;
            const Rational f = a(row, col);
            for (int k = 0; k < dim_; ++k) {
                a(row, k) -= f * a(col, k);
                inv(row, k) -= f * inv(col, k);
            }
        }
    }
    return inv;
}

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b) {
    RationalMatrix out(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
        for (int k = 0; k < a.dim_; ++k) {
            if (a(i, k) == 0)
                continue;
            for (int j = 0; j < a.dim_; ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RationalMatrix operator+(const RationalMatrix &a, const RationalMatrix &b) {
    RationalMatrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k)
        out.data_[k] += b.data_[k];
    return out;
}

RationalMatrix operator-(const RationalMatrix &a, const RationalMatrix &b) {
    RationalMatrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k)
        out.data_[k] -= b.data_[k];
    return out;
}

RationalMatrix operator*(const Rational &s, const RationalMatrix &a) {
    RationalMatrix out = a;
    for (auto &x : out.data_)
        x *= s;
    return out;
}

RationalMatrix commutator(const RationalMatrix &a, const RationalMatrix &b) { return a * b - b * a; }

RationalMatrix random_matrix(int dim, Rng &rng, int lo, int hi) {
    RationalMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m(i, j) = rng.uniform(lo, hi);
    return m;
}

RationalMatrix random_invertible_matrix(int dim, Rng &rng, int lo, int hi) {
    while (true) {
        RationalMatrix m = random_matrix(dim, rng, lo, hi);
        if (m.determinant() != 0)
            return m;
    }
}

} // namespace surfqp
