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

#include "surfqp/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace surfqp {

using Variable = std::uint32_t;

// Product of variable powers. Exponents are dense bytes, eight variables per
// 64-bit word; trailing zero words are dropped so the representation is
// canonical. Exponents are limited to 255.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(Variable v, std::uint32_t exponent = 1);

    std::uint32_t exponent(Variable v) const;
    std::uint32_t degree() const;
    bool is_one() const { return words_.empty(); }
    // (variable, exponent) pairs with positive exponent, by increasing variable.
    std::vector<std::pair<Variable, std::uint32_t>> factors() const;
    template <class F> void for_each_factor(F &&f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            for (std::uint32_t b = 0; bits != 0; ++b, bits >>= 8)
                if (bits & 0xffu)
                    f(static_cast<Variable>(w * 8 + b), static_cast<std::uint32_t>(bits & 0xffu));
        }
    }

    // The monomial with the exponent of v lowered by one. v must occur.
    Monomial lowered(Variable v) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &a, const Monomial &b) { return a.words_ == b.words_; }
    // Lexicographic on exponents of variables 0, 1, 2, ... (larger exponent first).
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b);

    std::size_t hash() const;

private:
    void trim();
    boost::container::small_vector<std::uint64_t, 3> words_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const { return m.hash(); }
};

class Polynomial {
public:
    using Terms = std::unordered_map<Monomial, Rational, MonomialHash>;

    Polynomial() = default;
    static Polynomial constant(const Rational &c);
    static Polynomial variable(Variable v);

    void add_term(const Monomial &m, const Rational &c);
    // Unordered; use sorted_terms() where order matters.
    const Terms &terms() const { return terms_; }
    std::vector<std::pair<Monomial, Rational>> sorted_terms() const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_constant() const;
    Rational constant_term() const;
    std::uint32_t degree() const;
    std::vector<Variable> variables() const;

    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Rational &s);
    // this += scale * a * b
    Polynomial &add_product(const Polynomial &a, const Polynomial &b, const Rational &scale = 1);

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(const Rational &s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.terms_ == b.terms_; }

    Polynomial pow(unsigned k) const;
    Polynomial derivative(Variable v) const;
    // values[v] is substituted for variable v.
    Rational evaluate(std::span<const Rational> values) const;
    // images[v] is substituted for variable v.
    Polynomial substitute(std::span<const Polynomial> images) const;

private:
    Terms terms_;
};

} // namespace surfqp
