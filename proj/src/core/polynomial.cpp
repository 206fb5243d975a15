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

#include "surfqp/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace surfqp {

namespace {

constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;
constexpr std::uint64_t kLowBits = 0x7f7f7f7f7f7f7f7fULL;

} // namespace

void Monomial::trim() {
    while (!words_.empty() && words_.back() == 0)
        words_.pop_back();
}

Monomial Monomial::variable(Variable v, std::uint32_t exponent) {
    if (exponent > 0xffu)
        throw std::overflow_error("monomial exponent out of range");
    Monomial m;
    if (exponent == 0)
        return m;
    m.words_.resize(v / 8 + 1, 0);
    m.words_[v / 8] = static_cast<std::uint64_t>(exponent) << (8 * (v % 8));
    return m;
}

std::uint32_t Monomial::exponent(Variable v) const {
    if (v / 8 >= words_.size())
        return 0;
    return static_cast<std::uint32_t>((words_[v / 8] >> (8 * (v % 8))) & 0xffu);
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for_each_factor([&](Variable, std::uint32_t e) { d += e; });
    return d;
}

std::vector<std::pair<Variable, std::uint32_t>> Monomial::factors() const {
    std::vector<std::pair<Variable, std::uint32_t>> out;
    for_each_factor([&](Variable v, std::uint32_t e) { out.emplace_back(v, e); });
    return out;
}

Monomial Monomial::lowered(Variable v) const {
    Monomial out = *this;
    out.words_[v / 8] -= static_cast<std::uint64_t>(1) << (8 * (v % 8));
    out.trim();
    return out;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
    const Monomial &longer = a.words_.size() >= b.words_.size() ? a : b;
    const Monomial &shorter = a.words_.size() >= b.words_.size() ? b : a;
    Monomial out = longer;
    for (std::size_t w = 0; w < shorter.words_.size(); ++w) {
        const std::uint64_t x = out.words_[w];
        const std::uint64_t y = shorter.words_[w];
        // bytewise add; a carry out of any byte means an exponent above 255
        const std::uint64_t s = ((x & kLowBits) + (y & kLowBits)) ^ ((x ^ y) & kHighBits);
        if (((x & y) | ((x | y) & ~s)) & kHighBits)
            throw std::overflow_error("monomial exponent out of range");
        out.words_[w] = s;
    }
    return out;
}

std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) {
    const std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t w = 0; w < n; ++w) {
        std::uint64_t x = w < a.words_.size() ? a.words_[w] : 0;
        std::uint64_t y = w < b.words_.size() ? b.words_[w] : 0;
        for (int byte = 0; byte < 8 && x != y; ++byte, x >>= 8, y >>= 8) {
            const std::uint64_t ex = x & 0xffu;
            const std::uint64_t ey = y & 0xffu;
            if (ex != ey)
                return ey <=> ex;
        }
    }
    return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (std::uint64_t w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
}

Polynomial Polynomial::constant(const Rational &c) {
    Polynomial p;
    p.add_term(Monomial(), c);
    return p;
}

Polynomial Polynomial::variable(Variable v) {
    Polynomial p;
    p.add_term(Monomial::variable(v), 1);
    return p;
}

void Polynomial::add_term(const Monomial &m, const Rational &c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms() const {
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    return out;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::degree() const {
    std::uint32_t d = 0;
    for (const auto &[m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

std::vector<Variable> Polynomial::variables() const {
    std::vector<Variable> vars;
    for (const auto &[m, c] : terms_)
        m.for_each_factor([&](Variable v, std::uint32_t) { vars.push_back(v); });
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &s) {
    if (s == 0)
        terms_.clear();
    for (auto &[m, c] : terms_)
        c *= s;
    return *this;
}

Polynomial &Polynomial::add_product(const Polynomial &a, const Polynomial &b, const Rational &scale) {
    if (scale == 0)
        return *this;
    terms_.reserve(terms_.size() + a.size() * b.size());
    Rational c;
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_) {
            mpq_mul(c.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            if (scale != 1)
                c *= scale;
            add_term(ma * mb, c);
        }
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    Polynomial out;
    out.add_product(a, b);
    return out;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(Variable v) const {
    Polynomial out;
    for (const auto &[m, c] : terms_) {
        const std::uint32_t e = m.exponent(v);
        if (e > 0)
            out.add_term(m.lowered(v), c * e);
    }
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
    Rational sum = 0;
    Rational term;
    for (const auto &[m, c] : terms_) {
        term = c;
        m.for_each_factor([&](Variable v, std::uint32_t e) {
            for (std::uint32_t k = 0; k < e; ++k)
                term *= values[v];
        });
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
    std::map<std::pair<Variable, std::uint32_t>, Polynomial> powers;
    auto power = [&](Variable v, std::uint32_t e) -> const Polynomial & {
        auto it = powers.find({v, e});
        if (it == powers.end())
            it = powers.emplace(std::make_pair(v, e), images[v].pow(e)).first;
        return it->second;
    };
    Polynomial out;
    for (const auto &[m, c] : terms_) {
        Polynomial term = constant(c);
        m.for_each_factor([&](Variable v, std::uint32_t e) { term = term * power(v, e); });
        out += term;
    }
    return out;
}

} // namespace surfqp
