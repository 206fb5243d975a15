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

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace surfqp {

namespace {

// Sums RepElems bucketed by denominator, lifting to a common denominator once.
class Accumulator {
public:
    explicit Accumulator(std::shared_ptr<const RepSpace> space) : space_(std::move(space)) {}

    void add(const RepElem &e) {
        if (e.is_zero())
            return;
        buckets_[e.den_exponents()] += e.numerator();
    }

    void add_product(const RepElem &a, const RepElem &b) {
        if (a.is_zero() || b.is_zero())
            return;
        std::vector<std::uint32_t> den = a.den_exponents();
        for (std::size_t u = 0; u < den.size(); ++u)
            den[u] += b.den_exponent(static_cast<int>(u));
        buckets_[den].add_product(a.numerator(), b.numerator());
    }

    RepElem result() const {
        std::vector<std::uint32_t> top(static_cast<std::size_t>(space_->rank()), 0);
        for (const auto &[den, num] : buckets_)
            if (!num.is_zero())
                for (std::size_t u = 0; u < top.size(); ++u)
                    top[u] = std::max(top[u], den[u]);
        Polynomial sum;
        for (const auto &[den, num] : buckets_)
            if (!num.is_zero())
                sum += RepElem(space_, num, den).numerator_over(top);
        return RepElem(space_, std::move(sum), std::move(top));
    }

private:
    std::shared_ptr<const RepSpace> space_;
    std::map<std::vector<std::uint32_t>, Polynomial> buckets_;
};

} // namespace

RepSpace::RepSpace(const SurfaceSignature &sig, int dim) : sig_(sig), dim_(dim) {
    sig_.validate();
    if (dim < 1)
        throw std::invalid_argument("matrix size N must be at least 1");
    if (num_variables() > 0xffffu)
        throw std::invalid_argument("too many variables");
    std::vector<int> perm(static_cast<std::size_t>(dim));
    for (int u = 0; u < rank(); ++u) {
        std::iota(perm.begin(), perm.end(), 0);
        Polynomial det;
        do {
            int inversions = 0;
            for (int a = 0; a < dim; ++a)
                for (int b = a + 1; b < dim; ++b)
                    if (perm[a] > perm[b])
                        ++inversions;
            Monomial m;
            for (int i = 0; i < dim; ++i)
                m = m * Monomial::variable(variable(u, i, perm[i]));
            det.add_term(m, inversions % 2 == 0 ? 1 : -1);
        } while (std::next_permutation(perm.begin(), perm.end()));
        dets_.push_back(std::move(det));
    }
    det_partials_.resize(num_variables());
    for (Variable v = 0; v < num_variables(); ++v)
        det_partials_[v] = dets_[generator_of(v)].derivative(v);
}

std::string RepSpace::variable_name(Variable v) const {
    return sig_.generator_name(generator_of(v)) + "_" + std::to_string(row_of(v) + 1) + "_" +
           std::to_string(col_of(v) + 1);
}

Polynomial RepSpace::det_power(int generator, std::uint32_t k) const {
    if (k == 0)
        return Polynomial::constant(1);
    if (k == 1)
        return dets_[generator];
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = det_powers_.find({generator, k});
    if (it == det_powers_.end())
        it = det_powers_.emplace(std::make_pair(generator, k), dets_[generator].pow(k)).first;
    return it->second;
}

RepElem::RepElem(std::shared_ptr<const RepSpace> space) : space_(std::move(space)) {
    if (space_)
        den_.assign(static_cast<std::size_t>(space_->rank()), 0);
}

RepElem::RepElem(std::shared_ptr<const RepSpace> space, Polynomial numerator, std::vector<std::uint32_t> den)
    : space_(std::move(space)), num_(std::move(numerator)), den_(std::move(den)) {
    if (!space_)
        throw std::invalid_argument("RepElem needs a representation space");
    den_.resize(static_cast<std::size_t>(space_->rank()), 0);
    normalize_zero();
}

std::vector<std::uint32_t> RepElem::den_exponents() const {
    if (!space_)
        return {};
    return den_;
}

void RepElem::normalize_zero() {
    if (num_.is_zero())
        std::fill(den_.begin(), den_.end(), 0);
}

void RepElem::adopt_space(const RepElem &o) {
    if (!space_ && o.space_) {
        space_ = o.space_;
        den_.assign(static_cast<std::size_t>(space_->rank()), 0);
    }
}

Polynomial RepElem::numerator_over(const std::vector<std::uint32_t> &target) const {
    Polynomial out = num_;
    if (out.is_zero())
        return out;
    for (std::size_t u = 0; u < den_.size(); ++u) {
        if (target[u] < den_[u])
            throw std::logic_error("target denominator below current");
        if (target[u] > den_[u])
            out = out * space_->det_power(static_cast<int>(u), target[u] - den_[u]);
    }
    return out;
}

RepElem &RepElem::operator+=(const RepElem &o) {
    adopt_space(o);
    if (o.is_zero())
        return *this;
    if (is_zero()) {
        num_ = o.num_;
        den_ = o.den_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        std::vector<std::uint32_t> top = den_;
        for (std::size_t u = 0; u < top.size(); ++u)
            top[u] = std::max(top[u], o.den_[u]);
        num_ = numerator_over(top) + o.numerator_over(top);
        den_ = std::move(top);
    }
    normalize_zero();
    return *this;
}

RepElem &RepElem::operator-=(const RepElem &o) { return *this += -o; }

RepElem &RepElem::operator*=(const RepElem &o) {
    adopt_space(o);
    if (is_zero() || o.is_zero()) {
        num_ = Polynomial();
        normalize_zero();
        return *this;
    }
    num_ = num_ * o.num_;
    for (std::size_t u = 0; u < den_.size(); ++u)
        den_[u] += o.den_[u];
    normalize_zero();
    return *this;
}

RepElem &RepElem::operator*=(const Rational &s) {
    num_ *= s;
    normalize_zero();
    return *this;
}

bool operator==(const RepElem &a, const RepElem &b) {
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    if (a.den_ == b.den_)
        return a.num_ == b.num_;
    std::vector<std::uint32_t> top = a.den_;
    for (std::size_t u = 0; u < top.size(); ++u)
        top[u] = std::max(top[u], b.den_[u]);
    return a.numerator_over(top) == b.numerator_over(top);
}

namespace {

std::vector<Polynomial> positive_word_matrix(const RepSpace &space, const Word &w) {
    const int n = space.dim();
    std::vector<Polynomial> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        m[i * n + i] = Polynomial::constant(1);
    for (Letter l : w.letters()) {
        if (letter_exponent(l) < 0)
            throw std::logic_error("positive word expected");
        const int u = letter_generator(l);
        std::vector<Polynomial> next(m.size());
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    next[i * n + j].add_product(m[i * n + k], Polynomial::variable(space.variable(u, k, j)));
        m = std::move(next);
    }
    return m;
}

} // namespace

RepAlgebra::RepAlgebra(const SurfaceSignature &sig, int dim)
    : space_(std::make_shared<const RepSpace>(sig, dim)), dbl_(sig) {
    const int n = dim;
    const std::size_t nv = space_->num_variables();
    table_.resize(nv * nv);
    // {x^u_ij, x^v_kl} = sum c W'_kj W''_il over terms c W' ⊗ W'' of <<x_u, x_v>>
    for (int u = 0; u < sig.rank(); ++u)
        for (int v = 0; v < sig.rank(); ++v)
            for (const auto &[key, c] : dbl_.generator_value(u, v)) {
                const auto first = positive_word_matrix(*space_, key[0]);
                const auto second = positive_word_matrix(*space_, key[1]);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k)
                            for (int l = 0; l < n; ++l) {
                                const Variable x = space_->variable(u, i, j);
                                const Variable y = space_->variable(v, k, l);
                                table_[x * nv + y].add_product(first[k * n + j], second[i * n + l], c);
                            }
            }
}

RepElem RepAlgebra::constant(const Rational &c) const { return RepElem(space_, Polynomial::constant(c)); }

RepElem RepAlgebra::symbol(int generator, int i, int j) const {
    if (generator < 0 || generator >= signature().rank() || i < 0 || j < 0 || i >= dim() || j >= dim())
        throw std::out_of_range("entry index out of range");
    return symbol(space_->variable(generator, i, j));
}

RepElem RepAlgebra::symbol(Variable v) const { return RepElem(space_, Polynomial::variable(v)); }

RepElem RepAlgebra::determinant(int generator) const { return RepElem(space_, space_->det(generator)); }

RepElem RepAlgebra::det_inverse(int generator) const {
    std::vector<std::uint32_t> den(static_cast<std::size_t>(signature().rank()), 0);
    den[generator] = 1;
    return RepElem(space_, Polynomial::constant(1), std::move(den));
}

RepElem RepAlgebra::letter_entry(Letter l, int i, int j) const {
    const int u = letter_generator(l);
    if (letter_exponent(l) > 0)
        return symbol(u, i, j);
    if (i < 0 || j < 0 || i >= dim() || j >= dim())
        throw std::out_of_range("entry index out of range");
    // (x^-1)_ij = adj(x)_ij / det(x), adj(x)_ij = d det / d x_ji
    std::vector<std::uint32_t> den(static_cast<std::size_t>(signature().rank()), 0);
    den[u] = 1;
    return RepElem(space_, space_->det_partial(space_->variable(u, j, i)), std::move(den));
}

std::vector<RepElem> RepAlgebra::word_matrix(const Word &w) const {
    const int n = dim();
    std::vector<RepElem> m(static_cast<std::size_t>(n) * n, zero());
    for (int i = 0; i < n; ++i)
        m[i * n + i] = constant(1);
    for (Letter l : w.letters()) {
        std::vector<RepElem> letter(m.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                letter[i * n + j] = letter_entry(l, i, j);
        std::vector<RepElem> next(m.size(), zero());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Accumulator acc(space_);
                for (int k = 0; k < n; ++k)
                    acc.add_product(m[i * n + k], letter[k * n + j]);
                next[i * n + j] = acc.result();
            }
        m = std::move(next);
    }
    return m;
}

RepElem RepAlgebra::entry(const Word &w, int i, int j) const {
    if (i < 0 || j < 0 || i >= dim() || j >= dim())
        throw std::out_of_range("entry index out of range");
    return word_matrix(w)[i * dim() + j];
}

RepElem RepAlgebra::entry(const AlgElem &a, int i, int j) const {
    Accumulator acc(space_);
    for (const auto &[w, c] : a)
        acc.add(c * entry(w, i, j));
    return acc.result();
}

RepElem RepAlgebra::trace(const Word &w) const {
    const auto m = word_matrix(w);
    Accumulator acc(space_);
    for (int i = 0; i < dim(); ++i)
        acc.add(m[i * dim() + i]);
    return acc.result();
}

RepElem RepAlgebra::trace(const AlgElem &a) const {
    Accumulator acc(space_);
    for (const auto &[w, c] : a)
        acc.add(c * trace(w));
    return acc.result();
}

// d(n / det^k)/dx for x an entry of generator u:
//   (dn/dx det_u - k_u n d det_u/dx) / (det^k det_u)
RepElem RepAlgebra::partial(const RepElem &f, Variable v) const {
    if (f.is_zero())
        return zero();
    const int u = space_->generator_of(v);
    const std::uint32_t k = f.den_exponent(u);
    Polynomial dn = f.numerator().derivative(v);
    if (k == 0)
        return RepElem(space_, std::move(dn), f.den_exponents());
    Polynomial num = dn * space_->det(u);
    num.add_product(f.numerator(), space_->det_partial(v), Rational(-static_cast<long>(k)));
    std::vector<std::uint32_t> den = f.den_exponents();
    den[u] += 1;
    return RepElem(space_, std::move(num), std::move(den));
}

std::vector<Variable> RepAlgebra::support(const RepElem &f) const {
    std::vector<Variable> vars = f.numerator().variables();
    if (f.is_zero())
        return vars;
    for (int u = 0; u < signature().rank(); ++u)
        if (f.den_exponent(u) > 0)
            for (int i = 0; i < dim(); ++i)
                for (int j = 0; j < dim(); ++j)
                    vars.push_back(space_->variable(u, i, j));
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

Gradient RepAlgebra::gradient(const RepElem &f) const {
    Gradient out;
    for (Variable v : support(f)) {
        RepElem d = partial(f, v);
        if (!d.is_zero())
            out.emplace_back(v, std::move(d));
    }
    return out;
}

RepElem RepAlgebra::bracket(const RepElem &f, const RepElem &g) const { return bracket(gradient(f), gradient(g)); }

// {f, g} = sum_{x, y} df/dx dg/dy {x, y}
RepElem RepAlgebra::bracket(const Gradient &df, const Gradient &dg) const {
    Accumulator total(space_);
    for (const auto &[x, fx] : df) {
        Accumulator inner(space_);
        for (const auto &[y, gy] : dg) {
            const Polynomial &t = generator_bracket(x, y);
            if (t.is_zero())
                continue;
            inner.add(gy * RepElem(space_, t));
        }
        total.add_product(fx, inner.result());
    }
    return total.result();
}

RepElem RepAlgebra::gl_action(const RationalMatrix &w, const RepElem &f) const {
    const int n = dim();
    Polynomial out;
    for (Variable x : f.numerator().variables()) {
        const int u = space_->generator_of(x);
        const int i = space_->row_of(x);
        const int j = space_->col_of(x);
        Polynomial image;
        for (int s = 0; s < n; ++s) {
            if (w(s, j) != 0)
                image.add_term(Monomial::variable(space_->variable(u, i, s)), w(s, j));
            if (w(i, s) != 0)
                image.add_term(Monomial::variable(space_->variable(u, s, j)), -w(i, s));
        }
        if (!image.is_zero())
            out.add_product(f.numerator().derivative(x), image);
    }
    return RepElem(space_, std::move(out), f.den_exponents());
}

RepElem RepAlgebra::group_action(const RationalMatrix &g, const RepElem &f) const {
    const int n = dim();
    const RationalMatrix ginv = g.inverse();
    std::vector<Polynomial> images(space_->num_variables());
    for (Variable x = 0; x < space_->num_variables(); ++x) {
        const int u = space_->generator_of(x);
        const int i = space_->row_of(x);
        const int j = space_->col_of(x);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                const Rational c = ginv(i, k) * g(l, j);
                if (c != 0)
                    images[x].add_term(Monomial::variable(space_->variable(u, k, l)), c);
            }
    }
    return RepElem(space_, f.numerator().substitute(images), f.den_exponents());
}

RepElem RepAlgebra::phi_action(const RepElem &f, const RepElem &g, const RepElem &h) const {
    const int n = dim();
    auto act_all = [&](const RepElem &e) {
        std::vector<RepElem> out;
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                out.push_back(gl_action(RationalMatrix::elementary(n, r, s), e));
        return out;
    };
    const auto F = act_all(f);
    const auto G = act_all(g);
    const auto H = act_all(h);
    Accumulator acc(space_);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const RepElem &hki = H[k * n + i];
                if (hki.is_zero())
                    continue;
                acc.add(-(F[i * n + j] * G[j * n + k] * hki));
                acc.add(F[j * n + k] * G[i * n + j] * hki);
            }
    return acc.result();
}

CartanTrivector CartanTrivector::phi(int dim) {
    CartanTrivector t;
    t.dim_ = dim;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                t.terms_.add({i, j, j, k, k, i}, -1);
                t.terms_.add({j, k, i, j, k, i}, 1);
            }
    return t;
}

CartanTrivector CartanTrivector::permuted(const std::array<int, 3> &perm) const {
    CartanTrivector t;
    t.dim_ = dim_;
    for (const auto &[key, c] : terms_) {
        Key moved{};
        for (int k = 0; k < 3; ++k) {
            moved[2 * k] = key[2 * (perm[k] - 1)];
            moved[2 * k + 1] = key[2 * (perm[k] - 1) + 1];
        }
        t.terms_.add(moved, c);
    }
    return t;
}

CartanTrivector CartanTrivector::adjoint_action(const RationalMatrix &w) const {
    CartanTrivector t;
    t.dim_ = dim_;
    for (const auto &[key, c] : terms_)
        for (int slot = 0; slot < 3; ++slot) {
            const int r = key[2 * slot];
            const int s = key[2 * slot + 1];
            // [w, f_rs] = sum_a w_ar f_as - sum_b w_sb f_rb
            for (int a = 0; a < dim_; ++a) {
                Key moved = key;
                moved[2 * slot] = a;
                moved[2 * slot + 1] = s;
                t.terms_.add(moved, c * w(a, r));
                moved[2 * slot] = r;
                moved[2 * slot + 1] = a;
                t.terms_.add(moved, -c * w(s, a));
            }
        }
    return t;
}

CartanTrivector CartanTrivector::conjugated(const RationalMatrix &g) const {
    const RationalMatrix ginv = g.inverse();
    LinearCombination<Key> current = terms_;
    // g f_rs g^-1 = sum_ab g_ar ginv_sb f_ab, applied one slot at a time
    for (int slot = 0; slot < 3; ++slot) {
        LinearCombination<Key> next;
        for (const auto &[key, c] : current) {
            const int r = key[2 * slot];
            const int s = key[2 * slot + 1];
            for (int a = 0; a < dim_; ++a)
                for (int b = 0; b < dim_; ++b) {
                    const Rational f = g(a, r) * ginv(s, b);
                    if (f == 0)
                        continue;
                    Key moved = key;
                    moved[2 * slot] = a;
                    moved[2 * slot + 1] = b;
                    next.add(moved, c * f);
                }
        }
        current = std::move(next);
    }
    CartanTrivector t;
    t.dim_ = dim_;
    t.terms_ = std::move(current);
    return t;
}

// tr(f_rs u) = u_sr
Rational CartanTrivector::contract(const RationalMatrix &u, const RationalMatrix &v, const RationalMatrix &w) const {
    Rational sum = 0;
    for (const auto &[key, c] : terms_)
        sum += c * u(key[1], key[0]) * v(key[3], key[2]) * w(key[5], key[4]);
    return sum;
}

Word boundary_word(const SurfaceSignature &sig) {
    Word w;
    for (int u = 1; u <= sig.genus; ++u) {
        const Word p = Word::generator(sig.p(u));
        const Word q = Word::generator(sig.q(u));
        w = w * p * q * p.inverse() * q.inverse();
    }
    for (int v = 1; v <= sig.punctures; ++v)
        w = w * Word::generator(sig.z(v));
    return w;
}

namespace {

Word power(const Word &w, int k) {
    Word out;
    for (int i = 0; i < k; ++i)
        out = out * w;
    return out;
}

// sigma_{k,l}(mu, a) = a mu^k ⊗ mu^l - mu^k ⊗ mu^l a
Tensor2 sigma(const Word &mu, int k, int l, const Word &a) {
    const Word mk = power(mu, k);
    const Word ml = power(mu, l);
    Tensor2 out;
    out.add({a * mk, ml}, 1);
    out.add({mk, ml * a}, -1);
    return out;
}

// <<mu^m, a>> = sigma_{0,m} + sigma_{m,0} + 2 sum_{0<k<m} sigma_{k,m-k}
Tensor2 power_formula(const Word &mu, int m, const Word &a) {
    Tensor2 out = sigma(mu, 0, m, a) + sigma(mu, m, 0, a);
    for (int k = 1; k < m; ++k)
        out += Rational(2) * sigma(mu, k, m - k, a);
    return out;
}

} // namespace

MomentReport moment_check(const RepAlgebra &alg, const Word &mu, int trials, std::uint64_t seed,
                          int max_word_length, int max_power, int rep_trials) {
    const SurfaceSignature &sig = alg.signature();
    const SurfaceDoubleBracket &dbl = alg.double_bracket();
    const Word one;
    const Word mubar = mu.inverse();
    MomentReport report;

    std::vector<Word> tests;
    for (int x = 0; x < sig.rank(); ++x)
        tests.push_back(Word::generator(x));
    const std::size_t generator_count = tests.size();
    for (int t = 0; t < trials; ++t) {
        Rng rng(seed, static_cast<std::uint64_t>(t));
        tests.push_back(random_word(sig, rng, max_word_length));
    }

    auto fail = [&](const std::string &identity, const Word &a, int m) {
        report.passed = false;
        report.failed_identity = identity;
        report.witness = a;
        report.power = m;
        return report;
    };

    for (const Word &a : tests) {
        ++report.checked;
        Tensor2 rhs;
        rhs.add({a, mu}, 1);
        rhs.add({a * mu, one}, 1);
        rhs.add({mu, a}, -1);
        rhs.add({one, mu * a}, -1);
        if (dbl(mu, a) != rhs)
            return fail("moment map identity", a, 1);
        for (int m = 1; m <= max_power; ++m) {
            ++report.checked;
            if (dbl(power(mu, m), a) != power_formula(mu, m, a))
                return fail("positive power formula", a, m);
            ++report.checked;
            if (dbl(power(mubar, m), a) != -power_formula(mubar, m, a))
                return fail("negative power formula", a, -m);
        }
    }

    const int n = alg.dim();
    const std::size_t rep_count = std::min(tests.size(), generator_count + static_cast<std::size_t>(std::max(rep_trials, 0)));
    std::vector<std::vector<RepElem>> a_matrices;
    std::vector<std::vector<Gradient>> a_gradients;
    for (std::size_t t = 0; t < rep_count; ++t) {
        a_matrices.push_back(alg.word_matrix(tests[t]));
        std::vector<Gradient> grads;
        for (const RepElem &e : a_matrices.back())
            grads.push_back(alg.gradient(e));
        a_gradients.push_back(std::move(grads));
    }

    for (int sign : {1, -1}) {
        const Word nu = sign > 0 ? mu : mubar;
        std::vector<std::vector<RepElem>> nu_powers;
        for (int k = 0; k <= max_power; ++k)
            nu_powers.push_back(alg.word_matrix(power(nu, k)));
        for (int m = 1; m <= max_power; ++m) {
            const auto &num = nu_powers[m];
            std::vector<Gradient> num_gradients;
            for (const RepElem &e : num)
                num_gradients.push_back(alg.gradient(e));
            for (std::size_t t = 0; t < rep_count; ++t) {
                const Word &a = tests[t];
                const auto &am = a_matrices[t];
                std::vector<std::vector<RepElem>> a_nu(m + 1), nu_a(m + 1);
                for (int k = 1; k <= m; ++k) {
                    a_nu[k] = alg.word_matrix(a * power(nu, k));
                    nu_a[k] = alg.word_matrix(power(nu, k) * a);
                }
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int u = 0; u < n; ++u)
                            for (int v = 0; v < n; ++v) {
                                ++report.checked;
                                const RepElem lhs = alg.bracket(num_gradients[i * n + j], a_gradients[t][u * n + v]);
                                RepElem rhs = am[u * n + j] * num[i * n + v] - am[i * n + v] * num[u * n + j];
                                if (u == j)
                                    rhs -= nu_a[m][i * n + v];
                                if (i == v)
                                    rhs += a_nu[m][u * n + j];
                                for (int k = 1; k < m; ++k) {
                                    RepElem s = a_nu[k][u * n + j] * nu_powers[m - k][i * n + v] -
                                                nu_powers[k][u * n + j] * nu_a[m - k][i * n + v];
                                    rhs += Rational(2) * s;
                                }
                                if (sign < 0)
                                    rhs = -rhs;
                                if (lhs != rhs) {
                                    fail(sign > 0 ? "positive power formula in A_N" : "negative power formula in A_N",
                                         a, sign * m);
                                    report.indices = {i, j, u, v};
                                    return report;
                                }
                            }
            }
        }
    }
    return report;
}

} // namespace surfqp
