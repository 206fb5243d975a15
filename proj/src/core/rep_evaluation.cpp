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

#include "surfqp/rep_evaluation.hpp"
#include "surfqp/random.hpp"

#include <stdexcept>

namespace surfqp {

RepPoint random_point(const SurfaceSignature &sig, int dim, Rng &rng) {
    RepPoint pt;
    for (int u = 0; u < sig.rank(); ++u)
        pt.matrices.push_back(random_invertible_matrix(dim, rng));
    return pt;
}

void validate_point(const RepPoint &pt, const SurfaceSignature &sig, int dim) {
    if (static_cast<int>(pt.matrices.size()) != sig.rank())
        throw std::invalid_argument("point has " + std::to_string(pt.matrices.size()) + " matrices, expected " +
                                    std::to_string(sig.rank()));
    for (const RationalMatrix &m : pt.matrices) {
        if (m.dim() != dim)
            throw std::invalid_argument("point matrix has wrong dimension");
        if (m.determinant() == 0)
            throw std::invalid_argument("point matrix is singular");
    }
}

RepPoint conjugate_point(const RationalMatrix &g, const RepPoint &pt) {
    const RationalMatrix ginv = g.inverse();
    RepPoint out;
    for (const RationalMatrix &m : pt.matrices)
        out.matrices.push_back(ginv * m * g);
    return out;
}

namespace {

std::vector<Rational> point_values(const RepSpace &space, const RepPoint &pt) {
    const int n = space.dim();
    std::vector<Rational> values(space.num_variables());
    for (int u = 0; u < space.rank(); ++u)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                values[space.variable(u, i, j)] = pt.matrices[u](i, j);
    return values;
}

Rational evaluate_with(const RepElem &f, const std::vector<Rational> &values, const RepPoint &pt) {
    if (f.is_zero())
        return 0;
    Rational out = f.numerator().evaluate(values);
    for (std::size_t u = 0; u < pt.matrices.size(); ++u) {
        const std::uint32_t k = f.den_exponent(static_cast<int>(u));
        if (k == 0)
            continue;
        const Rational d = pt.matrices[u].determinant();
        for (std::uint32_t e = 0; e < k; ++e)
            out /= d;
    }
    return out;
}

// All partial derivatives of f at a point, indexed by variable.
std::vector<Rational> numeric_gradient(const RepAlgebra &alg, const RepElem &f, const std::vector<Rational> &values,
                                       const RepPoint &pt) {
    std::vector<Rational> grad(alg.space()->num_variables());
    for (const auto &[v, d] : alg.gradient(f))
        grad[v] = evaluate_with(d, values, pt);
    return grad;
}

// v(f) at a point from the numeric gradient of f.
Rational field_from_gradient(const RepSpace &space, const TaggedField &v, const std::vector<Rational> &grad,
                             const RepPoint &pt) {
    const int n = space.dim();
    const RationalMatrix &x = pt.matrices[v.slot];
    Rational out = 0;
    if (v.side != FieldSide::R) {
        // x_is -> x_ir
        for (int i = 0; i < n; ++i)
            out += grad[space.variable(v.slot, i, v.s)] * x(i, v.r);
    }
    if (v.side != FieldSide::L) {
        // x_rj -> -x_sj
        for (int j = 0; j < n; ++j)
            out -= grad[space.variable(v.slot, v.r, j)] * x(v.s, j);
    }
    return out;
}

Rational bracket_from_gradients(const RepSpace &space, const BivectorSpec &b, const std::vector<Rational> &df,
                                const std::vector<Rational> &dg, const RepPoint &pt) {
    Rational out = 0;
    for (const WedgeTerm &t : b.terms) {
        const Rational vf = field_from_gradient(space, t.first, df, pt);
        const Rational wg = field_from_gradient(space, t.second, dg, pt);
        const Rational vg = field_from_gradient(space, t.first, dg, pt);
        const Rational wf = field_from_gradient(space, t.second, df, pt);
        out += t.coeff * (vf * wg - vg * wf);
    }
    return out;
}

} // namespace

Rational evaluate(const RepElem &f, const RepPoint &pt) {
    if (f.is_zero())
        return 0;
    return evaluate_with(f, point_values(*f.space(), pt), pt);
}

Polynomial field_on_symbol(const RepSpace &space, const TaggedField &v, Variable x) {
    Polynomial out;
    if (space.generator_of(x) != v.slot)
        return out;
    const int i = space.row_of(x);
    const int j = space.col_of(x);
    if (v.side != FieldSide::R && j == v.s)
        out.add_term(Monomial::variable(space.variable(v.slot, i, v.r)), 1);
    if (v.side != FieldSide::L && i == v.r)
        out.add_term(Monomial::variable(space.variable(v.slot, v.s, j)), -1);
    return out;
}

RepElem field_apply(const RepAlgebra &alg, const TaggedField &v, const RepElem &f) {
    RepElem out = alg.zero();
    for (const auto &[x, d] : alg.gradient(f)) {
        Polynomial image = field_on_symbol(*alg.space(), v, x);
        if (!image.is_zero())
            out += d * RepElem(alg.space(), std::move(image));
    }
    return out;
}

Rational field_apply(const RepAlgebra &alg, const TaggedField &v, const RepElem &f, const RepPoint &pt) {
    const auto values = point_values(*alg.space(), pt);
    return field_from_gradient(*alg.space(), v, numeric_gradient(alg, f, values, pt), pt);
}

RepElem bivector_bracket(const RepAlgebra &alg, const BivectorSpec &b, const RepElem &f, const RepElem &g) {
    RepElem out = alg.zero();
    for (const WedgeTerm &t : b.terms) {
        RepElem term = field_apply(alg, t.first, f) * field_apply(alg, t.second, g);
        term -= field_apply(alg, t.first, g) * field_apply(alg, t.second, f);
        out += t.coeff * term;
    }
    return out;
}

Rational bivector_bracket(const RepAlgebra &alg, const BivectorSpec &b, const RepElem &f, const RepElem &g,
                          const RepPoint &pt) {
    const auto values = point_values(*alg.space(), pt);
    return bracket_from_gradients(*alg.space(), b, numeric_gradient(alg, f, values, pt),
                                  numeric_gradient(alg, g, values, pt), pt);
}

BivectorSpec build_fusion_bivector(const SurfaceSignature &sig, int dim, bool include_psi) {
    BivectorSpec b;
    b.dim = dim;
    auto add = [&](int c, int slot1, FieldSide side1, int slot2, FieldSide side2) {
        for (int r = 0; r < dim; ++r)
            for (int s = 0; s < dim; ++s)
                b.terms.push_back({Rational(c), {slot1, side1, r, s}, {slot2, side2, s, r}});
    };
    using enum FieldSide;

    std::vector<std::vector<int>> pieces;
    for (int u = 1; u <= sig.genus; ++u) {
        const int p = sig.p(u);
        const int q = sig.q(u);
        add(-1, p, L, q, R);
        add(-1, p, R, q, L);
        add(-1, p, R, q, R);
        add(+1, p, L, q, L);
        add(+1, p, L, p, R);
        add(-1, q, L, q, R);
        pieces.push_back({p, q});
    }
    for (int v = 1; v <= sig.punctures; ++v) {
        const int z = sig.z(v);
        add(+1, z, L, z, R);
        pieces.push_back({z});
    }
    if (include_psi)
        for (std::size_t a = 0; a < pieces.size(); ++a)
            for (std::size_t c = a + 1; c < pieces.size(); ++c)
                for (int x : pieces[a])
                    for (int y : pieces[c])
                        add(-1, x, Conj, y, Conj);
    return b;
}

ConstructionReport compare_constructions(const RepAlgebra &alg, int trials, std::uint64_t seed, bool include_psi,
                                         bool symbolic, int word_pairs, int max_word_length) {
    const RepSpace &space = *alg.space();
    const SurfaceSignature &sig = alg.signature();
    const int n = alg.dim();
    const BivectorSpec b = build_fusion_bivector(sig, n, include_psi);
    const auto nvars = static_cast<Variable>(space.num_variables());
    ConstructionReport report;

    auto fail = [&](const std::string &left, const std::string &right, Rational lhs, Rational rhs,
                    std::optional<RepPoint> pt) {
        report.passed = false;
        report.witness_left = left;
        report.witness_right = right;
        report.bracket_value = std::move(lhs);
        report.bivector_value = std::move(rhs);
        report.witness_point = std::move(pt);
    };

    for (int t = 0; t < trials && report.passed; ++t) {
        Rng rng(seed, static_cast<std::uint64_t>(t));
        const RepPoint pt = random_point(sig, n, rng);
        const auto values = point_values(space, pt);
        ++report.points;

        std::vector<Rational> table(static_cast<std::size_t>(nvars) * nvars);
        for (Variable x = 0; x < nvars; ++x)
            for (Variable y = 0; y < nvars; ++y)
                table[x * nvars + y] = alg.generator_bracket(x, y).evaluate(values);
        auto qp_value = [&](const std::vector<Rational> &df, const std::vector<Rational> &dg) {
            Rational out = 0;
            for (Variable x = 0; x < nvars; ++x) {
                if (df[x] == 0)
                    continue;
                for (Variable y = 0; y < nvars; ++y)
                    if (dg[y] != 0)
                        out += df[x] * dg[y] * table[x * nvars + y];
            }
            return out;
        };
        auto unit_gradient = [&](Variable v) {
            std::vector<Rational> g(nvars);
            g[v] = 1;
            return g;
        };

        for (Variable x = 0; x < nvars && report.passed; ++x) {
            const auto dx = unit_gradient(x);
            for (Variable y = 0; y < nvars; ++y) {
                const auto dy = unit_gradient(y);
                Rational lhs = table[x * nvars + y];
                Rational rhs = bracket_from_gradients(space, b, dx, dy, pt);
                ++report.comparisons;
                if (lhs != rhs) {
                    fail(space.variable_name(x), space.variable_name(y), lhs, rhs, pt);
                    break;
                }
            }
        }

        for (int k = 0; k < word_pairs && report.passed; ++k) {
            const Word a = random_word(sig, rng, max_word_length);
            const Word c = random_word(sig, rng, max_word_length);
            const int i = static_cast<int>(rng.below(n));
            const int j = static_cast<int>(rng.below(n));
            const int r = static_cast<int>(rng.below(n));
            const int s = static_cast<int>(rng.below(n));
            const auto da = numeric_gradient(alg, alg.entry(a, i, j), values, pt);
            const auto dc = numeric_gradient(alg, alg.entry(c, r, s), values, pt);
            Rational lhs = qp_value(da, dc);
            Rational rhs = bracket_from_gradients(space, b, da, dc, pt);
            ++report.comparisons;
            if (lhs != rhs) {
                auto name = [&](const Word &w, int p, int q) {
                    return "(" + to_string(w, sig) + ")_" + std::to_string(p + 1) + "_" + std::to_string(q + 1);
                };
                fail(name(a, i, j), name(c, r, s), lhs, rhs, pt);
            }
        }
    }

    if (symbolic && report.passed) {
        report.symbolic_checked = true;
        for (Variable x = 0; x < nvars && report.passed; ++x)
            for (Variable y = 0; y < nvars; ++y) {
                const RepElem fx = alg.symbol(x);
                const RepElem fy = alg.symbol(y);
                ++report.comparisons;
                if (!(alg.bracket(fx, fy) == bivector_bracket(alg, b, fx, fy))) {
                    fail(space.variable_name(x), space.variable_name(y), 0, 0, std::nullopt);
                    report.bracket_value.reset();
                    report.bivector_value.reset();
                    break;
                }
            }
    }
    return report;
}

} // namespace surfqp
