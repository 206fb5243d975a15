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

#include "surfqp/verify.hpp"
#include "surfqp/random.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace surfqp {

namespace {

std::string signature_label(const SurfaceSignature &sig) {
    return "(" + std::to_string(sig.genus) + "," + std::to_string(sig.punctures) + ")";
}

std::uint64_t fnv1a(const std::string &s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct Check {
    std::string name;
    SurfaceSignature sig;
    int dim = 0;
    bool passed = true;
    int checked = 0;
    Json witness;
    Json info;

    void fail(Json w) {
        passed = false;
        witness = std::move(w);
    }

    Json json() const {
        Json out;
        out["name"] = name;
        out["signature"] = signature_label(sig);
        if (dim > 0)
            out["dim"] = dim;
        out["passed"] = passed;
        out["checked"] = checked;
        if (!witness.is_null())
            out["witness"] = witness;
        if (!info.is_null())
            out["info"] = info;
        return out;
    }
};

class SuiteRun {
public:
    SuiteRun(std::string name, const VerifyOptions &options) : name_(std::move(name)), options_(options) {}

    int trials(int fallback) const { return options_.trials.value_or(fallback); }
    int max_len(int fallback) const { return options_.max_word_length.value_or(fallback); }
    std::uint64_t seed() const { return options_.seed; }

    std::vector<SurfaceSignature> signatures(std::vector<SurfaceSignature> defaults) const {
        if (options_.signature)
            return {*options_.signature};
        return defaults;
    }
    std::vector<int> dims(std::vector<int> defaults) const {
        if (options_.dim)
            return {*options_.dim};
        return defaults;
    }

    Check &add(const std::string &name, const SurfaceSignature &sig, int dim = 0) {
        Check c;
        c.name = name;
        c.sig = sig;
        c.dim = dim;
        checks_.push_back(std::move(c));
        return checks_.back();
    }

    // Independent stream per (check, signature, dim, trial).
    Rng rng(const Check &c, int trial) const {
        const std::string key = c.name + signature_label(c.sig) + std::to_string(c.dim);
        return Rng(Rng::splitmix64(options_.seed ^ fnv1a(key)), static_cast<std::uint64_t>(trial));
    }
    std::uint64_t stream_seed(const Check &c) const {
        return Rng::splitmix64(options_.seed ^ fnv1a(c.name + signature_label(c.sig) + std::to_string(c.dim)));
    }

    Json report() const {
        Json out;
        out["suite"] = name_;
        out["seed"] = options_.seed;
        bool passed = true;
        Json checks = Json::array();
        for (const Check &c : checks_) {
            passed = passed && c.passed;
            checks.push_back(c.json());
        }
        out["passed"] = passed;
        out["checks"] = std::move(checks);
        return out;
    }

private:
    std::string name_;
    const VerifyOptions &options_;
    std::deque<Check> checks_;
};

// Runs body(rng) for each trial until it returns false; body records the failure.
template <class F> void run_trials(const SuiteRun &run, Check &check, int trials, F &&body) {
    for (int t = 0; t < trials && check.passed; ++t) {
        Rng rng = run.rng(check, t);
        ++check.checked;
        body(rng);
    }
}

Json word_witness(const SurfaceSignature &sig, std::initializer_list<std::pair<const char *, Word>> words) {
    Json w;
    for (const auto &[k, v] : words)
        w[k] = to_string(v, sig);
    return w;
}

const std::vector<SurfaceSignature> kFoxSignatures = {{0, 1}, {1, 0}, {1, 1}, {2, 1}, {0, 2}};

Json fox_suite(const VerifyOptions &options) {
    SuiteRun run("fox", options);
    const int trials = run.trials(200);
    const int len = run.max_len(4);
    for (const SurfaceSignature &sig : run.signatures(kFoxSignatures)) {
        const FoxPairingTable eta(sig);
        const WordPairing bar = transpose(eta.pairing());
        const WordPairing bar_s = transpose_by_antipode(eta.pairing());
        const WordPairing rho1 = inner_pairing(unit());

        Check &left = run.add("left product rule", sig);
        run_trials(run, left, trials, [&](Rng &rng) {
            const Word a1 = random_word(sig, rng, len), a2 = random_word(sig, rng, len), b = random_word(sig, rng, len);
            const AlgElem lhs = eta.eta(a1 * a2, b);
            const AlgElem rhs = eta.eta(a1, b) + a1 * eta.eta(a2, b);
            if (lhs != rhs) {
                Json w = word_witness(sig, {{"a1", a1}, {"a2", a2}, {"b", b}});
                w["lhs"] = to_json(lhs, sig);
                w["rhs"] = to_json(rhs, sig);
                left.fail(w);
            }
        });

        Check &right = run.add("right product rule", sig);
        run_trials(run, right, trials, [&](Rng &rng) {
            const Word a = random_word(sig, rng, len), b1 = random_word(sig, rng, len), b2 = random_word(sig, rng, len);
            const AlgElem lhs = eta.eta(a, b1 * b2);
            const AlgElem rhs = eta.eta(a, b1) * b2 + eta.eta(a, b2);
            if (lhs != rhs) {
                Json w = word_witness(sig, {{"a", a}, {"b1", b1}, {"b2", b2}});
                w["lhs"] = to_json(lhs, sig);
                w["rhs"] = to_json(rhs, sig);
                right.fail(w);
            }
        });

        Check &sum = run.add("pairing plus transpose is -rho_1", sig);
        run_trials(run, sum, trials, [&](Rng &rng) {
            const Word a = random_word(sig, rng, len), b = random_word(sig, rng, len);
            const AlgElem lhs = eta.eta(a, b) + bar(a, b);
            const AlgElem rhs = -rho1(a, b);
            if (lhs != rhs) {
                Json w = word_witness(sig, {{"a", a}, {"b", b}});
                w["lhs"] = to_json(lhs, sig);
                w["rhs"] = to_json(rhs, sig);
                sum.fail(w);
            }
        });

        Check &anti = run.add("transpose via antipode", sig);
        run_trials(run, anti, trials, [&](Rng &rng) {
            const Word a = random_word(sig, rng, len), b = random_word(sig, rng, len);
            const AlgElem lhs = bar(a, b);
            const AlgElem rhs = bar_s(a, b);
            if (lhs != rhs) {
                Json w = word_witness(sig, {{"a", a}, {"b", b}});
                w["lhs"] = to_json(lhs, sig);
                w["rhs"] = to_json(rhs, sig);
                anti.fail(w);
            }
        });

        Check &unreduced = run.add("unreduced factorizations", sig);
        run_trials(run, unreduced, trials, [&](Rng &rng) {
            const Word a = random_word(sig, rng, len), b = random_word(sig, rng, len);
            auto pad = [&](const Word &w) {
                std::vector<Letter> letters = w.letters();
                const Letter x = make_letter(static_cast<int>(rng.below(sig.rank())), rng.below(2) ? 1 : -1);
                const auto at = static_cast<std::ptrdiff_t>(rng.below(letters.size() + 1));
                letters.insert(letters.begin() + at, {x, -x});
                return letters;
            };
            const auto ua = pad(a);
            const auto ub = pad(b);
            const AlgElem lhs = eta.eta_letters(ua, ub);
            const AlgElem rhs = eta.eta(a, b);
            if (lhs != rhs) {
                Json w = word_witness(sig, {{"a", a}, {"b", b}});
                w["lhs"] = to_json(lhs, sig);
                w["rhs"] = to_json(rhs, sig);
                unreduced.fail(w);
            }
        });
    }
    return run.report();
}

Json double_suite(const VerifyOptions &options) {
    SuiteRun run("double", options);
    const int trials = run.trials(200);
    const int triple_trials = run.trials(100);
    const int len = run.max_len(4);
    const int triple_len = run.max_len(3);
    for (const SurfaceSignature &sig : run.signatures(kFoxSignatures)) {
        const FoxPairingTable eta(sig);
        const SurfaceDoubleBracket dbl(sig);
        const WordDoubleBracket from_pairing = dbl_from_pairing(eta.skew_pairing());
        const WordDoubleBracket with_eta = dbl_from_pairing(eta.pairing());
        const WordDoubleBracket with_bar = dbl_from_pairing(transpose(eta.pairing()));
        const WordDoubleBracket fn = dbl.function();
        const Word one;

        auto compare2 = [&](Check &c, const Tensor2 &lhs, const Tensor2 &rhs, Json w) {
            if (lhs != rhs) {
                w["lhs"] = to_json(lhs, sig);
                w["rhs"] = to_json(rhs, sig);
                c.fail(w);
            }
        };

        Check &cross = run.add("generator table matches pairing construction", sig);
        run_trials(run, cross, trials, [&](Rng &rng) {
            const Word a = random_word(sig, rng, len), b = random_word(sig, rng, len);
            compare2(cross, dbl(a, b), from_pairing(a, b), word_witness(sig, {{"a", a}, {"b", b}}));
        });

        Check &skew = run.add("skew-symmetry", sig);
        run_trials(run, skew, trials, [&](Rng &rng) {
            const Word a = random_word(sig, rng, len), b = random_word(sig, rng, len);
            compare2(skew, dbl(b, a), -permute(dbl(a, b), {2, 1}), word_witness(sig, {{"a", a}, {"b", b}}));
        });

        Check &outer = run.add("derivation in the second argument", sig);
        run_trials(run, outer, trials, [&](Rng &rng) {
            const Word a = random_word(sig, rng, len), b = random_word(sig, rng, len), c = random_word(sig, rng, len);
            compare2(outer, dbl(a, b * c), outer_act(b, dbl(a, c), one) + outer_act(one, dbl(a, b), c),
                     word_witness(sig, {{"a", a}, {"b", b}, {"c", c}}));
        });

        Check &inner = run.add("derivation in the first argument", sig);
        run_trials(run, inner, trials, [&](Rng &rng) {
            const Word a = random_word(sig, rng, len), b = random_word(sig, rng, len), c = random_word(sig, rng, len);
            compare2(inner, dbl(a * b, c), inner_act(a, dbl(b, c), one) + inner_act(one, dbl(a, c), b),
                     word_witness(sig, {{"a", a}, {"b", b}, {"c", c}}));
        });

        Check &tt = run.add("transposed pairing swaps factors", sig);
        run_trials(run, tt, trials, [&](Rng &rng) {
            const Word a = random_word(sig, rng, len), b = random_word(sig, rng, len);
            compare2(tt, with_bar(a, b), permute(with_eta(b, a), {2, 1}), word_witness(sig, {{"a", a}, {"b", b}}));
        });

        Check &derivd = run.add("angle bracket against triple bracket", sig);
        run_trials(run, derivd, triple_trials, [&](Rng &rng) {
            const Word a = random_word(sig, rng, triple_len), b = random_word(sig, rng, triple_len),
                       c = random_word(sig, rng, triple_len);
            const AlgElem A(a), B(b), C(c);
            const AlgElem lhs = angle(fn, angle(fn, A, B), C) - angle(fn, A, angle(fn, B, C)) +
                                angle(fn, B, angle(fn, A, C));
            const AlgElem rhs = m3(triple(fn, b, a, c) - triple(fn, a, b, c));
            if (lhs != rhs) {
                Json w = word_witness(sig, {{"a", a}, {"b", b}, {"c", c}});
                w["lhs"] = to_json(lhs, sig);
                w["rhs"] = to_json(rhs, sig);
                derivd.fail(w);
            }
        });
    }
    return run.report();
}

Json quasi_poisson_suite(const VerifyOptions &options) {
    SuiteRun run("quasi-poisson", options);
    const int trials = run.trials(100);
    const int len = run.max_len(4);
    for (const SurfaceSignature &sig : run.signatures({{1, 0}, {1, 1}, {0, 2}})) {
        const SurfaceDoubleBracket dbl(sig);
        Check &c = run.add("triple bracket equals triple_E", sig);
        const QuasiPoissonReport r = is_quasi_poisson(dbl.function(), sig, trials, run.stream_seed(c), len);
        c.checked = r.checked;
        if (!r.passed) {
            const auto &[a, b, d] = *r.witness;
            Json w = word_witness(sig, {{"a", a}, {"b", b}, {"c", d}});
            w["triple"] = to_json(r.triple_value, sig);
            w["expected"] = to_json(r.expected, sig);
            c.fail(w);
        }
    }
    return run.report();
}

struct Entry {
    RepElem value;
    std::string label;
};

Entry random_entry(const RepAlgebra &alg, Rng &rng, int max_len) {
    const Word w = random_word(alg.signature(), rng, max_len);
    const int i = static_cast<int>(rng.below(alg.dim()));
    const int j = static_cast<int>(rng.below(alg.dim()));
    return {alg.entry(w, i, j),
            "(" + to_string(w, alg.signature()) + ")_" + std::to_string(i + 1) + "_" + std::to_string(j + 1)};
}

Entry random_symbol(const RepAlgebra &alg, Rng &rng) {
    const auto v = static_cast<Variable>(rng.below(alg.space()->num_variables()));
    return {alg.symbol(v), alg.space()->variable_name(v)};
}

void compare_rep(Check &c, const RepElem &lhs, const RepElem &rhs, std::initializer_list<const Entry *> inputs) {
    if (lhs == rhs)
        return;
    Json w;
    Json in = Json::array();
    for (const Entry *e : inputs)
        in.push_back(e->label);
    w["inputs"] = std::move(in);
    w["lhs"] = to_json(lhs);
    w["rhs"] = to_json(rhs);
    c.fail(w);
}

Json rep_suite(const VerifyOptions &options) {
    SuiteRun run("rep-suite", options);
    const int small_len = run.max_len(2);
    const int len = run.max_len(3);

    for (const SurfaceSignature &sig : run.signatures({{1, 0}, {0, 2}}))
        for (int n : run.dims({1, 2})) {
            const RepAlgebra alg(sig, n);
            Check &c = run.add("quasi-Jacobi identity", sig, n);
            run_trials(run, c, run.trials(50), [&](Rng &rng) {
                const Entry p = random_symbol(alg, rng), q = random_symbol(alg, rng), r = random_symbol(alg, rng);
                const RepElem lhs = alg.bracket(p.value, alg.bracket(q.value, r.value)) +
                                    alg.bracket(q.value, alg.bracket(r.value, p.value)) +
                                    alg.bracket(r.value, alg.bracket(p.value, q.value));
                compare_rep(c, lhs, alg.phi_action(p.value, q.value, r.value), {&p, &q, &r});
            });
        }

    const SurfaceSignature mixed = options.signature.value_or(SurfaceSignature{1, 1});
    for (int n : run.dims({1, 2})) {
        const RepAlgebra alg(mixed, n);
        const SurfaceDoubleBracket &dbl = alg.double_bracket();

        Check &skew = run.add("skew-symmetry", mixed, n);
        run_trials(run, skew, run.trials(20), [&](Rng &rng) {
            const Entry f = random_entry(alg, rng, small_len), g = random_entry(alg, rng, small_len);
            compare_rep(skew, alg.bracket(f.value, g.value), -alg.bracket(g.value, f.value), {&f, &g});
        });

        Check &leibniz = run.add("Leibniz rule in either factor order", mixed, n);
        run_trials(run, leibniz, run.trials(20), [&](Rng &rng) {
            const Entry f = random_entry(alg, rng, small_len), g = random_entry(alg, rng, small_len),
                        h = random_entry(alg, rng, small_len);
            const RepElem rhs = f.value * alg.bracket(g.value, h.value) + g.value * alg.bracket(f.value, h.value);
            compare_rep(leibniz, alg.bracket(f.value * g.value, h.value), rhs, {&f, &g, &h});
            if (leibniz.passed)
                compare_rep(leibniz, alg.bracket(g.value * f.value, h.value), rhs, {&g, &f, &h});
        });

        Check &route = run.add("entry brackets match the double bracket", mixed, n);
        run_trials(run, route, run.trials(20), [&](Rng &rng) {
            const Word a = random_word(mixed, rng, len), b = random_word(mixed, rng, len);
            const int i = static_cast<int>(rng.below(n)), j = static_cast<int>(rng.below(n));
            const int u = static_cast<int>(rng.below(n)), v = static_cast<int>(rng.below(n));
            RepElem rhs = alg.zero();
            for (const auto &[xs, c] : dbl(a, b))
                rhs += c * (alg.entry(xs[0], u, j) * alg.entry(xs[1], i, v));
            const Entry ea{alg.entry(a, i, j), "(" + to_string(a, mixed) + ")_" + std::to_string(i + 1) + "_" +
                                                   std::to_string(j + 1)};
            const Entry eb{alg.entry(b, u, v), "(" + to_string(b, mixed) + ")_" + std::to_string(u + 1) + "_" +
                                                   std::to_string(v + 1)};
            compare_rep(route, alg.bracket(ea.value, eb.value), rhs, {&ea, &eb});
        });

        Check &goldman_check = run.add("trace bracket is twice the Goldman bracket", mixed, n);
        run_trials(run, goldman_check, run.trials(50), [&](Rng &rng) {
            const Word a = random_word(mixed, rng, len), b = random_word(mixed, rng, len);
            const Entry ta{alg.trace(a), "tr(" + to_string(a, mixed) + ")"};
            const Entry tb{alg.trace(b), "tr(" + to_string(b, mixed) + ")"};
            const RepElem lhs = alg.bracket(ta.value, tb.value);
            const AlgElem g = representatives(goldman(dbl, CyclicWord(a), CyclicWord(b)));
            compare_rep(goldman_check, lhs, Rational(2) * alg.trace(g), {&ta, &tb});
            if (goldman_check.passed)
                compare_rep(goldman_check, lhs, alg.trace(angle(dbl.function(), AlgElem(a), AlgElem(b))), {&ta, &tb});
        });

        Check &jacobi = run.add("Jacobi identity on traces", mixed, n);
        run_trials(run, jacobi, run.trials(10), [&](Rng &rng) {
            Entry t[3];
            for (Entry &e : t) {
                const Word w = random_word(mixed, rng, small_len);
                e = {alg.trace(w), "tr(" + to_string(w, mixed) + ")"};
            }
            const RepElem lhs = alg.bracket(t[0].value, alg.bracket(t[1].value, t[2].value)) +
                                alg.bracket(t[1].value, alg.bracket(t[2].value, t[0].value)) +
                                alg.bracket(t[2].value, alg.bracket(t[0].value, t[1].value));
            compare_rep(jacobi, lhs, alg.zero(), {&t[0], &t[1], &t[2]});
        });
    }

    for (int n : run.dims({2})) {
        const RepAlgebra alg(mixed, n);
        Check &gl = run.add("infinitesimal equivariance", mixed, n);
        run_trials(run, gl, run.trials(50), [&](Rng &rng) {
            const RationalMatrix w = random_matrix(n, rng);
            const Entry p = random_entry(alg, rng, small_len), q = random_entry(alg, rng, small_len);
            const RepElem lhs = alg.gl_action(w, alg.bracket(p.value, q.value));
            const RepElem rhs =
                alg.bracket(alg.gl_action(w, p.value), q.value) + alg.bracket(p.value, alg.gl_action(w, q.value));
            compare_rep(gl, lhs, rhs, {&p, &q});
        });

        Check &group = run.add("group equivariance", mixed, n);
        run_trials(run, group, run.trials(50), [&](Rng &rng) {
            const RationalMatrix g = random_invertible_matrix(n, rng);
            const Entry p = random_entry(alg, rng, small_len), q = random_entry(alg, rng, small_len);
            const RepElem lhs = alg.group_action(g, alg.bracket(p.value, q.value));
            const RepElem rhs = alg.bracket(alg.group_action(g, p.value), alg.group_action(g, q.value));
            compare_rep(group, lhs, rhs, {&p, &q});
        });

        Check &pointwise = run.add("evaluation is equivariant", mixed, n);
        run_trials(run, pointwise, run.trials(50), [&](Rng &rng) {
            const RationalMatrix g = random_invertible_matrix(n, rng);
            const Entry p = random_entry(alg, rng, small_len), q = random_entry(alg, rng, small_len);
            const RepPoint pt = random_point(mixed, n, rng);
            const RepElem b = alg.bracket(p.value, q.value);
            const Rational lhs = evaluate(alg.group_action(g, b), pt);
            const Rational rhs = evaluate(b, conjugate_point(g, pt));
            if (lhs != rhs) {
                Json w;
                w["inputs"] = {p.label, q.label};
                w["point"] = to_json(pt);
                w["lhs"] = to_string(lhs);
                w["rhs"] = to_string(rhs);
                pointwise.fail(w);
            }
        });
    }
    return run.report();
}

Json moment_json(const MomentReport &r, const SurfaceSignature &sig) {
    Json w;
    w["identity"] = r.failed_identity;
    if (r.witness)
        w["a"] = to_string(*r.witness, sig);
    w["power"] = r.power;
    if (r.failed_identity.find("A_N") != std::string::npos)
        w["indices"] = {r.indices[0] + 1, r.indices[1] + 1, r.indices[2] + 1, r.indices[3] + 1};
    return w;
}

Json moment_suite(const VerifyOptions &options) {
    SuiteRun run("moment", options);
    const int trials = run.trials(20);
    const int len = run.max_len(4);
    for (const SurfaceSignature &sig : run.signatures({{1, 0}, {1, 1}, {0, 2}}))
        for (int n : run.dims({2})) {
            const RepAlgebra alg(sig, n);
            const Word mu = boundary_word(sig);
            Check &c = run.add("boundary word is a moment map", sig, n);
            c.info = {{"mu", to_string(mu, sig)}};
            const MomentReport r = moment_check(alg, mu, trials, run.stream_seed(c), len, 3, 1);
            c.checked = r.checked;
            if (!r.passed)
                c.fail(moment_json(r, sig));

            if (sig.genus > 0) {
                Check &neg = run.add("generator p1 is not a moment map", sig, n);
                const MomentReport rn = moment_check(alg, Word::generator(sig.p(1)), trials, run.stream_seed(neg), len,
                                                     1, 0);
                neg.checked = rn.checked;
                if (rn.passed)
                    neg.fail({{"mu", "p1"}});
                else
                    neg.info = moment_json(rn, sig);
            }
        }
    return run.report();
}

Json aksm_suite(const VerifyOptions &options) {
    SuiteRun run("aksm", options);
    const int trials = run.trials(20);
    std::vector<std::pair<SurfaceSignature, int>> cases;
    if (options.signature)
        cases.push_back({*options.signature, options.dim.value_or(2)});
    else
        for (const SurfaceSignature &sig : std::vector<SurfaceSignature>{{1, 0}, {0, 1}, {0, 2}, {1, 1}})
            cases.push_back({sig, options.dim.value_or(2)});

    for (const auto &[sig, n] : cases) {
        const RepAlgebra alg(sig, n);
        const bool single_piece = sig.genus + sig.punctures == 1;
        Check &c = run.add("fused bivector matches the bracket", sig, n);
        const ConstructionReport r = compare_constructions(alg, trials, run.stream_seed(c), true, single_piece);
        c.checked = r.comparisons;
        c.info = {{"points", r.points}, {"symbolic", r.symbolic_checked}};
        if (!r.passed) {
            Json w{{"left", *r.witness_left}, {"right", *r.witness_right}};
            if (r.bracket_value)
                w["bracket"] = to_string(*r.bracket_value);
            if (r.bivector_value)
                w["bivector"] = to_string(*r.bivector_value);
            if (r.witness_point)
                w["point"] = to_json(*r.witness_point);
            c.fail(w);
        }

        if (!single_piece && sig.genus + sig.punctures > 1) {
            Check &neg = run.add("fusion without psi is rejected", sig, n);
            const ConstructionReport rn = compare_constructions(alg, 1, run.stream_seed(neg), false, false);
            neg.checked = rn.comparisons;
            if (rn.passed)
                neg.fail({{"points", rn.points}});
            else
                neg.info = {{"left", *rn.witness_left}, {"right", *rn.witness_right}};
        }
    }
    return run.report();
}

} // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = {"fox", "double", "quasi-poisson", "rep-suite", "moment", "aksm"};
    return names;
}

Json run_suite(const std::string &name, const VerifyOptions &options) {
    if (options.signature) {
        options.signature->validate();
        if (options.signature->rank() == 0)
            throw std::invalid_argument("the surface needs at least one generator");
    }
    if (options.dim && *options.dim < 1)
        throw std::invalid_argument("dimension must be at least 1");
    if (options.trials && *options.trials < 1)
        throw std::invalid_argument("trials must be at least 1");
    if (options.max_word_length && *options.max_word_length < 1)
        throw std::invalid_argument("maximum word length must be at least 1");

    if (name == "fox")
        return fox_suite(options);
    if (name == "double")
        return double_suite(options);
    if (name == "quasi-poisson")
        return quasi_poisson_suite(options);
    if (name == "rep-suite")
        return rep_suite(options);
    if (name == "moment")
        return moment_suite(options);
    if (name == "aksm")
        return aksm_suite(options);
    if (name == "all") {
        Json out;
        out["suite"] = "all";
        out["seed"] = options.seed;
        bool passed = true;
        Json suites = Json::array();
        for (const std::string &s : suite_names()) {
            Json r = run_suite(s, options);
            passed = passed && r["passed"].get<bool>();
            suites.push_back(std::move(r));
        }
        out["passed"] = passed;
        out["suites"] = std::move(suites);
        return out;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string format_report(const Json &report) {
    std::ostringstream out;
    auto one = [&](const Json &suite) {
        for (const Json &c : suite["checks"]) {
            out << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "  " << suite["suite"].get<std::string>() << "  "
                << c["signature"].get<std::string>();
            if (c.contains("dim"))
                out << " N=" << c["dim"].get<int>();
            out << "  " << c["name"].get<std::string>() << "  (" << c["checked"].get<int>() << " checks)\n";
            if (c.contains("witness"))
                out << "      witness: " << c["witness"].dump() << "\n";
        }
    };
    if (report.contains("suites"))
        for (const Json &s : report["suites"])
            one(s);
    else
        one(report);
    out << (report["passed"].get<bool>() ? "all checks passed" : "some checks FAILED") << "\n";
    return out.str();
}

} // namespace surfqp
