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

#include "surfqp/surfqp.h"

#include "surfqp/expression.hpp"
#include "surfqp/json_io.hpp"
#include "surfqp/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

using namespace surfqp;

struct surfqp_context {
    SurfaceSignature sig;
    int dim;
    FoxPairingTable eta;
    SurfaceDoubleBracket dbl;
    std::unique_ptr<RepAlgebra> rep;

    surfqp_context(const SurfaceSignature &s, int n) : sig(s), dim(n), eta(s), dbl(s) {}

    const RepAlgebra &algebra() {
        if (!rep)
            rep = std::make_unique<RepAlgebra>(sig, dim);
        return *rep;
    }
};

namespace {

struct ErrorState {
    std::string message;
    long position = -1;
    int argument = 0;
};

thread_local ErrorState last_error;

// A parse error tagged with the 1-based index of the offending argument.
struct ArgumentError {
    ParseError error;
    int argument;
};

void set_error(std::string message, long position = -1, int argument = 0) {
    last_error = {std::move(message), position, argument};
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F> auto parse_argument(int index, F &&f) {
    try {
        return f();
    } catch (const ParseError &e) {
        throw ArgumentError{e, index};
    }
}

const char *require(const char *s, const char *what) {
    if (!s)
        throw std::invalid_argument(std::string(what) + " is null");
    return s;
}

// Runs body, which returns (status, json), and translates exceptions into
// status codes.
template <class F> surfqp_status guarded(char **out, F &&body) {
    set_error("");
    if (out)
        *out = nullptr;
    try {
        auto [status, text] = body();
        if (out)
            *out = copy_string(text);
        return status;
    } catch (const ArgumentError &e) {
        set_error("argument " + std::to_string(e.argument) + ": " + e.error.what(),
                  static_cast<long>(e.error.position()), e.argument);
        return SURFQP_PARSE_ERROR;
    } catch (const ParseError &e) {
        set_error(e.what(), static_cast<long>(e.position()));
        return SURFQP_PARSE_ERROR;
    } catch (const std::invalid_argument &e) {
        set_error(e.what());
        return SURFQP_INVALID_ARGUMENT;
    } catch (const std::out_of_range &e) {
        set_error(e.what());
        return SURFQP_INVALID_ARGUMENT;
    } catch (const std::exception &e) {
        set_error(std::string("internal error: ") + e.what());
        return SURFQP_INTERNAL;
    } catch (...) {
        set_error("internal error");
        return SURFQP_INTERNAL;
    }
}

std::pair<surfqp_status, std::string> ok(const Json &j) { return {SURFQP_OK, j.dump()}; }

Word word_argument(surfqp_context *ctx, const char *text, int index) {
    require(text, "word");
    return parse_argument(index, [&] { return parse_word(text, ctx->sig); });
}

surfqp_context *require_context(surfqp_context *ctx) {
    if (!ctx)
        throw std::invalid_argument("context is null");
    return ctx;
}

} // namespace

extern "C" {

const char *surfqp_version(void) { return "0.1.0"; }

const char *surfqp_last_error(void) { return last_error.message.c_str(); }
long surfqp_last_error_position(void) { return last_error.position; }
int surfqp_last_error_argument(void) { return last_error.argument; }

surfqp_status surfqp_context_create(int genus, int punctures, int dim, surfqp_context **out) {
    return guarded(nullptr, [&]() -> std::pair<surfqp_status, std::string> {
        if (!out)
            throw std::invalid_argument("output pointer is null");
        *out = nullptr;
        const SurfaceSignature sig{genus, punctures};
        sig.validate();
        if (dim < 1)
            throw std::invalid_argument("dimension must be at least 1");
        *out = new surfqp_context(sig, dim);
        return {SURFQP_OK, ""};
    });
}

void surfqp_context_destroy(surfqp_context *ctx) { delete ctx; }

void surfqp_string_free(char *s) { std::free(s); }

surfqp_status surfqp_eta(surfqp_context *ctx, const char *a, const char *b, char **json_out) {
    return guarded(json_out, [&] {
        require_context(ctx);
        const Word x = word_argument(ctx, a, 1), y = word_argument(ctx, b, 2);
        return ok(to_json(ctx->eta.eta(x, y), ctx->sig));
    });
}

surfqp_status surfqp_eta_s(surfqp_context *ctx, const char *a, const char *b, char **json_out) {
    return guarded(json_out, [&] {
        require_context(ctx);
        const Word x = word_argument(ctx, a, 1), y = word_argument(ctx, b, 2);
        return ok(to_json(ctx->eta.eta_s(x, y), ctx->sig));
    });
}

surfqp_status surfqp_dbl_s(surfqp_context *ctx, const char *a, const char *b, char **json_out) {
    return guarded(json_out, [&] {
        require_context(ctx);
        const Word x = word_argument(ctx, a, 1), y = word_argument(ctx, b, 2);
        return ok(to_json(ctx->dbl(x, y), ctx->sig));
    });
}

surfqp_status surfqp_triple(surfqp_context *ctx, const char *a, const char *b, const char *c, char **json_out) {
    return guarded(json_out, [&] {
        require_context(ctx);
        const Word x = word_argument(ctx, a, 1), y = word_argument(ctx, b, 2), z = word_argument(ctx, c, 3);
        return ok(to_json(triple(ctx->dbl.function(), x, y, z), ctx->sig));
    });
}

surfqp_status surfqp_goldman(surfqp_context *ctx, const char *a, const char *b, char **json_out) {
    return guarded(json_out, [&] {
        require_context(ctx);
        const Word x = word_argument(ctx, a, 1), y = word_argument(ctx, b, 2);
        return ok(to_json(goldman(ctx->dbl, CyclicWord(x), CyclicWord(y)), ctx->sig));
    });
}

surfqp_status surfqp_rep_bracket(surfqp_context *ctx, const char *f, const char *g, char **json_out) {
    return guarded(json_out, [&] {
        const RepAlgebra &alg = require_context(ctx)->algebra();
        require(f, "expression");
        require(g, "expression");
        const RepElem x = parse_argument(1, [&] { return parse_rep_expression(alg, f); });
        const RepElem y = parse_argument(2, [&] { return parse_rep_expression(alg, g); });
        return ok(to_json(alg.bracket(x, y)));
    });
}

surfqp_status surfqp_trace_bracket(surfqp_context *ctx, const char *a, const char *b, char **json_out) {
    return guarded(json_out, [&] {
        const RepAlgebra &alg = require_context(ctx)->algebra();
        const Word x = word_argument(ctx, a, 1), y = word_argument(ctx, b, 2);
        const RepElem bracket = alg.bracket(alg.trace(x), alg.trace(y));
        const CyclicAlgElem g = goldman(ctx->dbl, CyclicWord(x), CyclicWord(y));
        const RepElem twice = Rational(2) * alg.trace(representatives(g));
        Json j;
        j["bracket"] = to_json(bracket);
        j["goldman"] = to_json(g, ctx->sig);
        j["twice_goldman_trace"] = to_json(twice);
        j["equal"] = bracket == twice;
        return ok(j);
    });
}

surfqp_status surfqp_ev(surfqp_context *ctx, const char *expr, const char *point_json, char **json_out) {
    return guarded(json_out, [&] {
        const RepAlgebra &alg = require_context(ctx)->algebra();
        require(expr, "expression");
        require(point_json, "point");
        const RepElem f = parse_argument(1, [&] { return parse_rep_expression(alg, expr); });
        const RepPoint pt = parse_argument(2, [&] { return parse_point(point_json, ctx->sig, ctx->dim); });
        Json j;
        j["value"] = to_string(evaluate(f, pt));
        return ok(j);
    });
}

surfqp_status surfqp_moment_check(surfqp_context *ctx, const char *mu, int trials, uint64_t seed, int max_word_length,
                                  char **json_out) {
    return guarded(json_out, [&]() -> std::pair<surfqp_status, std::string> {
        const RepAlgebra &alg = require_context(ctx)->algebra();
        if (trials < 1 || max_word_length < 1)
            throw std::invalid_argument("trials and maximum word length must be positive");
        const Word m = mu ? word_argument(ctx, mu, 1) : boundary_word(ctx->sig);
        const MomentReport r = moment_check(alg, m, trials, seed, max_word_length);
        Json j;
        j["mu"] = to_string(m, ctx->sig);
        j["dim"] = ctx->dim;
        j["passed"] = r.passed;
        j["checked"] = r.checked;
        if (!r.passed) {
            Json w;
            w["identity"] = r.failed_identity;
            if (r.witness)
                w["a"] = to_string(*r.witness, ctx->sig);
            w["power"] = r.power;
            if (r.failed_identity.find("A_N") != std::string::npos)
                w["indices"] = {r.indices[0] + 1, r.indices[1] + 1, r.indices[2] + 1, r.indices[3] + 1};
            j["witness"] = std::move(w);
        }
        return {r.passed ? SURFQP_OK : SURFQP_CHECK_FAILED, j.dump()};
    });
}

surfqp_status surfqp_verify(const char *suite, const surfqp_verify_options *options, char **json_out) {
    return guarded(json_out, [&]() -> std::pair<surfqp_status, std::string> {
        require(suite, "suite");
        VerifyOptions opts;
        if (options) {
            if ((options->genus < 0) != (options->punctures < 0))
                throw std::invalid_argument("genus and punctures must be given together");
            if (options->genus >= 0)
                opts.signature = SurfaceSignature{options->genus, options->punctures};
            if (options->dim >= 0)
                opts.dim = options->dim;
            if (options->trials >= 0)
                opts.trials = options->trials;
            if (options->max_word_length >= 0)
                opts.max_word_length = options->max_word_length;
            opts.seed = options->seed;
        }
        const Json report = run_suite(suite, opts);
        return {report["passed"].get<bool>() ? SURFQP_OK : SURFQP_CHECK_FAILED, report.dump()};
    });
}

surfqp_status surfqp_format_report(const char *report_json, char **text_out) {
    return guarded(text_out, [&]() -> std::pair<surfqp_status, std::string> {
        require(report_json, "report");
        Json j;
        try {
            j = Json::parse(report_json);
        } catch (const Json::parse_error &e) {
            throw ParseError(e.what(), e.byte > 0 ? e.byte - 1 : 0);
        }
        return {SURFQP_OK, format_report(j)};
    });
}

} // extern "C"
