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

#ifndef SURFQP_SURFQP_H
#define SURFQP_SURFQP_H

#include <stdint.h>

#if defined(SURFQP_BUILDING_LIBRARY)
#define SURFQP_API __attribute__((visibility("default")))
#else
#define SURFQP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum surfqp_status {
    SURFQP_OK = 0,
    SURFQP_CHECK_FAILED = 1,
    SURFQP_PARSE_ERROR = 2,
    SURFQP_INVALID_ARGUMENT = 3,
    SURFQP_INTERNAL = 4
} surfqp_status;

/* A surface signature (genus, punctures) together with a matrix size N. */
typedef struct surfqp_context surfqp_context;

/* Negative fields select the suite defaults. genus and punctures must be
 * both set or both negative. */
typedef struct surfqp_verify_options {
    int genus;
    int punctures;
    int dim;
    int trials;
    int max_word_length;
    uint64_t seed;
} surfqp_verify_options;

SURFQP_API const char *surfqp_version(void);

/* Message of the last failed call on this thread, or "" if none. */
SURFQP_API const char *surfqp_last_error(void);
/* 0-based offset of the last parse error, or -1. */
SURFQP_API long surfqp_last_error_position(void);
/* 1-based index of the string argument holding the last parse error, or 0. */
SURFQP_API int surfqp_last_error_argument(void);

SURFQP_API surfqp_status surfqp_context_create(int genus, int punctures, int dim, surfqp_context **out);
SURFQP_API void surfqp_context_destroy(surfqp_context *ctx);

/* Strings returned through char ** out-parameters are owned by the caller. */
SURFQP_API void surfqp_string_free(char *s);

/* Words use the grammar "1" | gen ("^" int)? (("*" | " ") gen ("^" int)?)*
 * with gen one of p<k>, q<k>, z<k>. Results are JSON. */
SURFQP_API surfqp_status surfqp_eta(surfqp_context *ctx, const char *a, const char *b, char **json_out);
SURFQP_API surfqp_status surfqp_eta_s(surfqp_context *ctx, const char *a, const char *b, char **json_out);
SURFQP_API surfqp_status surfqp_dbl_s(surfqp_context *ctx, const char *a, const char *b, char **json_out);
SURFQP_API surfqp_status surfqp_triple(surfqp_context *ctx, const char *a, const char *b, const char *c,
                                       char **json_out);
SURFQP_API surfqp_status surfqp_goldman(surfqp_context *ctx, const char *a, const char *b, char **json_out);

/* Expressions in entry symbols p1_1_2, tr(word), det(gen), rationals, + - * ^ and parentheses. */
SURFQP_API surfqp_status surfqp_rep_bracket(surfqp_context *ctx, const char *f, const char *g, char **json_out);
/* {tr a, tr b} for words a, b, with 2 tr of their Goldman bracket for comparison. */
SURFQP_API surfqp_status surfqp_trace_bracket(surfqp_context *ctx, const char *a, const char *b, char **json_out);
/* Value of an expression at a point given as JSON: one N x N array of rational strings per generator. */
SURFQP_API surfqp_status surfqp_ev(surfqp_context *ctx, const char *expr, const char *point_json, char **json_out);

/* mu may be NULL for the boundary word. Returns SURFQP_CHECK_FAILED with a
 * report when an identity fails. */
SURFQP_API surfqp_status surfqp_moment_check(surfqp_context *ctx, const char *mu, int trials, uint64_t seed,
                                             int max_word_length, char **json_out);

/* suite: fox, double, quasi-poisson, rep-suite, moment, aksm or all.
 * Returns SURFQP_CHECK_FAILED with the report when a check fails. */
SURFQP_API surfqp_status surfqp_verify(const char *suite, const surfqp_verify_options *options, char **json_out);
/* Human-readable form of a verify report. */
SURFQP_API surfqp_status surfqp_format_report(const char *report_json, char **text_out);

#ifdef __cplusplus
}
#endif

#endif /* SURFQP_SURFQP_H */
