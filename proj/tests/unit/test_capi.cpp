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

#include <doctest.h>

#include <string>

namespace {

// Takes ownership of a returned string.
std::string take(char *s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    surfqp_string_free(s);
    return out;
}

struct Ctx {
    surfqp_context *ctx = nullptr;
    Ctx(int g, int m, int n) { REQUIRE(surfqp_context_create(g, m, n, &ctx) == SURFQP_OK); }
    ~Ctx() { surfqp_context_destroy(ctx); }
};

} // namespace

TEST_CASE("context creation") {
    surfqp_context *ctx = nullptr;
    CHECK(surfqp_context_create(-1, 0, 2, &ctx) == SURFQP_INVALID_ARGUMENT);
    CHECK(ctx == nullptr);
    CHECK(std::string(surfqp_last_error()).size() > 0);
    CHECK(surfqp_context_create(1, 0, 0, &ctx) == SURFQP_INVALID_ARGUMENT);
    CHECK(surfqp_context_create(1, 0, 2, nullptr) == SURFQP_INVALID_ARGUMENT);
    surfqp_context_destroy(nullptr);
    surfqp_string_free(nullptr);
    CHECK(std::string(surfqp_version()) == "0.1.0");
}

TEST_CASE("algebra-level computations") {
    Ctx c(1, 1, 2);
    char *out = nullptr;
    CHECK(surfqp_eta(c.ctx, "q1", "p1", &out) == SURFQP_OK);
    CHECK(take(out) == R"([{"coeff":"-1","word":"1"},{"coeff":"1","word":"p1"},{"coeff":"-1","word":"q1*p1"}])");
    CHECK(std::string(surfqp_last_error()).empty());
    CHECK(surfqp_eta_s(c.ctx, "z1", "z1", &out) == SURFQP_OK);
    CHECK(take(out) == R"([{"coeff":"1","word":"1"},{"coeff":"-1","word":"z1^2"}])");
    CHECK(surfqp_dbl_s(c.ctx, "p1", "q1", &out) == SURFQP_OK);
    CHECK(take(out) == R"([{"coeff":"1","words":["1","p1*q1"]},{"coeff":"-1","words":["p1","q1"]},)"
                       R"({"coeff":"1","words":["q1","p1"]},{"coeff":"1","words":["q1*p1","1"]}])");
    CHECK(surfqp_triple(c.ctx, "1", "p1", "q1", &out) == SURFQP_OK);
    CHECK(take(out) == "[]");
    CHECK(surfqp_goldman(c.ctx, "p1", "q1", &out) == SURFQP_OK);
    CHECK(take(out) == R"([{"class":"p1*q1","coeff":"1"}])");
}

TEST_CASE("representation computations") {
    Ctx c(1, 0, 1);
    char *out = nullptr;
    CHECK(surfqp_trace_bracket(c.ctx, "p1", "q1", &out) == SURFQP_OK);
    const std::string tb = take(out);
    CHECK(tb.find(R"("equal":true)") != std::string::npos);
    CHECK(surfqp_rep_bracket(c.ctx, "p1_1_1", "q1_1_1", &out) == SURFQP_OK);
    CHECK(take(out) == R"({"den_exponents":[0,0],"terms":[{"coeff":"2","monomial":"p1_1_1*q1_1_1"}]})");
    CHECK(surfqp_ev(c.ctx, "p1_1_1 * det(q1)^-1 + tr(q1)", R"([[["2"]],[["1/3"]]])", &out) == SURFQP_OK);
    CHECK(take(out) == R"({"value":"19/3"})");
    CHECK(surfqp_ev(c.ctx, "p1_1_1", R"([[["0"]],[["1"]]])", &out) == SURFQP_INVALID_ARGUMENT);
    CHECK(out == nullptr);
}

TEST_CASE("parse errors carry position and argument") {
    Ctx c(1, 1, 2);
    char *out = nullptr;
    CHECK(surfqp_eta(c.ctx, "p1", "q1*x2", &out) == SURFQP_PARSE_ERROR);
    CHECK(out == nullptr);
    CHECK(surfqp_last_error_position() == 3);
    CHECK(surfqp_last_error_argument() == 2);
    CHECK(surfqp_rep_bracket(c.ctx, "p1_3_1", "q1_1_1", &out) == SURFQP_PARSE_ERROR);
    CHECK(surfqp_last_error_position() == 3);
    CHECK(surfqp_last_error_argument() == 1);
    CHECK(std::string(surfqp_last_error()).find("out of range") != std::string::npos);
    CHECK(surfqp_eta(c.ctx, "p1", "q1", &out) == SURFQP_OK);
    surfqp_string_free(out);
    CHECK(surfqp_last_error_position() == -1);
    CHECK(surfqp_last_error_argument() == 0);
    CHECK(surfqp_eta(c.ctx, nullptr, "q1", &out) == SURFQP_INVALID_ARGUMENT);
    CHECK(surfqp_eta(nullptr, "p1", "q1", &out) == SURFQP_INVALID_ARGUMENT);
}

TEST_CASE("moment check") {
    Ctx c(1, 1, 1);
    char *out = nullptr;
    CHECK(surfqp_moment_check(c.ctx, nullptr, 5, 1, 3, &out) == SURFQP_OK);
    CHECK(take(out).find(R"("passed":true)") != std::string::npos);
    CHECK(surfqp_moment_check(c.ctx, "p1", 5, 1, 3, &out) == SURFQP_CHECK_FAILED);
    const std::string report = take(out);
    CHECK(report.find(R"("passed":false)") != std::string::npos);
    CHECK(report.find(R"("a":"q1")") != std::string::npos);
}

TEST_CASE("verify") {
    char *out = nullptr;
    surfqp_verify_options opts{1, 0, -1, 5, 3, 9};
    CHECK(surfqp_verify("quasi-poisson", &opts, &out) == SURFQP_OK);
    const std::string report = take(out);
    CHECK(report.find(R"("suite":"quasi-poisson")") != std::string::npos);
    CHECK(surfqp_format_report(report.c_str(), &out) == SURFQP_OK);
    const std::string text = take(out);
    CHECK(text.find("PASS  quasi-poisson") == 0);
    CHECK(text.find("all checks passed") != std::string::npos);

    char *again = nullptr;
    CHECK(surfqp_verify("quasi-poisson", &opts, &again) == SURFQP_OK);
    CHECK(take(again) == report);

    CHECK(surfqp_verify("nonsense", &opts, &out) == SURFQP_INVALID_ARGUMENT);
    surfqp_verify_options disk{0, 0, -1, -1, -1, 1};
    CHECK(surfqp_verify("fox", &disk, &out) == SURFQP_INVALID_ARGUMENT);
    surfqp_verify_options half{1, -1, -1, -1, -1, 1};
    CHECK(surfqp_verify("fox", &half, &out) == SURFQP_INVALID_ARGUMENT);
    CHECK(surfqp_format_report("{not json", &out) != SURFQP_OK);
}
