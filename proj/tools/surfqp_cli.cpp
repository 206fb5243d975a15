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

// surfqp command-line front end. Exit codes: 0 success, 1 failed check,
// 2 usage or parse error, 3 internal error.

#include "surfqp/surfqp.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

struct Config {
    int genus = 1;
    int punctures = 0;
    int dim = 2;
    std::uint64_t seed = 1;
    int trials = -1;
    int max_word_len = -1;
    bool json = false;
};

int exit_code(surfqp_status s) {
    switch (s) {
    case SURFQP_OK:
        return 0;
    case SURFQP_CHECK_FAILED:
        return 1;
    case SURFQP_PARSE_ERROR:
    case SURFQP_INVALID_ARGUMENT:
        return 2;
    default:
        return 3;
    }
}

// Prints the error, with a caret under the offending character when the
// failing input is known.
void report_error(const std::vector<std::string> &inputs) {
    std::cerr << "surfqp: " << surfqp_last_error() << "\n";
    const int arg = surfqp_last_error_argument();
    const long pos = surfqp_last_error_position();
    if (arg >= 1 && arg <= static_cast<int>(inputs.size()) && pos >= 0) {
        const std::string &text = inputs[arg - 1];
        if (text.find('\n') == std::string::npos && static_cast<std::size_t>(pos) <= text.size())
            std::cerr << "  " << text << "\n  " << std::string(static_cast<std::size_t>(pos), ' ') << "^\n";
    }
}

// Prints a JSON result or the error, and maps the status to an exit code.
int finish(surfqp_status s, char **out, const std::vector<std::string> &inputs) {
    if (out && *out) {
        std::cout << *out << "\n";
        surfqp_string_free(*out);
        *out = nullptr;
    }
    if (s != SURFQP_OK && s != SURFQP_CHECK_FAILED)
        report_error(inputs);
    return exit_code(s);
}

std::string read_file(const std::string &path) {
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read point file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Context {
public:
    explicit Context(const Config &cfg) {
        status_ = surfqp_context_create(cfg.genus, cfg.punctures, cfg.dim, &ctx_);
    }
    ~Context() { surfqp_context_destroy(ctx_); }
    Context(const Context &) = delete;
    Context &operator=(const Context &) = delete;

    bool ok() const { return status_ == SURFQP_OK; }
    surfqp_status status() const { return status_; }
    surfqp_context *get() const { return ctx_; }

private:
    surfqp_context *ctx_ = nullptr;
    surfqp_status status_;
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quasi-Poisson brackets on representation algebras of surfaces"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--genus", cfg.genus, "Genus g")->check(CLI::NonNegativeNumber);
    app.add_option("--punctures", cfg.punctures, "Number m of extra boundary components")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--dim", cfg.dim, "Matrix size N")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--trials", cfg.trials, "Number of random trials")->check(CLI::PositiveNumber);
    app.add_option("--max-word-len", cfg.max_word_len, "Maximum length of random words")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", cfg.json, "Print verify reports as JSON");

    std::vector<std::string> args;
    std::string suite = "all";
    std::string mu;

    auto two_words = [&](const char *name, const char *help) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("words", args, "Two words")->expected(2)->required();
        return sub;
    };
    CLI::App *eta = two_words("eta", "Homotopy intersection pairing eta(a, b)");
    CLI::App *eta_s = two_words("eta-s", "Skew pairing eta^s(a, b) = 2 eta(a, b) + rho_1(a, b)");
    CLI::App *dbl_s = two_words("dbl-s", "Double bracket <<a, b>>^s");
    CLI::App *triple = app.add_subcommand("triple", "Triple bracket of <<-,->>^s");
    triple->add_option("words", args, "Three words")->expected(3)->required();
    CLI::App *goldman = two_words("goldman", "Goldman bracket of the conjugacy classes of a and b");
    CLI::App *rep_bracket = app.add_subcommand("rep-bracket", "Bracket of two expressions in A_N");
    rep_bracket->add_option("expressions", args, "Two expressions")->expected(2)->required();
    CLI::App *trace_bracket = two_words("trace-bracket", "{tr a, tr b} in A_N");
    CLI::App *ev = app.add_subcommand("ev", "Evaluate an expression at a point");
    ev->add_option("expression", args, "Expression followed by a JSON point file ('-' for stdin)")
        ->expected(2)
        ->required();
    CLI::App *moment = app.add_subcommand("moment-check", "Check the moment map identities");
    moment->add_option("mu", mu, "Word to test (default: the boundary word)");
    CLI::App *verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "fox, double, quasi-poisson, rep-suite, moment, aksm or all")
        ->check(CLI::IsMember({"fox", "double", "quasi-poisson", "rep-suite", "moment", "aksm", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    if (verify->parsed()) {
        surfqp_verify_options opts{-1, -1, -1, cfg.trials, cfg.max_word_len, cfg.seed};
        if (app.count("--genus") + app.count("--punctures") > 0) {
            opts.genus = cfg.genus;
            opts.punctures = cfg.punctures;
        }
        if (app.count("--dim") > 0)
            opts.dim = cfg.dim;
        char *report = nullptr;
        const surfqp_status s = surfqp_verify(suite.c_str(), &opts, &report);
        if (!report)
            return finish(s, nullptr, {});
        if (cfg.json)
            return finish(s, &report, {});
        char *text = nullptr;
        const surfqp_status fs = surfqp_format_report(report, &text);
        surfqp_string_free(report);
        if (fs != SURFQP_OK)
            return finish(fs, nullptr, {});
        std::cout << text;
        surfqp_string_free(text);
        return exit_code(s);
    }

    Context ctx(cfg);
    if (!ctx.ok())
        return finish(ctx.status(), nullptr, {});
    char *out = nullptr;
    const char *a = args.size() > 0 ? args[0].c_str() : nullptr;
    const char *b = args.size() > 1 ? args[1].c_str() : nullptr;

    if (eta->parsed())
        return finish(surfqp_eta(ctx.get(), a, b, &out), &out, args);
    if (eta_s->parsed())
        return finish(surfqp_eta_s(ctx.get(), a, b, &out), &out, args);
    if (dbl_s->parsed())
        return finish(surfqp_dbl_s(ctx.get(), a, b, &out), &out, args);
    if (triple->parsed())
        return finish(surfqp_triple(ctx.get(), a, b, args[2].c_str(), &out), &out, args);
    if (goldman->parsed())
        return finish(surfqp_goldman(ctx.get(), a, b, &out), &out, args);
    if (rep_bracket->parsed())
        return finish(surfqp_rep_bracket(ctx.get(), a, b, &out), &out, args);
    if (trace_bracket->parsed())
        return finish(surfqp_trace_bracket(ctx.get(), a, b, &out), &out, args);
    if (ev->parsed()) {
        std::string point;
        try {
            point = read_file(args[1]);
        } catch (const std::exception &e) {
            std::cerr << "surfqp: " << e.what() << "\n";
            return 2;
        }
        return finish(surfqp_ev(ctx.get(), a, point.c_str(), &out), &out, {args[0], point});
    }
    if (moment->parsed()) {
        const int trials = cfg.trials > 0 ? cfg.trials : 20;
        const int len = cfg.max_word_len > 0 ? cfg.max_word_len : 4;
        return finish(
            surfqp_moment_check(ctx.get(), mu.empty() ? nullptr : mu.c_str(), trials, cfg.seed, len, &out), &out,
            {mu});
    }
    return 2;
}
