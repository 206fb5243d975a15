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

#include "surfqp/expression.hpp"

#include <cctype>
#include <limits>

namespace surfqp {

namespace {

class ExpressionParser {
public:
    ExpressionParser(const RepAlgebra &alg, std::string_view text) : alg_(alg), text_(text) {}

    RepElem parse() {
        skip_space();
        if (at_end())
            throw ParseError("empty expression", pos_);
        RepElem e = expr();
        skip_space();
        if (!at_end())
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (at_end())
                throw ParseError(std::string("expected '") + c + "', found end of input", pos_);
            throw ParseError(std::string("expected '") + c + "', found '" + peek() + "'", pos_);
        }
    }

    long integer() {
        const std::size_t start = pos_;
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (value > (std::numeric_limits<int>::max() - 9) / 10)
                throw ParseError("integer too large", start);
            value = value * 10 + (text_[pos_++] - '0');
        }
        if (pos_ == start)
            throw ParseError("expected integer", pos_);
        return value;
    }

    RepElem expr() {
        RepElem e = term();
        for (;;) {
            if (accept('+'))
                e += term();
            else if (accept('-'))
                e -= term();
            else
                return e;
        }
    }

    RepElem term() {
        RepElem e = factor();
        while (accept('*'))
            e *= factor();
        return e;
    }

    RepElem factor() {
        if (accept('-'))
            return -factor();
        int det_generator = -1;
        RepElem base = primary(det_generator);
        if (!accept('^'))
            return base;
        skip_space();
        const std::size_t exp_pos = pos_;
        const bool negative = accept('-');
        skip_space();
        const long k = integer();
        if (negative) {
            if (det_generator < 0)
                throw ParseError("negative exponent is only allowed on det(...)", exp_pos);
            base = alg_.det_inverse(det_generator);
        }
        if (k > 255)
            throw ParseError("exponent too large", exp_pos);
        RepElem out = alg_.constant(1);
        for (long i = 0; i < k; ++i)
            out *= base;
        return out;
    }

    // gen := [pqz] positive-int, resolved to a generator index.
    int generator() {
        const std::size_t start = pos_;
        const char kind = peek();
        if (kind != 'p' && kind != 'q' && kind != 'z')
            throw ParseError(at_end() ? std::string("expected generator, found end of input")
                                      : std::string("expected generator p, q or z, found '") + kind + "'",
                             pos_);
        ++pos_;
        const std::size_t label_pos = pos_;
        const long label = integer();
        if (label == 0)
            throw ParseError("generator index must be positive", label_pos);
        try {
            return alg_.signature().generator_index(kind, static_cast<int>(label));
        } catch (const std::exception &e) {
            throw ParseError(e.what(), start);
        }
    }

    int matrix_index() {
        const std::size_t at = pos_;
        const long i = integer();
        if (i < 1 || i > alg_.dim())
            throw ParseError("matrix index " + std::to_string(i) + " out of range 1.." + std::to_string(alg_.dim()),
                             at);
        return static_cast<int>(i - 1);
    }

    RepElem primary(int &det_generator) {
        skip_space();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RepElem e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return alg_.constant(rational());
        if (text_.substr(pos_, 3) == "tr(") {
            pos_ += 3;
            const std::size_t start = pos_;
            const std::size_t close = text_.find(')', start);
            if (close == std::string_view::npos)
                throw ParseError("expected ')' after word", text_.size());
            Word w;
            try {
                w = parse_word(text_.substr(start, close - start), alg_.signature());
            } catch (const ParseError &e) {
                throw ParseError(e.message(), start + e.position());
            }
            pos_ = close + 1;
            return alg_.trace(w);
        }
        if (text_.substr(pos_, 4) == "det(") {
            pos_ += 4;
            skip_space();
            const int u = generator();
            expect(')');
            det_generator = u;
            return alg_.determinant(u);
        }
        if (c == 'p' || c == 'q' || c == 'z') {
            const int u = generator();
            expect_raw('_');
            const int i = matrix_index();
            expect_raw('_');
            const int j = matrix_index();
            return alg_.symbol(u, i, j);
        }
        if (at_end())
            throw ParseError("unexpected end of expression", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    void expect_raw(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "' in entry symbol", pos_);
        ++pos_;
    }

    Rational rational() {
        const std::size_t start = pos_;
        auto digits = [&] {
            const std::size_t at = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            if (pos_ == at)
                throw ParseError("expected integer", pos_);
        };
        digits();
        if (peek() == '/') {
            ++pos_;
            digits();
        }
        try {
            return parse_rational(text_.substr(start, pos_ - start));
        } catch (const ParseError &e) {
            throw ParseError(e.message(), start + e.position());
        }
    }

    const RepAlgebra &alg_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

RepElem parse_rep_expression(const RepAlgebra &alg, std::string_view text) {
    return ExpressionParser(alg, text).parse();
}

} // namespace surfqp
