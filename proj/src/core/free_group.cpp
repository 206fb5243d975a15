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

#include "surfqp/free_group.hpp"
#include "surfqp/rational.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <stdexcept>

namespace surfqp {

SurfaceSignature::Kind SurfaceSignature::kind(int generator) const {
    if (generator < 2 * genus)
        return generator % 2 == 0 ? Kind::P : Kind::Q;
    return Kind::Z;
}

int SurfaceSignature::label(int generator) const {
    if (generator < 2 * genus)
        return generator / 2 + 1;
    return generator - 2 * genus + 1;
}

std::string SurfaceSignature::generator_name(int generator) const {
    const char prefix[] = {'p', 'q', 'z'};
    return prefix[static_cast<int>(kind(generator))] + std::to_string(label(generator));
}

int SurfaceSignature::generator_index(char kind, int label) const {
    const std::string name = std::string(1, kind) + std::to_string(label);
    if (label < 1)
        throw std::invalid_argument("no generator " + name);
    switch (kind) {
    case 'p':
    case 'q':
        if (label > genus)
            throw std::invalid_argument("no generator " + name + " on a genus-" + std::to_string(genus) +
                                        " surface");
        return kind == 'p' ? p(label) : q(label);
    case 'z':
        if (label > punctures)
            throw std::invalid_argument("no generator " + name + " with " + std::to_string(punctures) +
                                        " punctures");
        return z(label);
    default:
        throw std::invalid_argument("no generator " + name);
    }
}

void SurfaceSignature::validate() const {
    if (genus < 0 || punctures < 0)
        throw std::invalid_argument("genus and punctures must be nonnegative");
}

Word Word::reduce(std::span<const Letter> raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return Word(std::move(out));
}

Word Word::generator(int generator, int exponent) {
    const Letter l = make_letter(generator, exponent > 0 ? 1 : -1);
    return Word(std::vector<Letter>(static_cast<std::size_t>(std::abs(exponent)), l));
}

Word Word::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (Letter &l : out)
        l = -l;
    return Word(std::move(out));
}

Word Word::slice(std::size_t begin, std::size_t end) const {
    return Word(std::vector<Letter>(letters_.begin() + begin, letters_.begin() + end));
}

Word operator*(const Word &a, const Word &b) {
    std::size_t k = 0;
    const std::size_t n = a.size();
    while (k < n && k < b.size() && a.letters_[n - 1 - k] == -b.letters_[k])
        ++k;
    std::vector<Letter> out;
    out.reserve(n + b.size() - 2 * k);
    out.insert(out.end(), a.letters_.begin(), a.letters_.end() - k);
    out.insert(out.end(), b.letters_.begin() + k, b.letters_.end());
    return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word &a, const Word &b) {
    if (a.size() != b.size())
        return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int ra = letter_rank(a.letters_[i]);
        const int rb = letter_rank(b.letters_[i]);
        if (ra != rb)
            return ra <=> rb;
    }
    return std::strong_ordering::equal;
}

CyclicWord::CyclicWord(const Word &representative) {
    const auto &l = representative.letters();
    std::size_t begin = 0;
    std::size_t end = l.size();
    while (end - begin >= 2 && l[begin] == -l[end - 1]) {
        ++begin;
        --end;
    }
    const Word core = representative.slice(begin, end);
    Word best = core;
    for (std::size_t r = 1; r < core.size(); ++r) {
        Word rotated = core.slice(r, core.size()) * core.slice(0, r);
        if (rotated < best)
            best = std::move(rotated);
    }
    word_ = std::move(best);
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class WordParser {
public:
    WordParser(std::string_view text, const SurfaceSignature &sig) : text_(text), sig_(sig) {}

    Word parse() {
        skip_space();
        if (at_end())
            throw ParseError("empty word", pos_);
        if (text_[pos_] == '1') {
            ++pos_;
            skip_space();
            if (!at_end())
                throw ParseError("unexpected input after unit word '1'", pos_);
            return Word();
        }
        std::vector<Letter> raw;
        parse_token(raw);
        while (true) {
            const bool had_space = skip_space();
            if (at_end())
                break;
            if (text_[pos_] == '*') {
                ++pos_;
                skip_space();
                if (at_end())
                    throw ParseError("expected generator after '*'", pos_);
            } else if (!had_space) {
                throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
            }
            parse_token(raw);
        }
        return Word::reduce(raw);
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    bool skip_space() {
        const std::size_t start = pos_;
        while (!at_end() && is_space(text_[pos_]))
            ++pos_;
        return pos_ != start;
    }

    long parse_int(bool allow_sign) {
        const std::size_t start = pos_;
        bool negative = false;
        if (allow_sign && !at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (at_end() || !is_digit(text_[pos_]))
            throw ParseError("expected integer", pos_);
        long value = 0;
        while (!at_end() && is_digit(text_[pos_])) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > INT_MAX / 4)
                throw ParseError("integer too large", start);
            ++pos_;
        }
        return negative ? -value : value;
    }

    void parse_token(std::vector<Letter> &raw) {
        const std::size_t start = pos_;
        const char kind = text_[pos_];
        if (kind != 'p' && kind != 'q' && kind != 'z')
            throw ParseError(std::string("expected generator p, q or z, found '") + kind + "'", pos_);
        ++pos_;
        const std::size_t label_pos = pos_;
        const long label = parse_int(false);
        if (label < 1)
            throw ParseError("generator index must be positive", label_pos);
        int generator = 0;
        try {
            generator = sig_.generator_index(kind, static_cast<int>(label));
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what(), start);
        }
        long exponent = 1;
        if (!at_end() && text_[pos_] == '^') {
            ++pos_;
            exponent = parse_int(true);
        }
        const Letter l = make_letter(generator, exponent >= 0 ? 1 : -1);
        for (long i = 0; i < std::labs(exponent); ++i)
            raw.push_back(l);
    }

    std::string_view text_;
    const SurfaceSignature &sig_;
    std::size_t pos_ = 0;
};

} // namespace

Word parse_word(std::string_view text, const SurfaceSignature &sig) { return WordParser(text, sig).parse(); }

std::string to_string(const Word &w, const SurfaceSignature &sig) {
    if (w.is_unit())
        return "1";
    std::string out;
    const auto &l = w.letters();
    for (std::size_t i = 0; i < l.size();) {
        std::size_t j = i;
        while (j < l.size() && l[j] == l[i])
            ++j;
        if (!out.empty())
            out += '*';
        out += sig.generator_name(letter_generator(l[i]));
        const long power = static_cast<long>(j - i) * letter_exponent(l[i]);
        if (power != 1)
            out += '^' + std::to_string(power);
        i = j;
    }
    return out;
}

} // namespace surfqp
