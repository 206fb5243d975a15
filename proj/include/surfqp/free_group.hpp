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

#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace surfqp {

// Genus g and number m of extra boundary components. Generators are indexed
// 0..rank()-1 in the order p1 < q1 < ... < pg < qg < z1 < ... < zm.
struct SurfaceSignature {
    int genus = 0;
    int punctures = 0;

    enum class Kind { P, Q, Z };

    int rank() const { return 2 * genus + punctures; }
    Kind kind(int generator) const;
    // 1-based handle index for p/q, 1-based puncture index for z.
    int label(int generator) const;
    int p(int handle) const { return 2 * (handle - 1); }
    int q(int handle) const { return 2 * (handle - 1) + 1; }
    int z(int puncture) const { return 2 * genus + puncture - 1; }
    std::string generator_name(int generator) const;
    // Throws std::invalid_argument when the generator does not exist.
    int generator_index(char kind, int label) const;

    void validate() const;
    bool operator==(const SurfaceSignature &) const = default;
};

// A letter is +(gen+1) for a generator and -(gen+1) for its inverse.
using Letter = std::int32_t;

constexpr Letter make_letter(int generator, int exponent) {
    return exponent > 0 ? generator + 1 : -(generator + 1);
}
constexpr int letter_generator(Letter l) { return (l > 0 ? l : -l) - 1; }
constexpr int letter_exponent(Letter l) { return l > 0 ? 1 : -1; }
// Position of a letter in the total order x1 < x1^-1 < x2 < x2^-1 < ...
constexpr int letter_rank(Letter l) { return 2 * letter_generator(l) + (l < 0 ? 1 : 0); }

// A freely reduced word; the empty word is the unit.
class Word {
public:
    Word() = default;

    static Word reduce(std::span<const Letter> raw);
    static Word generator(int generator, int exponent = 1);

    const std::vector<Letter> &letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool is_unit() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    Word inverse() const;
    // Letters [begin, end) as a word; subwords of reduced words are reduced.
    Word slice(std::size_t begin, std::size_t end) const;

    friend Word operator*(const Word &a, const Word &b);

    // Shortlex order on letter ranks.
    friend std::strong_ordering operator<=>(const Word &a, const Word &b);
    friend bool operator==(const Word &a, const Word &b) = default;

private:
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    std::vector<Letter> letters_;
};

// A conjugacy class, stored as the rotation-minimal cyclically reduced
// representative.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(const Word &representative);

    const Word &word() const { return word_; }

    friend std::strong_ordering operator<=>(const CyclicWord &a, const CyclicWord &b) {
        return a.word_ <=> b.word_;
    }
    friend bool operator==(const CyclicWord &a, const CyclicWord &b) = default;

private:
    Word word_;
};

inline CyclicWord conjugacy_class(const Word &w) { return CyclicWord(w); }

// Word grammar:
//   word  := "1" | token (sep token)*
//   sep   := "*" | whitespace
//   token := gen ("^" signed-int)?
//   gen   := ("p" | "q" | "z") positive-int
// Throws ParseError on malformed input or generators outside the signature.
Word parse_word(std::string_view text, const SurfaceSignature &sig);

// Same grammar; runs of equal letters are written as powers.
std::string to_string(const Word &w, const SurfaceSignature &sig);

} // namespace surfqp
