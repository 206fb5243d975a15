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

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace surfqp {

using Rational = mpq_class;

// Thrown for malformed textual input. `position` is a 0-based offset into
// the string that was being parsed.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string &message, std::size_t position);

    std::size_t position() const { return position_; }
    const std::string &message() const { return message_; }

private:
    std::string message_;
    std::size_t position_;
};

// Accepts "n" or "n/d" with an optional leading sign. The result is canonical.
Rational parse_rational(std::string_view text);

// Canonical "n" or "n/d".
std::string to_string(const Rational &value);

} // namespace surfqp
