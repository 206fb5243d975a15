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

#include "surfqp/rep_algebra.hpp"

#include <string_view>

namespace surfqp {

// Expressions in A_N:
//
//   expr    := term (("+" | "-") term)*
//   term    := factor ("*" factor)*
//   factor  := "-" factor | primary ("^" int)?
//   primary := rational | gen "_" i "_" j | "tr(" word ")" | "det(" gen ")" | "(" expr ")"
//
// Indices are 1-based. Negative exponents are accepted on det(gen) only.
// Throws ParseError with the offending position.
RepElem parse_rep_expression(const RepAlgebra &alg, std::string_view text);

} // namespace surfqp
