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

#include "surfqp/double_bracket.hpp"
#include "surfqp/rep_evaluation.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace surfqp {

using Json = nlohmann::ordered_json;

// [{"coeff": "p/q", "word": "..."}], terms in shortlex order of words.
Json to_json(const AlgElem &x, const SurfaceSignature &sig);
// [{"coeff": "p/q", "words": ["...", "..."]}]
Json to_json(const Tensor2 &x, const SurfaceSignature &sig);
Json to_json(const Tensor3 &x, const SurfaceSignature &sig);
// [{"class": "...", "coeff": "p/q"}]
Json to_json(const CyclicAlgElem &x, const SurfaceSignature &sig);

// {"den_exponents": [k_1, ...], "terms": [{"coeff": "p/q", "monomial": "p1_1_2*q1_2_1^2"}]}
// The element is numerator / prod det(x^u)^k_u; the constant monomial is "1".
Json to_json(const RepElem &x);
std::string monomial_string(const RepSpace &space, const Monomial &m);

// N x N arrays of rational strings (plain JSON integers are also accepted).
Json to_json(const RepPoint &pt);
RepPoint point_from_json(const Json &j, const SurfaceSignature &sig, int dim);
RepPoint parse_point(std::string_view text, const SurfaceSignature &sig, int dim);

} // namespace surfqp
