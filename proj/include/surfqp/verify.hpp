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

#include "surfqp/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace surfqp {

// Unset fields fall back to each suite's defaults. A signature restricts a
// suite to that surface; a dimension restricts the A_N checks to that N.
struct VerifyOptions {
    std::optional<SurfaceSignature> signature;
    std::optional<int> dim;
    std::optional<int> trials;
    std::optional<int> max_word_length;
    std::uint64_t seed = 1;
};

const std::vector<std::string> &suite_names();

// Runs "fox", "double", "quasi-poisson", "rep-suite", "moment", "aksm" or
// "all". The report is
//   {"suite", "seed", "passed", "checks": [{"name", "signature", "dim"?,
//    "passed", "checked", "witness"?}]}
// and for "all", {"suite", "seed", "passed", "suites": [...]}. Output is a
// function of the options only. Throws std::invalid_argument for an unknown
// suite.
Json run_suite(const std::string &name, const VerifyOptions &options);

// One line per check: "PASS  <suite>  <signature>  <name>  (<n> checks)".
std::string format_report(const Json &report);

} // namespace surfqp
