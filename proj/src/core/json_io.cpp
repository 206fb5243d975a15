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

#include "surfqp/json_io.hpp"

#include <stdexcept>

namespace surfqp {

Json to_json(const AlgElem &x, const SurfaceSignature &sig) {
    Json out = Json::array();
    for (const auto &[w, c] : x)
        out.push_back({{"coeff", to_string(c)}, {"word", to_string(w, sig)}});
    return out;
}

namespace {

template <std::size_t K> Json tensor_json(const LinearCombination<std::array<Word, K>> &x, const SurfaceSignature &sig) {
    Json out = Json::array();
    for (const auto &[ws, c] : x) {
        Json words = Json::array();
        for (const Word &w : ws)
            words.push_back(to_string(w, sig));
        out.push_back({{"coeff", to_string(c)}, {"words", std::move(words)}});
    }
    return out;
}

} // namespace

Json to_json(const Tensor2 &x, const SurfaceSignature &sig) { return tensor_json(x, sig); }
Json to_json(const Tensor3 &x, const SurfaceSignature &sig) { return tensor_json(x, sig); }

Json to_json(const CyclicAlgElem &x, const SurfaceSignature &sig) {
    Json out = Json::array();
    for (const auto &[cls, c] : x)
        out.push_back({{"class", to_string(cls.word(), sig)}, {"coeff", to_string(c)}});
    return out;
}

std::string monomial_string(const RepSpace &space, const Monomial &m) {
    if (m.is_one())
        return "1";
    std::string out;
    m.for_each_factor([&](Variable v, std::uint32_t e) {
        if (!out.empty())
            out += '*';
        out += space.variable_name(v);
        if (e != 1)
            out += '^' + std::to_string(e);
    });
    return out;
}

Json to_json(const RepElem &x) {
    Json den = Json::array();
    Json terms = Json::array();
    if (x.space()) {
        for (std::uint32_t k : x.den_exponents())
            den.push_back(k);
        for (const auto &[m, c] : x.numerator().sorted_terms())
            terms.push_back({{"coeff", to_string(c)}, {"monomial", monomial_string(*x.space(), m)}});
    }
    return {{"den_exponents", std::move(den)}, {"terms", std::move(terms)}};
}

Json to_json(const RepPoint &pt) {
    Json out = Json::array();
    for (const RationalMatrix &m : pt.matrices) {
        Json rows = Json::array();
        for (int i = 0; i < m.dim(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < m.dim(); ++j)
                row.push_back(to_string(m(i, j)));
            rows.push_back(std::move(row));
        }
        out.push_back(std::move(rows));
    }
    return out;
}

RepPoint point_from_json(const Json &j, const SurfaceSignature &sig, int dim) {
    if (!j.is_array())
        throw std::invalid_argument("point must be an array of matrices");
    RepPoint pt;
    for (const Json &mj : j) {
        if (!mj.is_array() || static_cast<int>(mj.size()) != dim)
            throw std::invalid_argument("point matrix must have " + std::to_string(dim) + " rows");
        RationalMatrix m(dim);
        for (int r = 0; r < dim; ++r) {
            const Json &row = mj[r];
            if (!row.is_array() || static_cast<int>(row.size()) != dim)
                throw std::invalid_argument("point matrix row must have " + std::to_string(dim) + " entries");
            for (int c = 0; c < dim; ++c) {
                const Json &e = row[c];
                if (e.is_string())
                    m(r, c) = parse_rational(e.get<std::string>());
                else if (e.is_number_integer())
                    m(r, c) = Rational(std::to_string(e.get<long long>()));
                else
                    throw std::invalid_argument("point entries must be rational strings or integers");
            }
        }
        pt.matrices.push_back(std::move(m));
    }
    validate_point(pt, sig, dim);
    return pt;
}

RepPoint parse_point(std::string_view text, const SurfaceSignature &sig, int dim) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ParseError("malformed point JSON: " + std::string(e.what()), e.byte > 0 ? e.byte - 1 : 0);
    }
    return point_from_json(j, sig, dim);
}

} // namespace surfqp
