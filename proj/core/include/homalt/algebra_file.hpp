/*
 * Copyright 2026 The homalt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <homalt/homalgebra.hpp>
#include <homalt/report.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace homalt {

/// Malformed document. The message names the line/column or the field path.
class ParseError : public Error {
public:
    using Error::Error;
};

/// JSON algebra document:
///
///   { "dimension": 2, "basis": ["e1", "e2"], "parameters": ["lambda"],
///     "products": [ {"left": 0, "right": 0, "result": [{"index": 1, "coeff": "1/2"}]} ],
///     "alpha": [ {"from": 0, "to": [{"index": 0, "coeff": {"poly": [
///                  {"coeff": "1", "exps": {"lambda": 1}}]}}]} ] }
///
/// Indices are 0-based. Omitted products are zero. When "alpha" is absent the
/// twist is the identity; when present, omitted rows are zero.
struct AlgebraFile {
    HomAlgebra algebra;
    std::vector<std::string> basis;
};

AlgebraFile parse_algebra_file(std::string_view text);
HomAlgebra parse_algebra(std::string_view text);
/// Canonical form: products in (left, right) order, default basis names.
std::string serialize_algebra(const HomAlgebra& A, const std::vector<std::string>& basis = {});

/// Linear map document: { "dimension": n, "parameters": [...],
/// "map": [ {"from": i, "to": [{"index": j, "coeff": ...}]} ] }. Omitted rows are zero.
Matrix parse_morphism(std::string_view text);
std::string serialize_morphism(const Matrix& f);

/// Linear combination of basis names with rational or parameter coefficients,
/// e.g. "e7 - e8", "2*e1 + 1/2*lambda*e3". Variables other than basis names
/// must be parameters of the algebra.
Element parse_element(std::string_view text, const AlgebraFile& file);

std::string encode_scalar(const Scalar& s);
Scalar decode_scalar(std::string_view json);

/// One JSON record per report: {id, status, strategy, points, seed,
/// degree_bound, evaluations, note?, witness?}. Output is byte-stable.
std::string reports_to_json(const std::vector<CheckReport>& reports);

}  // namespace homalt
