/*
   Copyright 2026 The orefrob Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OREFROB_SPEC_IO_HPP
#define OREFROB_SPEC_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "orefrob/decide.hpp"
#include "orefrob/ore.hpp"

namespace orefrob {

using json = nlohmann::json;

// Field elements are ascending coefficient arrays of length k with entries in [0, p).

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json element_to_json(const Field& f, FieldElement x);
FieldElement element_from_json(const Field& f, const json& j);

json vector_to_json(const Field& f, const Vector& v);
Vector vector_from_json(const Field& f, const json& j, std::size_t expected);

/// Row-major array of rows.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols);

/**
 * Extension spec: {"field", "algebra": {"dim", "labels", "unit",
 * "structure_constants"[i][j] = coordinates of a_i a_j, "functional_hints"},
 * "sigma": matrix, "delta": {"kind": "matrix", "matrix"} | {"kind": "inner", "element"}}.
 * Every failure is a ValidationError; malformed input uses code `parse`.
 */
json extension_to_json(const OreExtension& ext);
OreExtension extension_from_json(const json& j);

OreExtension load_extension(const std::filesystem::path& path);
/// Indented JSON with numeric rows (field elements, matrix rows) kept on one line.
std::string to_pretty_string(const json& j);
void save_json(const std::filesystem::path& path, const json& j);
json load_json(const std::filesystem::path& path);

/// {"kind": "tensor", "coefficients": r x r matrix C}, p = sum C_ij a_i (x) a_j.
json tensor_to_json(const Algebra& a, const TensorSquareElement& p);
TensorSquareElement tensor_from_json(const Algebra& a, const json& j);

/// Array of coefficient coordinate arrays, ascending degree.
json orepoly_to_json(const Field& f, const OrePoly& g);
OrePoly orepoly_from_json(const OreExtension& ext, const json& j);

json decision_to_json(const Field& f, const Decision& d);
Decision decision_from_json(const Field& f, std::size_t dim, const json& j);

json report_to_json(const Field& f, const AnalysisReport& r);
AnalysisReport report_from_json(const Field& f, const json& j);

}  // namespace orefrob

#endif  // OREFROB_SPEC_IO_HPP
