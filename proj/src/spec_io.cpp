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

#include "orefrob/spec_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "orefrob/error.hpp"

namespace orefrob {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ValidationError(ValidationCode::parse, what); }

const json& member(const json& j, const char* key) {
    if (!j.is_object()) fail(std::string("expected an object holding \"") + key + "\"");
    const auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
    return *it;
}

std::uint64_t as_uint(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(std::string(what) + " must be a nonnegative integer");
    return j.get<std::uint64_t>();
}

const json& as_array(const json& j, std::size_t expected, const std::string& what) {
    if (!j.is_array()) fail(what + " must be an array");
    if (j.size() != expected)
        fail(what + " has " + std::to_string(j.size()) + " entries, expected " + std::to_string(expected));
    return j;
}

}  // namespace

json field_to_json(const Field& f) {
    return json{{"p", f.characteristic()}, {"degree", f.degree()}, {"modulus", f.modulus()}};
}

Field field_from_json(const json& j) {
    const auto p = as_uint(member(j, "p"), "field.p");
    const auto& m = member(j, "modulus");
    if (!m.is_array()) fail("field.modulus must be an array");
    std::vector<std::uint32_t> modulus;
    for (const auto& c : m) modulus.push_back(static_cast<std::uint32_t>(as_uint(c, "modulus coefficient")));
    if (p > (1u << 15)) throw ValidationError(ValidationCode::not_prime, "field characteristic too large");
    if (j.contains("degree") && as_uint(j["degree"], "field.degree") + 1 != modulus.size())
        throw ValidationError(ValidationCode::bad_modulus, "field.degree does not match the modulus");
    return Field(static_cast<std::uint32_t>(p), std::move(modulus));
}

json element_to_json(const Field& f, FieldElement x) { return f.coeffs(x); }

FieldElement element_from_json(const Field& f, const json& j) {
    const std::uint32_t p = f.characteristic();
    if (!j.is_array() || j.size() != f.degree())
        fail("field element must be an array of exactly " + std::to_string(f.degree()) + " coefficients");
    std::vector<std::uint32_t> c(f.degree(), 0);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto v = as_uint(j[i], "field element coefficient");
        if (v >= p) fail("field element coefficient out of range [0, p)");
        c[i] = static_cast<std::uint32_t>(v);
    }
    return f.from_coeffs(c);
}

json vector_to_json(const Field& f, const Vector& v) {
    json out = json::array();
    for (auto x : v) out.push_back(element_to_json(f, x));
    return out;
}

Vector vector_from_json(const Field& f, const json& j, std::size_t expected) {
    as_array(j, expected, "vector");
    Vector v;
    for (const auto& e : j) v.push_back(element_from_json(f, e));
    return v;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(element_to_json(m.field(), m(i, k)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols) {
    as_array(j, rows, "matrix");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        as_array(j[i], cols, "matrix row " + std::to_string(i));
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = element_from_json(f, j[i][k]);
    }
    return m;
}

json extension_to_json(const OreExtension& ext) {
    const Algebra& a = ext.algebra();
    const Field& f = a.field();
    const std::size_t r = a.dim();
    json sc = json::array();
    for (std::size_t i = 0; i < r; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < r; ++j) {
            json cell = json::array();
            for (std::size_t k = 0; k < r; ++k) cell.push_back(element_to_json(f, a.structure_constant(i, j, k)));
            row.push_back(std::move(cell));
        }
        sc.push_back(std::move(row));
    }
    json hints = json::array();
    for (const auto& h : a.functional_hints()) hints.push_back(vector_to_json(f, h.values));

    json alg{{"dim", r}, {"unit", vector_to_json(f, a.one().coords)}, {"structure_constants", std::move(sc)}};
    if (!a.labels().empty()) alg["labels"] = a.labels();
    if (!hints.empty()) alg["functional_hints"] = std::move(hints);

    json delta;
    if (ext.inner_element())
        delta = {{"kind", "inner"}, {"element", vector_to_json(f, ext.inner_element()->coords)}};
    else
        delta = {{"kind", "matrix"}, {"matrix", matrix_to_json(ext.delta().matrix)}};
    return json{{"field", field_to_json(f)}, {"algebra", std::move(alg)}, {"sigma", matrix_to_json(ext.sigma().matrix)},
                {"delta", std::move(delta)}};
}

OreExtension extension_from_json(const json& j) {
    try {
        Field f = field_from_json(member(j, "field"));
        const json& aj = member(j, "algebra");
        const std::size_t r = as_uint(member(aj, "dim"), "algebra.dim");
        if (r == 0) throw ValidationError(ValidationCode::bad_dimensions, "algebra dimension must be positive");
        const json& sc = as_array(member(aj, "structure_constants"), r, "structure_constants");
        std::vector<FieldElement> constants;
        constants.reserve(r * r * r);
        for (std::size_t i = 0; i < r; ++i) {
            as_array(sc[i], r, "structure_constants[" + std::to_string(i) + "]");
            for (std::size_t k = 0; k < r; ++k) {
                const auto cell = vector_from_json(f, sc[i][k], r);
                constants.insert(constants.end(), cell.begin(), cell.end());
            }
        }
        Vector unit = vector_from_json(f, member(aj, "unit"), r);
        std::vector<std::string> labels;
        if (aj.contains("labels")) {
            for (const auto& l : as_array(aj["labels"], r, "labels")) {
                if (!l.is_string()) fail("labels must be strings");
                labels.push_back(l.get<std::string>());
            }
        }
        Algebra a(f, r, std::move(constants), std::move(unit), std::move(labels));
        if (aj.contains("functional_hints")) {
            if (!aj["functional_hints"].is_array()) fail("functional_hints must be an array");
            std::vector<LinearFunctional> hints;
            for (const auto& h : aj["functional_hints"]) hints.push_back({vector_from_json(f, h, r)});
            a.set_functional_hints(std::move(hints));
        }

        LinMap sigma{matrix_from_json(f, member(j, "sigma"), r, r)};
        const json& dj = member(j, "delta");
        const json& kind = member(dj, "kind");
        if (kind == "inner") {
            AlgebraElement b{vector_from_json(f, member(dj, "element"), r)};
            return OreExtension::with_inner_derivation(std::move(a), std::move(sigma), std::move(b));
        }
        if (kind == "matrix") {
            LinMap delta{matrix_from_json(f, member(dj, "matrix"), r, r)};
            return OreExtension(std::move(a), std::move(sigma), std::move(delta));
        }
        fail("delta.kind must be \"matrix\" or \"inner\"");
    } catch (const json::exception& e) {
        fail(std::string("malformed spec: ") + e.what());
    }
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(path.string() + ": " + e.what());
    }
}

OreExtension load_extension(const std::filesystem::path& path) { return extension_from_json(load_json(path)); }

namespace {

// Nesting depth of arrays holding only numbers; -1 if anything else occurs.
int numeric_depth(const json& j) {
    if (j.is_number()) return 0;
    if (!j.is_array()) return -1;
    int d = 0;
    for (const auto& e : j) {
        const int k = numeric_depth(e);
        if (k < 0) return -1;
        d = std::max(d, k);
    }
    return d + 1;
}

void pretty(std::ostream& os, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    const int depth = numeric_depth(j);
    if (!j.is_structured() || j.empty() || (depth >= 0 && depth <= 2)) {
        os << j.dump();
        return;
    }
    const bool obj = j.is_object();
    os << (obj ? "{" : "[") << '\n';
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad;
        if (obj) os << json(it.key()).dump() << ": ";
        pretty(os, it.value(), indent + 2);
    }
    os << '\n' << std::string(static_cast<std::size_t>(indent), ' ') << (obj ? "}" : "]");
}

}  // namespace

std::string to_pretty_string(const json& j) {
    std::ostringstream os;
    pretty(os, j, 0);
    return os.str();
}

void save_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << to_pretty_string(j) << '\n';
}

json tensor_to_json(const Algebra& a, const TensorSquareElement& p) {
    (void)a;
    return json{{"kind", "tensor"}, {"coefficients", matrix_to_json(p.coeffs)}};
}

TensorSquareElement tensor_from_json(const Algebra& a, const json& j) {
    try {
        if (j.contains("kind") && j["kind"] != "tensor") fail("element kind must be \"tensor\"");
        return {matrix_from_json(a.field(), member(j, "coefficients"), a.dim(), a.dim())};
    } catch (const json::exception& e) {
        fail(std::string("malformed tensor: ") + e.what());
    }
}

json orepoly_to_json(const Field& f, const OrePoly& g) {
    json out = json::array();
    for (const auto& c : g.coeffs) out.push_back(vector_to_json(f, c.coords));
    return out;
}

OrePoly orepoly_from_json(const OreExtension& ext, const json& j) {
    if (!j.is_array()) fail("Ore polynomial must be an array of coefficient vectors");
    std::vector<AlgebraElement> c;
    for (const auto& e : j) c.push_back({vector_from_json(ext.field(), e, ext.algebra().dim())});
    return ext.normalize(std::move(c));
}

json decision_to_json(const Field& f, const Decision& d) {
    json out{{"status", to_string(d.status)}, {"candidates_checked", d.candidates_checked}};
    if (d.functional) out["functional"] = vector_to_json(f, d.functional->values);
    if (d.tensor) out["tensor"] = matrix_to_json(d.tensor->coeffs);
    if (d.m) out["m"] = element_to_json(f, *d.m);
    if (d.n) out["n"] = element_to_json(f, *d.n);
    if (d.space_dimension) out["space_dimension"] = *d.space_dimension;
    if (d.orbit_values) out["orbit_values"] = vector_to_json(f, *d.orbit_values);
    if (!d.message.empty()) out["message"] = d.message;
    return out;
}

Decision decision_from_json(const Field& f, std::size_t dim, const json& j) {
    Decision d;
    const json& st = member(j, "status");
    if (!st.is_string()) fail("status must be a string");
    const auto status = status_from_string(st.get<std::string>());
    if (!status) fail("unknown status " + st.get<std::string>());
    d.status = *status;
    d.candidates_checked = as_uint(member(j, "candidates_checked"), "candidates_checked");
    if (j.contains("functional")) d.functional = LinearFunctional{vector_from_json(f, j["functional"], dim)};
    if (j.contains("tensor")) d.tensor = TensorSquareElement{matrix_from_json(f, j["tensor"], dim, dim)};
    if (j.contains("m")) d.m = element_from_json(f, j["m"]);
    if (j.contains("n")) d.n = element_from_json(f, j["n"]);
    if (j.contains("space_dimension")) d.space_dimension = as_uint(j["space_dimension"], "space_dimension");
    if (j.contains("orbit_values")) {
        if (!j["orbit_values"].is_array()) fail("orbit_values must be an array");
        d.orbit_values = vector_from_json(f, j["orbit_values"], j["orbit_values"].size());
    }
    if (j.contains("message")) d.message = j["message"].get<std::string>();
    return d;
}

namespace {

constexpr const char* kDecisionKeys[] = {"frobenius", "semi_frobenius", "base_frobenius", "second_kind",
                                         "split",     "separable",      "base_separable"};

template <class Report>
auto decision_slots(Report& r) {
    return std::array{&r.frobenius, &r.semi_frobenius, &r.base_frobenius, &r.second_kind,
                      &r.split,     &r.separable,      &r.base_separable};
}

}  // namespace

json report_to_json(const Field& f, const AnalysisReport& r) {
    json out{{"algebra_dim", r.algebra_dim}, {"field_order", r.field_order}, {"notes", r.notes}};
    const auto slots = decision_slots(r);
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (*slots[i]) out[kDecisionKeys[i]] = decision_to_json(f, **slots[i]);
    if (r.inner_element) out["inner_element"] = vector_to_json(f, r.inner_element->coords);
    return out;
}

AnalysisReport report_from_json(const Field& f, const json& j) {
    try {
        AnalysisReport r;
        r.algebra_dim = as_uint(member(j, "algebra_dim"), "algebra_dim");
        r.field_order = as_uint(member(j, "field_order"), "field_order");
        r.notes = member(j, "notes").get<std::vector<std::string>>();
        const auto slots = decision_slots(r);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (j.contains(kDecisionKeys[i])) *slots[i] = decision_from_json(f, r.algebra_dim, j[kDecisionKeys[i]]);
        if (j.contains("inner_element")) r.inner_element = AlgebraElement{vector_from_json(f, j["inner_element"], r.algebra_dim)};
        return r;
    } catch (const json::exception& e) {
        fail(std::string("malformed report: ") + e.what());
    }
}

}  // namespace orefrob
