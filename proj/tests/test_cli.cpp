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

#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "orefrob/cli.hpp"
#include "orefrob/error.hpp"
#include "orefrob/examples.hpp"
#include "orefrob/spec_io.hpp"

using namespace orefrob;
namespace fs = std::filesystem;

namespace {

const fs::path kData{OREFROB_DATA_DIR};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_path(const std::string& stem) {
    static std::atomic<int> counter{0};
    const auto dir = fs::temp_directory_path() / ("orefrob-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir / (stem + std::to_string(counter++) + ".json");
}

fs::path write(const json& j) {
    const auto p = temp_path("spec");
    std::ofstream(p) << j.dump();
    return p;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

// F_q viewed as a one-dimensional algebra over itself, sigma = id, delta = 0.
json scalar_spec(json modulus) {
    const std::size_t k = modulus.size() - 1;
    json one = json::array();
    one.push_back(1);
    for (std::size_t i = 1; i < k; ++i) one.push_back(0);
    json zero = json::array();
    for (std::size_t i = 0; i < k; ++i) zero.push_back(0);
    return json{{"field", {{"p", 2}, {"degree", k}, {"modulus", modulus}}},
                {"algebra", {{"dim", 1}, {"unit", {one}}, {"structure_constants", {{{one}}}}}},
                {"sigma", {{one}}},
                {"delta", {{"kind", "matrix"}, {"matrix", {{zero}}}}}};
}

}  // namespace

TEST_CASE("cli: shipped counterexample spec loads and matches the built-in") {
    const auto ext = load_extension(kData / "paper-counterexample.json");
    CHECK(ext.algebra().dim() == 12);
    CHECK(ext.field().order() == 2);
    CHECK(load_json(kData / "paper-counterexample.json") == extension_to_json(paper_counterexample()));
    const auto elem = tensor_from_json(ext.algebra(), load_json(kData / "paper-separability-element.json"));
    CHECK(elem == paper_separability_element());
}

TEST_CASE("cli: field moduli") {
    const auto f4 = extension_from_json(scalar_spec({1, 1, 1}));
    CHECK(f4.field().order() == 4);
    const auto r = run({"analyze", write(scalar_spec({1, 1, 1})).string()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "frobenius: yes"));

    const auto bad = run({"analyze", write(scalar_spec({1, 0, 1})).string()});
    CHECK(bad.code == exit_validation);
    CHECK(contains(bad.err, "reducible-modulus"));
}

TEST_CASE("cli: validation errors name the axiom and indices") {
    SUBCASE("parse") {
        const auto p = temp_path("broken");
        std::ofstream(p) << "{ not json";
        const auto r = run({"analyze", p.string()});
        CHECK(r.code == exit_validation);
        CHECK(contains(r.err, "(parse)"));
        const auto missing = run({"analyze", write(json{{"field", {{"p", 2}, {"modulus", {0, 1}}}}}).string()});
        CHECK(missing.code == exit_validation);
        CHECK(contains(missing.err, "algebra"));
    }
    SUBCASE("associativity") {
        // unit e0; e1 e1 = e2, e1 e2 = e1, e2 e1 = 0
        const json z = json::array({0});
        const json o = json::array({1});
        json sc = json::array();
        for (int i = 0; i < 3; ++i) {
            json row = json::array();
            for (int j = 0; j < 3; ++j) row.push_back(json::array({z, z, z}));
            sc.push_back(row);
        }
        for (int i = 0; i < 3; ++i) {
            sc[0][i][i] = o;
            sc[i][0][i] = o;
        }
        sc[1][1][2] = o;
        sc[1][2][1] = o;
        const json id = json::array({json::array({o, z, z}), json::array({z, o, z}), json::array({z, z, o})});
        const json zero = json::array({json::array({z, z, z}), json::array({z, z, z}), json::array({z, z, z})});
        const json spec{{"field", {{"p", 2}, {"degree", 1}, {"modulus", {0, 1}}}},
                        {"algebra", {{"dim", 3}, {"unit", json::array({o, z, z})}, {"structure_constants", sc}}},
                        {"sigma", id},
                        {"delta", {{"kind", "matrix"}, {"matrix", zero}}}};
        const auto r = run({"analyze", write(spec).string()});
        CHECK(r.code == exit_validation);
        CHECK(contains(r.err, "associativity"));
        CHECK(contains(r.err, "(1, 1, 1)"));
    }
    SUBCASE("sigma and delta") {
        auto spec = extension_to_json(paper_counterexample());
        auto swapped = spec;
        // Swap the images of e1 and e2 in the first block (transpose on one slice).
        for (auto& row : swapped["sigma"]) std::swap(row[1], row[2]);
        const auto r = run({"analyze", write(swapped).string()});
        CHECK(r.code == exit_validation);
        CHECK(contains(r.err, "not-automorphism"));

        auto bad_delta = spec;
        bad_delta["delta"] = json{{"kind", "matrix"}, {"matrix", spec["sigma"]}};
        const auto d = run({"analyze", write(bad_delta).string()});
        CHECK(d.code == exit_validation);
        CHECK(contains(d.err, "not-derivation"));
    }
}

TEST_CASE("cli: field elements must be full-length coefficient arrays") {
    const Field f4(2, {1, 1, 1});
    CHECK(element_from_json(f4, json::array({0, 1})) == f4.generator());
    CHECK_THROWS_AS(element_from_json(f4, json::array({1})), ValidationError);
    CHECK_THROWS_AS(element_from_json(f4, json(1)), ValidationError);
    CHECK_THROWS_AS(element_from_json(f4, json::array({2, 0})), ValidationError);
    auto spec = scalar_spec({1, 1, 1});
    spec["algebra"]["unit"] = json::array({json::array({1})});
    CHECK(run({"analyze", write(spec).string()}).code == exit_validation);
}

TEST_CASE("cli: Ore polynomials serialize as coefficient arrays") {
    const auto ext = paper_counterexample();
    const auto g = ext.add(ext.monomial(ext.algebra().basis(3), 2), ext.constant(ext.algebra().one()));
    const auto j = orepoly_to_json(ext.field(), g);
    CHECK(j.size() == 3);
    CHECK(orepoly_from_json(ext, j) == g);
    CHECK(orepoly_from_json(ext, json::array()).is_zero());
}

TEST_CASE("cli: usage errors") {
    CHECK(run({}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"analyze"}).code == exit_usage);
    CHECK(run({"analyze", (kData / "paper-counterexample.json").string(), "--bogus"}).code == exit_usage);
    CHECK(run({"analyze", (kData / "paper-counterexample.json").string(), "--check", "everything"}).code == exit_usage);
    CHECK(run({"example", "no-such-example"}).code == exit_usage);
    CHECK(run({"example", "paper-counterexample", "--p", "3"}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("cli: analyze on the shipped counterexample") {
    const auto r = run({"analyze", (kData / "paper-counterexample.json").string(), "--check", "all", "--witness"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "frobenius: no"));
    CHECK(contains(r.out, "semi-frobenius: yes"));
    CHECK(contains(r.out, "second-kind: no"));
    CHECK(contains(r.out, "split: yes [space dimension 0; orbit values (1, 0, 0, 0)]"));
    CHECK(contains(r.out, "separable: yes"));
    CHECK(contains(r.out, "[a e2] (x) [a e1]"));

    const auto only = run({"analyze", (kData / "paper-counterexample.json").string(), "--check", "split"});
    CHECK(only.code == 0);
    CHECK_FALSE(contains(only.out, "frobenius:"));
    CHECK(contains(only.out, "split: yes"));

    const auto budget = run({"analyze", (kData / "paper-counterexample.json").string(), "--max-enum", "1"});
    CHECK(budget.code == exit_budget);
    CHECK(contains(budget.out, "budget-exceeded"));
}

TEST_CASE("cli: JSON reports round-trip") {
    const auto r = run({"analyze", (kData / "paper-counterexample.json").string(), "--json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    const Field f2 = Field::prime(2);
    const auto parsed = report_from_json(f2, j);
    CHECK(parsed == analyze(paper_counterexample()));
    CHECK(report_to_json(f2, parsed) == j);
    CHECK(j["split"]["space_dimension"] == 0);
    CHECK(j["frobenius"]["status"] == "no");
    CHECK(j["second_kind"]["status"] == "no");

    for (const auto& ext : {semi_not_frobenius(3, 2), semi_not_frobenius(2, 3)}) {
        const auto rep = analyze(ext);
        CHECK(report_from_json(ext.field(), report_to_json(ext.field(), rep)) == rep);
    }
    CHECK_THROWS_AS(report_from_json(f2, json{{"algebra_dim", 1}}), ValidationError);
}

TEST_CASE("cli: emitted specs reproduce the built-in results exactly") {
    for (std::vector<std::string> args : {std::vector<std::string>{"paper-counterexample"},
                                          std::vector<std::string>{"semi-not-frobenius", "--p", "2", "--n", "3"},
                                          std::vector<std::string>{"semi-not-frobenius", "--p", "3", "--n", "2"}}) {
        const auto spec = temp_path("emitted");
        std::vector<std::string> cmd{"example"};
        cmd.insert(cmd.end(), args.begin(), args.end());
        cmd.insert(cmd.end(), {"--json", "--emit-spec", spec.string()});
        const auto built = run(cmd);
        REQUIRE(built.code == 0);
        const auto again = run({"analyze", spec.string(), "--json"});
        REQUIRE(again.code == 0);
        CHECK(built.out == again.out);
    }
}

TEST_CASE("cli: example semi-not-frobenius") {
    const auto r = run({"example", "semi-not-frobenius", "--p", "2", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "semi-frobenius: yes"));
    CHECK(contains(r.out, "frobenius: no"));
    CHECK(run({"example", "semi-not-frobenius", "--p", "4", "--n", "2"}).code == exit_validation);
    CHECK(run({"example", "semi-not-frobenius", "--p", "2", "--n", "1"}).code == exit_validation);
}

TEST_CASE("cli: verify-sep") {
    const auto spec = (kData / "paper-counterexample.json").string();
    const auto r = run({"verify-sep", spec, "--element", (kData / "paper-separability-element.json").string()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "mu(p) = 1: pass"));
    CHECK(contains(r.out, "a p = p a for every basis element a: pass"));
    CHECK(contains(r.out, "sigma(x)(p) = p: pass"));
    CHECK(contains(r.out, "delta(x)(p) = 0: pass"));
    CHECK(contains(r.out, "verdict: separability element of F[x] in A[x; sigma, delta]"));

    // 1 (x) 1 is not a separability element; given inline.
    const auto ext = paper_counterexample();
    const auto& a = ext.algebra();
    const auto one = tensor_to_json(a, tensor_pure(a, a.one(), a.one())).dump();
    const auto bad = run({"verify-sep", spec, "--element", one, "--json"});
    CHECK(bad.code == 0);
    const auto j = json::parse(bad.out);
    CHECK(j["separability_element"] == false);
    CHECK(j["casimir"] == false);

    const auto emitted = temp_path("element");
    REQUIRE(run({"example", "paper-counterexample", "--emit-element", emitted.string()}).code == 0);
    CHECK(load_json(emitted) == load_json(kData / "paper-separability-element.json"));
    CHECK(run({"verify-sep", spec, "--element", "{\"coefficients\": []}"}).code == exit_validation);
}
