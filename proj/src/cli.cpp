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

#include "orefrob/cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "orefrob/error.hpp"
#include "orefrob/examples.hpp"
#include "orefrob/spec_io.hpp"

namespace orefrob {

namespace {

std::string format_vector(const Field& f, const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += f.to_string(v[i]);
    }
    return s + ")";
}

std::string label(const Algebra& a, std::size_t i) {
    return a.labels().empty() ? "e" + std::to_string(i) : a.labels()[i];
}

void print_decision(std::ostream& os, const Field& f, const std::string& name, const std::optional<Decision>& d, bool witness,
                    const Algebra& a) {
    if (!d) return;
    os << name << ": " << to_string(d->status);
    std::vector<std::string> extra;
    if (d->space_dimension) extra.push_back("space dimension " + std::to_string(*d->space_dimension));
    if (d->candidates_checked) extra.push_back(std::to_string(d->candidates_checked) + " candidates checked");
    if (d->m && d->n) extra.push_back("kappa(x) = " + f.to_string(*d->m) + " x + " + f.to_string(*d->n));
    if (d->orbit_values) extra.push_back("orbit values " + format_vector(f, *d->orbit_values));
    if (!extra.empty()) {
        os << " [";
        for (std::size_t i = 0; i < extra.size(); ++i) os << (i ? "; " : "") << extra[i];
        os << "]";
    }
    os << '\n';
    if (!d->message.empty()) os << "  " << d->message << '\n';
    if (witness && d->functional) os << "  functional: " << format_vector(f, d->functional->values) << '\n';
    if (witness && d->tensor) os << "  element: " << format_tensor(a, *d->tensor) << '\n';
}

std::optional<CheckSelection> parse_checks(const std::vector<std::string>& names) {
    if (names.empty()) return CheckSelection::all();
    CheckSelection c = CheckSelection::none();
    for (const auto& n : names) {
        if (n == "all") return CheckSelection::all();
        if (n == "frobenius") c.frobenius = true;
        else if (n == "semi") c.semi = true;
        else if (n == "second-kind") c.second_kind = true;
        else if (n == "split") c.split = true;
        else if (n == "separable") c.separable = true;
        else return std::nullopt;
    }
    return c;
}

bool any_budget(const AnalysisReport& r) {
    for (const auto* d : {&r.frobenius, &r.semi_frobenius, &r.base_frobenius, &r.second_kind, &r.split, &r.separable,
                          &r.base_separable})
        if (*d && (*d)->status == Status::budget_exceeded) return true;
    return false;
}

struct AnalyzeFlags {
    std::vector<std::string> checks;
    bool witness = false;
    bool json = false;
    std::uint64_t max_enum = SearchOptions{}.max_candidates;
};

void add_analyze_flags(CLI::App* cmd, AnalyzeFlags& f) {
    cmd->add_option("--check", f.checks, "all|frobenius|semi|second-kind|split|separable (repeatable)")
        ->check(CLI::IsMember({"all", "frobenius", "semi", "second-kind", "split", "separable"}));
    cmd->add_flag("--witness", f.witness, "print witnesses");
    cmd->add_option("--max-enum", f.max_enum, "largest functional search space q^d to enumerate")->check(CLI::PositiveNumber);
    cmd->add_flag("--json", f.json, "print the report as JSON");
}

int report(const OreExtension& ext, const AnalyzeFlags& flags, std::ostream& out) {
    const auto checks = parse_checks(flags.checks);
    SearchOptions opts;
    opts.max_candidates = flags.max_enum;
    const auto rep = analyze(ext, *checks, opts);
    if (flags.json)
        out << to_pretty_string(report_to_json(ext.field(), rep)) << '\n';
    else
        out << format_report(ext, rep, flags.witness);
    return any_budget(rep) ? exit_budget : exit_ok;
}

json parse_element_argument(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') {
        try {
            return json::parse(arg);
        } catch (const json::parse_error& e) {
            throw ValidationError(ValidationCode::parse, std::string("inline element: ") + e.what());
        }
    }
    return load_json(arg);
}

}  // namespace

std::string format_tensor(const Algebra& a, const TensorSquareElement& p) {
    const Field& f = a.field();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const auto c = p.coeffs(i, j);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            if (!(c == f.one())) os << "(" << f.to_string(c) << ") ";
            os << "[" << label(a, i) << "] (x) [" << label(a, j) << "]";
        }
    if (first) os << "0";
    return os.str();
}

std::string format_report(const OreExtension& ext, const AnalysisReport& r, bool witness) {
    const Algebra& a = ext.algebra();
    const Field& f = a.field();
    std::ostringstream os;
    os << "extension: A of dimension " << r.algebra_dim << " over the field of order " << r.field_order << '\n';
    print_decision(os, f, "frobenius", r.frobenius, witness, a);
    print_decision(os, f, "semi-frobenius", r.semi_frobenius, witness, a);
    print_decision(os, f, "second-kind", r.second_kind, witness, a);
    print_decision(os, f, "split", r.split, witness, a);
    print_decision(os, f, "separable", r.separable, witness, a);
    print_decision(os, f, "base-separable", r.base_separable, witness, a);
    if (r.inner_element) os << "delta is inner: b = " << a.format(*r.inner_element) << '\n';
    for (const auto& n : r.notes) os << "note: " << n << '\n';
    return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decides Frobenius and separability properties of Ore extensions F[x] in A[x; sigma, delta]", "orefrob"};
    app.require_subcommand(1);

    AnalyzeFlags analyze_flags;
    std::string spec_path;
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze an extension spec file");
    analyze_cmd->add_option("spec", spec_path, "extension spec (JSON)")->required();
    add_analyze_flags(analyze_cmd, analyze_flags);

    AnalyzeFlags example_flags;
    std::string example_name;
    std::uint32_t ex_p = 2;
    std::uint32_t ex_n = 3;
    std::string emit_spec;
    std::string emit_element;
    auto* example_cmd = app.add_subcommand("example", "materialize and analyze a built-in example");
    example_cmd->add_option("name", example_name, "paper-counterexample | semi-not-frobenius")
        ->required()
        ->check(CLI::IsMember(builtin_example_names()));
    example_cmd->add_option("--p", ex_p, "characteristic (semi-not-frobenius)");
    example_cmd->add_option("--n", ex_n, "extension degree (semi-not-frobenius)");
    example_cmd->add_option("--emit-spec", emit_spec, "write the extension spec to PATH");
    example_cmd->add_option("--emit-element", emit_element, "write the built-in separability element to PATH (paper-counterexample)");
    add_analyze_flags(example_cmd, example_flags);

    std::string verify_spec;
    std::string element_arg;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify-sep", "check a candidate separability element");
    verify_cmd->add_option("spec", verify_spec, "extension spec (JSON)")->required();
    verify_cmd->add_option("--element", element_arg, "tensor JSON file or inline JSON")->required();
    verify_cmd->add_flag("--json", verify_json, "print the checks as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (analyze_cmd->parsed()) return report(load_extension(spec_path), analyze_flags, out);

        if (example_cmd->parsed()) {
            const bool counterexample = example_name == "paper-counterexample";
            if (counterexample && (example_cmd->count("--p") || example_cmd->count("--n"))) {
                err << "--p/--n only apply to semi-not-frobenius\n";
                return exit_usage;
            }
            if (!counterexample && !emit_element.empty()) {
                err << "--emit-element only applies to paper-counterexample\n";
                return exit_usage;
            }
            const auto ext = counterexample ? paper_counterexample() : semi_not_frobenius(ex_p, ex_n);
            if (!emit_spec.empty()) save_json(emit_spec, extension_to_json(ext));
            if (!emit_element.empty()) save_json(emit_element, tensor_to_json(ext.algebra(), paper_separability_element()));
            return report(ext, example_flags, out);
        }

        if (verify_cmd->parsed()) {
            const auto ext = load_extension(verify_spec);
            const auto p = tensor_from_json(ext.algebra(), parse_element_argument(element_arg));
            const auto c = verify_separability_element(ext, p);
            if (verify_json) {
                out << json{{"mu_is_one", c.mu_is_one},
                            {"casimir", c.casimir},
                            {"sigma_fixed", c.sigma_fixed},
                            {"delta_killed", c.delta_killed},
                            {"separability_element", c.all()}}
                           .dump(2)
                    << '\n';
                return exit_ok;
            }
            auto line = [&](const char* what, bool ok) { out << what << ": " << (ok ? "pass" : "FAIL") << '\n'; };
            line("mu(p) = 1", c.mu_is_one);
            line("a p = p a for every basis element a", c.casimir);
            line("sigma(x)(p) = p", c.sigma_fixed);
            line("delta(x)(p) = 0", c.delta_killed);
            out << "verdict: "
                << (c.all()       ? "separability element of F[x] in A[x; sigma, delta]"
                    : c.base_ok() ? "separability element of A over F only"
                                  : "not a separability element")
                << '\n';
            return exit_ok;
        }
    } catch (const ValidationError& e) {
        err << "validation error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return exit_validation;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return exit_budget;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

}  // namespace orefrob
