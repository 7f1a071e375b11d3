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

#include "cli.hpp"

#include <homalt/algebra_file.hpp>
#include <homalt/catalog.hpp>
#include <homalt/proof_replay.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace homalt::cli {

namespace {

// Errors in user input that end the run with kUsage.
class InputError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out) throw InputError("write failed: " + path);
}

AlgebraFile load_algebra(const std::string& path) {
    try {
        return parse_algebra_file(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Matrix load_morphism(const std::string& path) {
    try {
        return parse_morphism(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Rational parse_rational_flag(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const Error&) {
        throw InputError(std::string("--") + flag + ": expected P/Q, got \"" + text + "\"");
    }
}

// Options shared by check and lemmas.
struct StrategyFlags {
    std::string strategy;
    std::uint64_t points = 0;
    std::optional<std::uint64_t> seed;
    std::size_t support = 3;
    std::string format = "text";

    void attach(CLI::App* app, const char* default_strategy, std::uint64_t default_points) {
        strategy = default_strategy;
        points = default_points;
        app->add_option("--strategy", strategy, "basis, generic, random or sweep")
            ->check(CLI::IsMember({"basis", "generic", "random", "sweep"}))
            ->capture_default_str();
        app->add_option("--points", points, "Random points")->capture_default_str();
        app->add_option("--seed", seed, "Random seed (required with --format json)");
        app->add_option("--support", support, "Support size per variable for sweep")->capture_default_str();
        app->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    }

    Strategy resolve() const {
        if (format == "json" && strategy == "random" && !seed)
            throw InputError("--seed is required for random checks with --format json");
        if (strategy == "basis") return Strategy::basis();
        if (strategy == "generic") return Strategy::generic();
        if (strategy == "sweep") return Strategy::sweep(support);
        if (points == 0) throw InputError("--points must be positive");
        return Strategy::random(points, seed.value_or(0));
    }
};

std::string tuple_string(const std::vector<std::size_t>& idx, const std::vector<std::string>& names) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + names.at(idx[i]);
    return s + ")";
}

void print_report(std::ostream& out, const CheckReport& r, const std::vector<std::string>& names,
                  const std::vector<std::string>& variables) {
    out << std::left << std::setw(18) << r.id << ' ' << std::setw(11) << to_string(r.status) << " ["
        << to_string(r.strategy.kind);
    if (r.strategy.kind == StrategyKind::Random)
        out << ", " << r.strategy.points << " points, seed " << r.strategy.seed << ", degree <= "
            << r.strategy.degree_bound;
    if (r.strategy.kind == StrategyKind::Sweep) out << ", support " << r.strategy.support;
    out << ", " << r.evaluations << (r.evaluations == 1 ? " evaluation]\n" : " evaluations]\n");
    if (!r.note.empty()) out << "    " << r.note << '\n';
    if (!r.witness) return;
    const Witness& w = *r.witness;
    if (!w.basis.empty()) {
        out << "    witness " << tuple_string(w.basis, names) << '\n';
    } else {
        for (std::size_t v = 0; v < w.inputs.size(); ++v)
            out << "    " << (v < variables.size() ? variables[v] : "x" + std::to_string(v)) << " = "
                << w.inputs[v].to_string(names) << '\n';
    }
    if (!w.point.empty()) {
        out << "    at";
        for (const auto& [name, value] : w.point) out << ' ' << name << '=' << value;
        out << '\n';
    }
    if (w.operator_row) out << "    equation " << w.equation << ", operators differ on row " << names.at(*w.operator_row) << '\n';
    out << "    lhs = " << w.lhs.to_string(names) << '\n';
    out << "    rhs = " << w.rhs.to_string(names) << '\n';
}

int exit_code(const std::vector<CheckReport>& reports) {
    bool refused = false;
    for (const auto& r : reports) {
        if (r.status == Status::Fails) return kFail;
        refused = refused || r.status == Status::Refused;
    }
    return refused ? kUsage : kPass;
}

void emit(std::ostream& out, const std::vector<CheckReport>& reports, const std::string& format,
          const std::vector<std::string>& names) {
    if (format == "json") {
        out << reports_to_json(reports);
        return;
    }
    std::size_t passed = 0, failed = 0, refused = 0;
    for (const auto& r : reports) {
        std::vector<std::string> vars;
        if (auto id = parse_identity(r.id)) vars = identity(*id).variables;
        print_report(out, r, names, vars);
        passed += r.passed();
        failed += r.status == Status::Fails;
        refused += r.status == Status::Refused;
    }
    if (reports.size() > 1)
        out << reports.size() << " checks: " << passed << " passed, " << failed << " failed, " << refused
            << " refused\n";
}

CheckReport refused_report(const std::string& id, const Strategy& s, const std::string& why) {
    CheckReport r;
    r.id = id;
    r.status = Status::Refused;
    r.strategy = s;
    r.note = why;
    return r;
}

// --------------------------------------------------------------- commands

struct AlgebraSource {
    std::string file;
    bool mikheev = false;
    std::string lambda, xi;
    bool symbolic = false;

    void attach(CLI::App* app, bool allow_file) {
        CLI::Option* file_opt = nullptr;
        if (allow_file) file_opt = app->add_option("--algebra", file, "Algebra file (JSON)");
        auto* m = app->add_flag("--mikheev", mikheev, "Mikheev's 13-dimensional algebra or its twisted family");
        if (file_opt) file_opt->excludes(m);
        auto* l = app->add_option("--lambda", lambda, "lambda as P/Q");
        auto* x = app->add_option("--xi", xi, "xi as P/Q");
        auto* s = app->add_flag("--symbolic", symbolic, "Keep lambda and xi as indeterminates");
        l->needs(x);
        x->needs(l);
        s->excludes(l)->excludes(x);
    }

    AlgebraFile resolve(bool require_mikheev_flag) const {
        if (!file.empty()) return load_algebra(file);
        if (require_mikheev_flag && !mikheev) throw InputError("one of --algebra or --mikheev is required");
        AlgebraFile out;
        if (symbolic) {
            out.algebra = catalog::mikheev_family(catalog::FamilyParams::symbolic());
        } else if (!lambda.empty()) {
            const Rational l = parse_rational_flag(lambda, "lambda"), x = parse_rational_flag(xi, "xi");
            out.algebra = catalog::mikheev_family(catalog::FamilyParams::rational(l, x));
        } else {
            out.algebra = catalog::mikheev_algebra();
        }
        for (std::size_t i = 0; i < out.algebra.dim(); ++i) out.basis.push_back("e" + std::to_string(i + 1));
        return out;
    }
};

int cmd_check(const std::string& algebra_path, const std::string& id, const std::string& morphism_path,
              const StrategyFlags& flags, std::ostream& out) {
    const AlgebraFile file = load_algebra(algebra_path);
    const HomAlgebra& A = file.algebra;
    std::optional<Matrix> f;
    if (!morphism_path.empty()) {
        f = load_morphism(morphism_path);
        require_same_dim(A.dim(), f->dim(), "--morphism");
    }

    CheckReport report;
    if (id == "right-alt") {
        report = is_right_hom_alternative(A);
    } else if (id == "left-alt") {
        report = is_left_hom_alternative(A);
    } else if (id == "multiplicative") {
        report = is_multiplicative(A);
    } else if (id == "morphism" || id == "weak-morphism") {
        if (!f) throw InputError(id + " needs --morphism FILE");
        report = id == "morphism" ? is_morphism(A, A, *f) : is_weak_morphism(A, A, *f);
    } else if (auto rid = parse_identity(id)) {
        const Strategy s = flags.resolve();
        VerifyOptions options;
        options.beta = f;
        try {
            report = verify(A, *rid, s, options);
        } catch (const Error& e) {
            report = refused_report(id, s, e.what());
        }
    } else {
        throw InputError("unknown identity \"" + id + "\"");
    }
    emit(out, {report}, flags.format, file.basis);
    return exit_code({report});
}

int cmd_lemmas(const AlgebraSource& source, const StrategyFlags& flags, std::ostream& out) {
    const AlgebraFile file = source.resolve(true);
    const Strategy s = flags.resolve();
    const auto reports = verify_all(file.algebra, s);
    emit(out, reports, flags.format, file.basis);
    return exit_code(reports);
}

int cmd_twist(const std::string& algebra_path, const std::string& morphism_path, const std::string& out_path,
              std::ostream& out) {
    const AlgebraFile file = load_algebra(algebra_path);
    const Matrix beta = load_morphism(morphism_path);
    require_same_dim(file.algebra.dim(), beta.dim(), "--morphism");
    const CheckReport weak = is_weak_morphism(file.algebra, file.algebra, beta);
    if (!weak.passed()) {
        print_report(out, weak, file.basis, {});
        throw InputError("the map is not a weak morphism of the algebra");
    }
    write_file(out_path, serialize_algebra(yau_twist(file.algebra, beta), file.basis));
    out << "wrote " << out_path << '\n';
    return kPass;
}

int cmd_mikheev(const AlgebraSource& source, const std::string& out_path, std::ostream& out) {
    const AlgebraFile file = source.resolve(false);
    write_file(out_path, serialize_algebra(file.algebra, file.basis));
    out << "wrote " << out_path << '\n';
    return kPass;
}

int cmd_power(const std::string& algebra_path, const std::string& expr, std::size_t n, std::ostream& out) {
    const AlgebraFile file = load_algebra(algebra_path);
    if (n < 1) throw InputError("--n must be at least 1");
    Element x;
    try {
        x = parse_element(expr, file);
    } catch (const ParseError& e) {
        throw InputError(e.what());
    }
    out << "x = " << x.to_string(file.basis) << '\n';
    for (std::size_t k = 2; k <= n; ++k) out << "x^" << k << " = " << hom_power(file.algebra, x, k).to_string(file.basis) << '\n';
    if (n >= 2) {
        if (auto m = is_hom_nilpotent(file.algebra, x, n)) out << "Hom-nilpotent: x^" << *m << " = 0\n";
        else out << "not Hom-nilpotent up to n = " << n << '\n';
    }
    return kPass;
}

int cmd_noniso(const std::vector<std::string>& params, std::ostream& out) {
    if (params.size() != 4) throw InputError("--params takes exactly four values: L XI L2 XI2");
    const Rational l = parse_rational_flag(params[0], "params"), x = parse_rational_flag(params[1], "params");
    const Rational l2 = parse_rational_flag(params[2], "params"), x2 = parse_rational_flag(params[3], "params");
    if (l.is_zero() || x.is_zero() || l2.is_zero() || x2.is_zero()) throw InputError("--params must be non-zero");
    const bool condition = catalog::family_nonisomorphism_condition(l, x, l2, x2);
    const bool spectrum = catalog::spectrum_certificate(catalog::mikheev_family(catalog::FamilyParams::rational(l, x)),
                                                        catalog::mikheev_family(catalog::FamilyParams::rational(l2, x2)));
    out << "A(" << l << ", " << x << ") vs A(" << l2 << ", " << x2 << ")\n";
    out << "  exponent condition:   " << (condition ? "non-isomorphic (certified)" : "not certified") << '\n';
    out << "  spectrum certificate: " << (spectrum ? "non-isomorphic (certified)" : "not certified") << '\n';
    return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verifier for identities of finite-dimensional Hom-algebras", "homalt"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    std::string algebra_path, identity_id, morphism_path, out_path, element_expr;
    std::size_t power_n = 2;
    std::vector<std::string> noniso_params;
    StrategyFlags check_flags, lemma_flags;
    AlgebraSource lemma_source, mikheev_source;

    auto* check = app.add_subcommand("check", "Check one identity or structural property");
    check->add_option("--algebra", algebra_path, "Algebra file (JSON)")->required();
    check->add_option("--identity", identity_id,
                      "Registry tag, or right-alt, left-alt, multiplicative, morphism, weak-morphism")
        ->required();
    check->add_option("--morphism", morphism_path, "Linear map file for morphism checks and beta2");
    check_flags.attach(check, "random", 100);

    auto* lemmas = app.add_subcommand("lemmas", "Run the whole identity registry");
    lemma_source.attach(lemmas, true);
    lemma_flags.attach(lemmas, "random", 50);

    auto* twist = app.add_subcommand("twist", "Write the Yau twist of an algebra by a weak morphism");
    twist->add_option("--algebra", algebra_path, "Algebra file (JSON)")->required();
    twist->add_option("--morphism", morphism_path, "Linear map file (JSON)")->required();
    twist->add_option("--out", out_path, "Output algebra file")->required();

    auto* mikheev = app.add_subcommand("mikheev", "Export Mikheev's algebra or A(lambda, xi)");
    mikheev->add_option("--out", out_path, "Output algebra file")->required();
    mikheev_source.attach(mikheev, false);

    auto* power = app.add_subcommand("power", "Hom-powers of an element");
    power->add_option("--algebra", algebra_path, "Algebra file (JSON)")->required();
    power->add_option("--element", element_expr, "Element, e.g. \"e7 - e8\"")->required();
    power->add_option("--n", power_n, "Highest power")->capture_default_str();

    auto* noniso = app.add_subcommand("noniso", "Non-isomorphism certificates for A(L,XI) and A(L2,XI2)");
    noniso->add_option("--params", noniso_params, "L XI L2 XI2")->required()->expected(4);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "homalt: " << e.what() << "\n\n";
        err << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kUsage;
    }

    try {
        if (check->parsed()) return cmd_check(algebra_path, identity_id, morphism_path, check_flags, out);
        if (lemmas->parsed()) return cmd_lemmas(lemma_source, lemma_flags, out);
        if (twist->parsed()) return cmd_twist(algebra_path, morphism_path, out_path, out);
        if (mikheev->parsed()) return cmd_mikheev(mikheev_source, out_path, out);
        if (power->parsed()) return cmd_power(algebra_path, element_expr, power_n, out);
        if (noniso->parsed()) return cmd_noniso(noniso_params, out);
    } catch (const Error& e) {
        err << "homalt: " << e.what() << '\n';
        return kUsage;
    }
    err << app.help();
    return kUsage;
}

}  // namespace homalt::cli
