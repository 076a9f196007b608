#include "pim/catalog.hpp"
#include "pim/report_json.hpp"
#include "pim/specfile.hpp"
#include "pim/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace pim;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitHardResidual = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::map<std::string, Rational> parse_overrides(const std::vector<std::string>& raw) {
    std::map<std::string, Rational> out;
    for (const auto& s : raw) {
        std::size_t eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("--param expects name=p/q, got '" + s + "'");
        out[s.substr(0, eq)] = parse_rational(s.substr(eq + 1));
    }
    return out;
}

std::string index_str(const std::vector<int>& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + ")";
}

// Nonzero components only, sorted by index tuple.
void print_tensor(const std::string& label, const Tensor& t) {
    if (t.rank() == 0) {
        std::cout << label << " = " << to_string(t.scalar()) << "\n";
        return;
    }
    bool any = false;
    std::vector<int> idx(static_cast<std::size_t>(t.rank()), 0);
    do {
        const Rational& v = t.at(idx);
        if (v == 0) continue;
        std::cout << label << index_str(idx) << " = " << to_string(v) << "\n";
        any = true;
    } while (Tensor::next_index(idx, t.dim()));
    if (!any) std::cout << label << " = 0\n";
}

void print_connection_table(const std::string& label, const Connection& conn) {
    const int d = conn.dim();
    bool any = false;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::string terms;
            for (int k = 0; k < d; ++k) {
                const Rational& c = conn.coef(i, j, k);
                if (c == 0) continue;
                Rational v = c;
                if (terms.empty()) {
                    if (v < 0) {
                        terms += "-";
                        v = -v;
                    }
                } else {
                    terms += v < 0 ? " - " : " + ";
                    if (v < 0) v = -v;
                }
                if (v != 1) terms += to_string(v) + "*";
                terms += "e" + std::to_string(k);
            }
            if (terms.empty()) continue;
            std::cout << label << "_e" << i << " e" << j << " = " << terms << "\n";
            any = true;
        }
    if (!any) std::cout << label << " = 0\n";
}

void print_reports(const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports) {
        std::cout << r.id << " [" << to_string(r.category) << "] " << to_string(r.status);
        if (r.status == Status::Residual)
            std::cout << " max|res| = " << to_string(r.max_abs_residual) << " at "
                      << index_str(r.witness);
        std::cout << "\n";
    }
}

ParsedSpec load(const std::string& path, const std::vector<std::string>& raw_params) {
    return parse_spec(read_file(path), parse_overrides(raw_params));
}

int cmd_validate(const std::string& path, const std::vector<std::string>& raw_params) {
    ParsedSpec spec;
    try {
        spec = load(path, raw_params);
    } catch (const ValidationError& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return kExitValidation;
    }
    for (const auto& nr : validate(spec.instance).residuals)
        std::cout << nr.name << ": ok\n";
    const Inertia sig = congruence_inertia(derived_metrics(spec.instance).g_tilde);
    std::cout << "g-tilde signature: (" << sig.positive << "," << sig.negative << ","
              << sig.zero << ")\n";
    std::cout << "valid\n";
    return kExitOk;
}

int cmd_classify(const ParsedSpec& spec) {
    const ClassificationReport c = classify(spec.instance);
    std::cout << "class: " << to_string(c.label);
    if (c.label == ClassLabel::Unresolved && !c.zero_residual_labels.empty()) {
        std::cout << " (zero residuals:";
        for (ClassLabel l : c.zero_residual_labels) std::cout << " " << to_string(l);
        std::cout << ")";
    }
    std::cout << ", F4': " << (c.f4_prime ? "yes" : "no")
              << ", para-Sasaki: " << (c.para_sasaki ? "yes" : "no")
              << ", paracontact: " << (c.paracontact ? "yes" : "no")
              << ", theta(xi) = " << to_string(c.theta_xi)
              << ", theta*(xi) = " << to_string(c.theta_star_xi) << "\n";
    return kExitOk;
}

int cmd_connection(const ParsedSpec& spec) {
    const Analysis a = analyze(spec.instance);
    print_connection_table("nabla", a.lc);
    std::cout << "\n";
    print_connection_table("D1", a.fnc);
    std::cout << "\n";
    print_tensor("T1", a.fnc_torsion.T3);
    print_tensor("t", a.fnc_torsion.t);
    print_tensor("t*", a.fnc_torsion.t_star);
    print_tensor("t^", a.fnc_torsion.t_hat);
    return kExitOk;
}

int cmd_curvature(const ParsedSpec& spec, const std::string& which) {
    const Analysis a = analyze(spec.instance);
    const CurvatureBundle& b = which == "lc" ? a.lc_bundle : a.fnc_bundle;
    print_tensor("R", b.R);
    print_tensor("ricci", b.ricci);
    std::cout << "tau = " << to_string(b.tau) << "\n";
    print_tensor("ricci*", b.ricci_star);
    std::cout << "tau* = " << to_string(b.tau_star) << "\n";
    return kExitOk;
}

int cmd_verify(const ParsedSpec& spec, const std::string& suite, const std::string& json_path) {
    const Analysis a = analyze(spec.instance);
    std::vector<IdentityReport> reports;
    if (suite == "core" || suite == "all") {
        auto core = run_identity_suite(a);
        reports.insert(reports.end(), core.begin(), core.end());
    }
    if (suite == "paper" || suite == "all") {
        auto paper = run_crosscheck_suite(a);
        reports.insert(reports.end(), paper.begin(), paper.end());
    }
    print_reports(reports);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write '" << json_path << "'\n";
            return kExitParse;
        }
        out << render_report(spec.instance.name, spec.params, a.classification, reports);
    }
    return any_hard_residual(reports) ? kExitHardResidual : kExitOk;
}

int cmd_example(const Rational& lambda, const Rational& mu, bool emit,
                const std::string& emit_path) {
    const PiManifoldInstance inst = build_section5({lambda, mu});
    if (emit) {
        const std::string text = emit_spec(inst);
        if (emit_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(emit_path, std::ios::binary);
            if (!out) {
                std::cerr << "cannot write '" << emit_path << "'\n";
                return kExitParse;
            }
            out << text;
        }
        return kExitOk;
    }
    std::cout << inst.name << "\n";
    const ClassificationReport c = classify(inst);
    std::cout << "class: " << to_string(c.label)
              << ", theta(xi) = " << to_string(c.theta_xi) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tensor calculus for invariant Pi-structures on Lie groups"};
    app.require_subcommand(1);

    std::string file, json_path, curv_conn = "lc", suite = "all", emit_path;
    std::vector<std::string> raw_params;
    std::string lambda_str = "1", mu_str = "1";

    auto add_common = [&](CLI::App* sub, bool with_file) {
        if (with_file) sub->add_option("file", file, "manifold spec file")->required();
        sub->add_option("--param", raw_params, "override a declared parameter, name=p/q");
    };

    auto* v = app.add_subcommand("validate", "check the structure identities");
    add_common(v, true);
    auto* cl = app.add_subcommand("classify", "determine the class and flags");
    add_common(cl, true);
    auto* co = app.add_subcommand("connection", "print the connection and torsion tables");
    add_common(co, true);
    auto* cu = app.add_subcommand("curvature", "print curvature, Ricci and scalar curvatures");
    add_common(cu, true);
    cu->add_option("--connection", curv_conn, "lc or fnc")
        ->check(CLI::IsMember({"lc", "fnc"}));
    auto* ve = app.add_subcommand("verify", "run the identity and cross-check suites");
    add_common(ve, true);
    ve->add_option("--suite", suite, "core, paper or all")
        ->check(CLI::IsMember({"core", "paper", "all"}));
    ve->add_option("--json", json_path, "write the machine-readable report here");
    auto* ex = app.add_subcommand("example", "built-in 5-dimensional Lie-group instance");
    add_common(ex, false);
    ex->add_option("--lambda", lambda_str, "rational parameter");
    ex->add_option("--mu", mu_str, "rational parameter");
    auto* emit_opt = ex->add_option("--emit", emit_path, "emit the spec file (stdout if no path)")
                         ->expected(0, 1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (ex->parsed()) {
            Rational lambda = parse_rational(lambda_str);
            Rational mu = parse_rational(mu_str);
            for (const auto& [k, val] : parse_overrides(raw_params)) {
                if (k == "lambda")
                    lambda = val;
                else if (k == "mu")
                    mu = val;
                else
                    throw ParseError("example has no parameter '" + k + "'");
            }
            return cmd_example(lambda, mu, emit_opt->count() > 0, emit_path);
        }
        if (v->parsed()) return cmd_validate(file, raw_params);
        const ParsedSpec spec = load(file, raw_params);
        if (cl->parsed()) return cmd_classify(spec);
        if (co->parsed()) return cmd_connection(spec);
        if (cu->parsed()) return cmd_curvature(spec, curv_conn);
        if (ve->parsed()) return cmd_verify(spec, suite, json_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
