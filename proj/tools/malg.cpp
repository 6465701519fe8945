// malg: exact computer algebra for free metabelian Novikov and
// metabelian Lie-admissible algebras.
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "malg/diffcom.hpp"
#include "malg/enumerate.hpp"
#include "malg/identity.hpp"
#include "malg/mlieadm.hpp"
#include "malg/mnov.hpp"
#include "malg/oracle.hpp"
#include "malg/parse.hpp"
#include "malg/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace malg;
using clk = std::chrono::steady_clock;

constexpr int kExitCheckFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitPrecondition = 3;

constexpr int kOracleCap = 6;
constexpr int kEnumerationCap = 8;

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long elapsed_ms(clk::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clk::now() - start).count();
}

void require_cap(int degree, int cap, int max_cost, const std::string& stage) {
    const int limit = max_cost > 0 ? max_cost : cap;
    if (degree > limit)
        throw PreconditionError(stage + " degree " + std::to_string(degree) +
                                " exceeds the cap " + std::to_string(limit) +
                                " (raise with --max-cost)");
    if (degree < 1) throw PreconditionError("degree must be >= 1");
}

Signature variety_signature(const std::string& v) {
    return v == "mlieadm_pol" ? Signature::BracketBrace : Signature::Star;
}

IdentitySet resolve_variety(const std::string& variety, const std::string& identities_path) {
    if (variety == "custom" || !identities_path.empty()) {
        if (identities_path.empty())
            throw PreconditionError("--variety custom requires --identities <path>");
        return load_identity_file(identities_path);
    }
    if (!is_builtin_variety(variety)) throw PreconditionError("unknown variety: " + variety);
    return builtin_variety(variety);
}

json poly_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& [t, c] : p.terms()) arr.push_back({{"coef", rat_str(c)}, {"term", format_term(t)}});
    return arr;
}

int cmd_dims(const std::string& variety, const std::string& identities_path, int max_degree,
             const std::string& method, bool as_json, int max_cost) {
    if (max_degree < 1) throw PreconditionError("--max-degree must be >= 1");
    const bool want_basis = method == "basis" || method == "both";
    const bool want_oracle = method == "oracle" || method == "both";
    if (!want_basis && !want_oracle) throw PreconditionError("--method must be basis|oracle|both");
    const bool structured = variety == "mnov" || variety == "mlieadm";
    if (want_basis && !structured)
        throw PreconditionError("--method basis needs a structured variety (mnov or mlieadm)");
    if (want_basis) require_cap(max_degree, kEnumerationCap, max_cost, "enumeration");
    if (want_oracle) require_cap(max_degree, kOracleCap, max_cost, "oracle");

    IdentitySet ids;
    if (want_oracle) ids = resolve_variety(variety, identities_path);

    const auto start = clk::now();
    json rows = json::array();
    std::vector<std::string> basis_col, oracle_col;
    bool mismatch = false;
    for (int n = 1; n <= max_degree; ++n) {
        json row{{"degree", n}};
        mpz_class b;
        int o = 0;
        if (want_basis) {
            b = variety == "mnov" ? mpz_class(nov_dims(n)) : mla_dims(n);
            row["basis"] = b.get_str() == std::to_string(b.get_si())
                               ? json(static_cast<long>(b.get_si()))
                               : json(b.get_str());
            basis_col.push_back(b.get_str());
        }
        if (want_oracle) {
            o = dim_multilinear(ids, n);
            row["oracle"] = o;
            oracle_col.push_back(std::to_string(o));
        }
        if (want_basis && want_oracle) {
            row["match"] = b == o;
            if (b != o) mismatch = true;
        }
        rows.push_back(std::move(row));
    }
    if (as_json) {
        json out{{"variety", variety}, {"method", method}, {"rows", rows},
                 {"timing_ms", elapsed_ms(start)}};
        std::cout << out.dump() << "\n";
    } else if (method == "both") {
        std::cout << "degree basis oracle match\n";
        for (int n = 1; n <= max_degree; ++n)
            std::cout << n << " " << basis_col[static_cast<std::size_t>(n - 1)] << " "
                      << oracle_col[static_cast<std::size_t>(n - 1)] << " "
                      << (basis_col[static_cast<std::size_t>(n - 1)] ==
                                  oracle_col[static_cast<std::size_t>(n - 1)]
                              ? "yes"
                              : "NO")
                      << "\n";
        std::cout << "time_ms=" << elapsed_ms(start) << "\n";
    } else {
        const auto& col = want_basis ? basis_col : oracle_col;
        for (std::size_t i = 0; i < col.size(); ++i) std::cout << (i ? " " : "") << col[i];
        std::cout << "\n";
    }
    return mismatch ? kExitCheckFailure : 0;
}

int cmd_nf(const std::string& variety, const std::string& term_text, bool as_json) {
    if (variety != "mnov" && variety != "mlieadm")
        throw PreconditionError("nf supports --variety mnov or mlieadm");
    const Signature sig = variety == "mnov" ? Signature::Star : Signature::BracketBrace;
    const auto start = clk::now();
    Polynomial input = parse_poly(term_text, sig);
    Polynomial nf = variety == "mnov" ? nov_nf(input).to_polynomial() : mla_nf(input);
    if (as_json) {
        json out{{"variety", variety},
                 {"input", term_text},
                 {"normal_form", poly_json(nf)},
                 {"timing_ms", elapsed_ms(start)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << format_poly(nf) << "\n";
    }
    return 0;
}

int cmd_basis(const std::string& variety, int degree, int vars, bool multilinear, bool as_json,
              int max_cost) {
    if (variety != "mnov" && variety != "mlieadm")
        throw PreconditionError("basis supports --variety mnov or mlieadm");
    require_cap(degree, kEnumerationCap, max_cost, "enumeration");
    if (vars < 1) vars = degree;
    const auto start = clk::now();
    std::vector<Term> terms;
    if (variety == "mnov") {
        if (multilinear)
            for (const auto& m : nov_basis_multilinear(degree)) terms.push_back(m.to_term());
        else
            for (const auto& m : nov_basis(degree, vars)) terms.push_back(m.to_term());
    } else {
        if (multilinear)
            for (const auto& m : mla_basis_multilinear(degree)) terms.push_back(m.to_term());
        else
            for (const auto& m : mla_basis(degree, vars)) terms.push_back(m.to_term());
    }
    if (as_json) {
        json arr = json::array();
        for (const Term& t : terms) arr.push_back(format_term(t));
        json out{{"variety", variety},     {"degree", degree},
                 {"vars", vars},           {"multilinear", multilinear},
                 {"monomials", arr},       {"count", terms.size()},
                 {"timing_ms", elapsed_ms(start)}};
        std::cout << out.dump() << "\n";
    } else {
        for (const Term& t : terms) std::cout << format_term(t) << "\n";
        std::cout << "count=" << terms.size() << "\n";
    }
    return 0;
}

int cmd_sym(const std::string& variety, int degree, bool verify, bool as_json, int max_cost) {
    if (variety != "mnov" && variety != "mlieadm")
        throw PreconditionError("sym supports --variety mnov or mlieadm");
    require_cap(degree, kEnumerationCap, max_cost, "enumeration");
    const auto start = clk::now();
    std::vector<std::string> labels;
    std::vector<Polynomial> polys;
    if (variety == "mnov") {
        for (auto& p : nov_sym_generators(degree)) polys.push_back(std::move(p));
        labels = nov_sym_labels(degree);
    } else {
        for (auto& g : mla_sym_generators(degree)) {
            labels.push_back(g.label);
            polys.push_back(g.poly);
        }
    }
    std::vector<CheckResult> checks;
    if (verify) {
        const bool oracle_ok = degree <= (max_cost > 0 ? max_cost : kOracleCap);
        checks = variety == "mnov" ? mnov_sym_suite(degree, oracle_ok, {})
                                   : mla_sym_suite(degree, oracle_ok, {});
    }
    if (as_json) {
        json gens = json::array();
        for (std::size_t i = 0; i < polys.size(); ++i)
            gens.push_back({{"label", labels[i]}, {"poly", format_poly(polys[i])}});
        json out{{"variety", variety}, {"degree", degree}, {"generators", gens},
                 {"timing_ms", elapsed_ms(start)}};
        if (verify) {
            json jc = json::array();
            for (const auto& c : checks)
                jc.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            out["checks"] = jc;
        }
        std::cout << out.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < polys.size(); ++i)
            std::cout << labels[i] << " = " << format_poly(polys[i]) << "\n";
        for (const auto& c : checks)
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                      << (c.detail.empty() ? "" : " — " + c.detail) << "\n";
        std::cout << "time_ms=" << elapsed_ms(start) << "\n";
    }
    return verify && !all_pass(checks) ? kExitCheckFailure : 0;
}

int cmd_verify(const std::string& variety, int degree, const std::string& suite, bool as_json,
               int max_cost) {
    require_cap(degree, kOracleCap, max_cost, "oracle");
    const auto start = clk::now();
    std::vector<CheckResult> checks = verify_suite(variety, degree, suite);
    if (as_json) {
        json jc = json::array();
        for (const auto& c : checks)
            jc.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        json out{{"suite", suite}, {"checks", jc}, {"timing_ms", elapsed_ms(start)}};
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& c : checks)
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                      << (c.detail.empty() ? "" : " — " + c.detail) << "\n";
        std::cout << "time_ms=" << elapsed_ms(start) << "\n";
    }
    return all_pass(checks) ? 0 : kExitCheckFailure;
}

int cmd_reduce(const std::string& identities_path, int degree, const std::string& poly_text,
               bool as_json, int max_cost) {
    require_cap(degree, kOracleCap, max_cost, "oracle");
    IdentitySet ids = load_identity_file(identities_path);
    const auto start = clk::now();
    Polynomial p = parse_poly(poly_text, ids.signature);
    if (!p.is_multilinear(degree))
        throw PreconditionError("polynomial must be multilinear of degree " +
                                std::to_string(degree));
    ConsequenceBasis cb = consequence_basis(ids, degree);
    Polynomial reduced = cb.reduce(p);
    const bool consequence = reduced.is_zero();
    if (as_json) {
        json out{{"input", poly_text},
                 {"reduced", format_poly(reduced)},
                 {"consequence", consequence},
                 {"timing_ms", elapsed_ms(start)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << format_poly(reduced) << "\n";
        std::cout << "consequence=" << (consequence ? "true" : "false") << "\n";
        std::cout << "time_ms=" << elapsed_ms(start) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for free metabelian Novikov and Lie-admissible algebras"};
    app.require_subcommand(1);

    std::string variety = "mnov", identities_path, method = "basis", suite = "all";
    std::string term_text, poly_text;
    int degree = 1, max_degree = 1, vars = 0, max_cost = 0;
    bool multilinear = false, verify = false, as_json = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "machine-readable output");
        sub->add_option("--max-cost", max_cost,
                        "acknowledge cost and raise the degree caps to this value");
    };

    CLI::App* dims = app.add_subcommand("dims", "dimension of the multilinear component per degree");
    dims->add_option("--variety", variety, "novikov|mnov|lieadm|mlieadm|custom")->required();
    dims->add_option("--identities", identities_path, "identity file for --variety custom");
    dims->add_option("--max-degree", max_degree, "compute degrees 1..N")->required();
    dims->add_option("--method", method, "basis|oracle|both");
    add_common(dims);

    CLI::App* nf = app.add_subcommand("nf", "normal form of a polynomial");
    nf->add_option("--variety", variety, "mnov|mlieadm")->required();
    nf->add_option("--term,--poly", term_text, "term or polynomial text")->required();
    add_common(nf);

    CLI::App* basis = app.add_subcommand("basis", "structured basis monomials");
    basis->add_option("--variety", variety, "mnov|mlieadm")->required();
    basis->add_option("--degree", degree, "degree")->required();
    basis->add_option("--vars", vars, "alphabet size (default: degree)");
    basis->add_flag("--multilinear", multilinear, "multilinear monomials over x1..xn only");
    add_common(basis);

    CLI::App* sym = app.add_subcommand("sym", "symmetric generators of the multilinear part");
    sym->add_option("--variety", variety, "mnov|mlieadm")->required();
    sym->add_option("--degree", degree, "degree")->required();
    sym->add_flag("--verify", verify, "run invariance/spanning checks");
    add_common(sym);

    CLI::App* verify_cmd = app.add_subcommand("verify", "cross-validation suites");
    verify_cmd->add_option("--variety", variety, "novikov|mnov|lieadm|mlieadm")->required();
    verify_cmd->add_option("--degree", degree, "degree")->required();
    verify_cmd->add_option("--suite", suite, "identities|basis|table|sym|all");
    add_common(verify_cmd);

    CLI::App* reduce = app.add_subcommand("reduce", "canonical reduction against a custom identity set");
    reduce->add_option("--identities", identities_path, "identity file")->required();
    reduce->add_option("--degree", degree, "multilinear degree")->required();
    reduce->add_option("--poly", poly_text, "polynomial text")->required();
    add_common(reduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParseError;
    }

    try {
        if (dims->parsed())
            return cmd_dims(variety, identities_path, max_degree, method, as_json, max_cost);
        if (nf->parsed()) return cmd_nf(variety, term_text, as_json);
        if (basis->parsed())
            return cmd_basis(variety, degree, vars, multilinear, as_json, max_cost);
        if (sym->parsed()) return cmd_sym(variety, degree, verify, as_json, max_cost);
        if (verify_cmd->parsed())
            return cmd_verify(variety, degree, suite, as_json, max_cost);
        if (reduce->parsed())
            return cmd_reduce(identities_path, degree, poly_text, as_json, max_cost);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}
