#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "jacksep/errors.hpp"
#include "jacksep/json_io.hpp"
#include "jacksep/oracle.hpp"
#include "jacksep/partition.hpp"
#include "jacksep/rational.hpp"
#include "jacksep/separated.hpp"
#include "jacksep/sov.hpp"
#include "jacksep/sympoly.hpp"
#include "jacksep/unipoly.hpp"
#include "jacksep/verify.hpp"

namespace {

using namespace jacksep;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) out.push_back(item);
    return out;
}

partition parse_lambda(const std::string& s) {
    std::vector<long> parts;
    for (const std::string& piece : split_list(s)) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(piece, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("--lambda: invalid entry '" + piece + "'");
        }
        if (pos != piece.size())
            throw std::invalid_argument("--lambda: invalid entry '" + piece + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("--lambda: empty list");
    return partition(parts);
}

coupling parse_g(const std::string& s) { return coupling(rational::parse(s)); }

std::string e_product_str(const partition& mu) {
    if (mu.empty()) return "1";
    std::ostringstream os;
    const auto& parts = mu.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (i) os << "*";
        os << "e" << parts[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

std::string elementary_str(const std::map<partition, rational>& emap) {
    std::ostringstream os;
    bool first = true;
    for (auto it = emap.rbegin(); it != emap.rend(); ++it) {
        const auto& [mu, c] = *it;
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const rational abs = negative ? -c : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (mu.empty()) {
            os << abs.str();
        } else if (abs == rational(1)) {
            os << e_product_str(mu);
        } else {
            os << abs.str() << "*" << e_product_str(mu);
        }
    }
    return first ? "0" : os.str();
}

struct compute_args {
    long vars = 0;
    std::string lambda;
    std::string g = "1/3";
    std::string form;
    std::string basis = "monomial";
    bool json = false;
};

sym_poly compute_poly(const compute_args& a, const partition& lam, const coupling& g) {
    const std::size_t n = static_cast<std::size_t>(a.vars);
    auto require_vars = [&](long want) {
        if (a.vars != want)
            throw std::invalid_argument("form '" + a.form + "' requires --vars " +
                                        std::to_string(want));
    };
    if (a.form == "standard") {
        require_vars(2);
        return jack_a1_standard(lam, g);
    }
    if (a.form == "pmn") {
        require_vars(2);
        return jack_a1_pmn(lam, g);
    }
    if (a.form == "elementary") {
        require_vars(2);
        return jack_a1_elementary(lam, g);
    }
    if (a.form == "gegenbauer") {
        require_vars(2);
        return jack_a1_gegenbauer(lam, g);
    }
    if (a.form == "repr1") {
        require_vars(3);
        return jack_a2_repr1(lam, g);
    }
    if (a.form == "repr2") {
        require_vars(3);
        return jack_a2_repr2(lam, g);
    }
    if (a.form == "one-row") {
        if (lam.length() > 1)
            throw std::invalid_argument("form 'one-row' needs a partition (r) or (r,0,...)");
        return jack_one_row(lam.part(0), n, g);
    }
    if (a.form == "two-row") {
        require_vars(3);
        if (lam.length() > 2 || lam.part(0) != lam.part(1))
            throw std::invalid_argument("form 'two-row' needs a partition (r,r) or (r,r,0)");
        return jack_two_row(lam.part(0), g);
    }
    if (a.form == "rectangular") {
        if (a.vars < 2) throw std::invalid_argument("form 'rectangular' requires --vars >= 2");
        bool shaped = lam.empty() || static_cast<long>(lam.length()) == a.vars - 1;
        for (std::size_t i = 0; i < lam.length(); ++i)
            if (lam.part(i) != lam.part(0)) shaped = false;
        if (!shaped)
            throw std::invalid_argument(
                "form 'rectangular' needs vars-1 equal parts, (r,...,r,0)");
        return jack_rectangular(lam.part(0), n, g);
    }
    // --form is validated by the option parser, so this is unreachable.
    throw std::invalid_argument("unknown form '" + a.form + "'");
}

int run_compute(const compute_args& a) {
    if (a.vars < 1) throw std::invalid_argument("--vars must be at least 1");
    const partition lam = parse_lambda(a.lambda);
    if (lam.length() > static_cast<std::size_t>(a.vars))
        throw std::invalid_argument("--lambda has more parts than --vars");
    const coupling g = parse_g(a.g);
    const sym_poly p = a.form == "oracle" ? jack_oracle(lam, static_cast<std::size_t>(a.vars), g)
                                          : compute_poly(a, lam, g);
    if (a.basis == "elementary") {
        const auto emap = monomial_to_elementary(p);
        std::cout << (a.json ? elementary_map_to_json(emap, p.nvars()) : elementary_str(emap))
                  << "\n";
    } else {
        std::cout << (a.json ? sym_poly_to_json(p) : p.str()) << "\n";
    }
    return 0;
}

struct separated_args {
    long vars = 0;
    std::string lambda;
    std::string g = "1/3";
    std::string form;
    bool json = false;
};

int run_separated(const separated_args& a) {
    if (a.vars < 1) throw std::invalid_argument("--vars must be at least 1");
    const partition lam = parse_lambda(a.lambda);
    if (lam.length() > static_cast<std::size_t>(a.vars))
        throw std::invalid_argument("--lambda has more parts than --vars");
    const coupling g = parse_g(a.g);
    const std::size_t n = static_cast<std::size_t>(a.vars);
    const uni_poly f =
        a.form == "product" ? f_lambda_product_form(lam, n, g) : f_lambda_sum_form(lam, n, g);
    std::cout << (a.json ? uni_poly_to_json(f) : f.str()) << "\n";
    return 0;
}

struct coeffs_args {
    long r1 = 0;
    long r2 = 0;
    std::string g = "1/3";
    std::string formula = "expansion";
};

int run_coeffs(const coeffs_args& a) {
    const coupling g = parse_g(a.g);
    const coeff_problem pr(a.r1, a.r2, g);
    coeff_table t;
    if (a.formula == "expansion") {
        t = cmn_by_expansion(partition({a.r1, a.r2}), g);
    } else if (a.formula == "f1") {
        t = cmn_table(pr, 1);
    } else if (a.formula == "f2") {
        t = cmn_table(pr, 2);
    } else {
        t = amn_table(pr);
    }
    std::cout << coeff_table_to_json(t) << "\n";
    return 0;
}

struct verify_args {
    std::string suite;
    long max_weight = 0;
    bool max_weight_set = false;
    std::string g_panel;
};

int run_verify(const verify_args& a) {
    verify_options opts = default_verify_options();
    if (a.max_weight_set) {
        if (a.max_weight < 0) throw std::invalid_argument("--max-weight must be >= 0");
        opts.max_size = a.max_weight;
    }
    if (!a.g_panel.empty()) {
        std::vector<rational> panel;
        std::vector<long> integer_panel;
        for (const std::string& piece : split_list(a.g_panel)) {
            const rational v = rational::parse(piece);
            if (v.sign() <= 0)
                throw std::invalid_argument("--g-panel entries must be positive, got '" + piece +
                                            "'");
            panel.push_back(v);
            if (v.is_integer()) integer_panel.push_back(v.to_long());
        }
        if (panel.empty()) throw std::invalid_argument("--g-panel: empty list");
        opts.g_panel = panel;
        opts.orthogonality_g = integer_panel;
    }
    if ((a.suite == "all" || a.suite == "orthogonality") && opts.orthogonality_g.empty())
        throw std::invalid_argument(
            "--g-panel has no positive integer entries; the orthogonality suite needs one");

    if (a.suite == "all") {
        bool all_ok = true;
        std::string out = "[";
        bool first = true;
        for (const std::string& name : suite_names()) {
            const suite_report rep = run_suite(name, opts);
            all_ok = all_ok && rep.ok();
            if (!first) out += ",";
            out += suite_report_to_json(rep);
            first = false;
        }
        out += "]";
        std::cout << out << "\n";
        return all_ok ? 0 : 1;
    }
    const suite_report rep = run_suite(a.suite, opts);
    std::cout << suite_report_to_json(rep) << "\n";
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact rational toolkit for Jack polynomials: closed forms, separated factors,\n"
        "coefficient tables, and verification suites."};
    app.require_subcommand(1);

    compute_args ca;
    CLI::App* compute = app.add_subcommand("compute", "Compute a Jack polynomial");
    compute->add_option("--vars", ca.vars, "Number of variables")->required();
    compute->add_option("--lambda", ca.lambda, "Partition, e.g. 2,1,0")->required();
    compute->add_option("--g", ca.g, "Coupling, a positive rational p/q")->capture_default_str();
    compute->add_option("--form", ca.form, "Construction to use")
        ->required()
        ->check(CLI::IsMember({"standard", "pmn", "elementary", "gegenbauer", "repr1", "repr2",
                               "one-row", "two-row", "rectangular", "oracle"}));
    compute->add_option("--basis", ca.basis, "Output basis")
        ->capture_default_str()
        ->check(CLI::IsMember({"monomial", "elementary"}));
    compute->add_flag("--json", ca.json, "Emit JSON instead of text");

    separated_args sa;
    CLI::App* separated = app.add_subcommand("separated", "Compute a separated polynomial");
    separated->add_option("--vars", sa.vars, "Number of variables")->required();
    separated->add_option("--lambda", sa.lambda, "Partition, e.g. 2,1,0")->required();
    separated->add_option("--g", sa.g, "Coupling, a positive rational p/q")
        ->capture_default_str();
    separated->add_option("--form", sa.form, "Series form")
        ->required()
        ->check(CLI::IsMember({"product", "sum"}));
    separated->add_flag("--json", sa.json, "Emit JSON instead of text");

    coeffs_args ka;
    CLI::App* coeffs = app.add_subcommand("coeffs", "Compute a coefficient table (JSON)");
    coeffs->add_option("--r1", ka.r1, "First partition difference (>= r2)")->required();
    coeffs->add_option("--r2", ka.r2, "Second partition difference")->capture_default_str();
    coeffs->add_option("--g", ka.g, "Coupling, a positive rational p/q")->capture_default_str();
    coeffs->add_option("--formula", ka.formula, "Which construction fills the table")
        ->capture_default_str()
        ->check(CLI::IsMember({"f1", "f2", "expansion", "a-table"}));

    verify_args va;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite (JSON report)");
    std::vector<std::string> all_suites = jacksep::suite_names();
    all_suites.push_back("all");
    verify->add_option("--suite", va.suite, "Suite name, or 'all'")
        ->required()
        ->check(CLI::IsMember(all_suites));
    CLI::Option* mw = verify->add_option("--max-weight", va.max_weight,
                                         "Cap on the suite's size parameter");
    verify->add_option("--g-panel", va.g_panel,
                       "Comma-separated positive rationals replacing the default panel");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    va.max_weight_set = mw->count() > 0;

    try {
        if (compute->parsed()) return run_compute(ca);
        if (separated->parsed()) return run_separated(sa);
        if (coeffs->parsed()) return run_coeffs(ka);
        if (verify->parsed()) return run_verify(va);
        std::cerr << "jacksep: no subcommand\n";
        return 2;
    } catch (const jacksep::degenerate_parameter& e) {
        std::cerr << "jacksep: " << e.what() << "\n";
        return 3;
    } catch (const jacksep::eigenvalue_collision& e) {
        std::cerr << "jacksep: " << e.what() << "\n";
        return 3;
    } catch (const jacksep::truncation_failure& e) {
        std::cerr << "jacksep: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "jacksep: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "jacksep: " << e.what() << "\n";
        return 1;
    }
}
