#include <CLI11.hpp>
#include <gmpxx.h>

#include <iostream>
#include <optional>
#include <string>

#include "ozeta/numutil.hpp"
#include "ozeta/report.hpp"

using namespace ozeta;

namespace {

mpz_class parse_mpz(const char* name, const std::string& text) {
    try {
        return mpz_class(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(std::string("--") + name + ": not an integer: '" +
                                    text + "'");
    }
}

CaseKind case_of(const std::string& s) {
    auto kind = parse_case(s);
    if (!kind)
        throw std::invalid_argument("unknown case '" + s +
                                    "' (want ramified, unramified, or split)");
    return *kind;
}

/* --case / --p / --tau / --delta resolution shared by the oracle-side
 * subcommands.  Either a preset (--case + --p) or an explicit --tau/--delta
 * pair; if both are given the classification must agree. */
struct SetupArgs {
    std::string case_str, p_str, tau_str, delta_str;
    CLI::Option* case_opt = nullptr;
    CLI::Option* p_opt = nullptr;
    CLI::Option* tau_opt = nullptr;
    CLI::Option* delta_opt = nullptr;

    void attach(CLI::App* cmd) {
        case_opt = cmd->add_option("--case", case_str, "ramified | unramified | split");
        p_opt = cmd->add_option("--p", p_str, "odd prime");
        tau_opt = cmd->add_option("--tau", tau_str, "trace coefficient of D");
        delta_opt = cmd->add_option("--delta", delta_str, "norm coefficient of D");
    }

    QuadraticSetup resolve() const {
        if (!*p_opt) throw std::invalid_argument("--p is required here");
        mpz_class p = parse_mpz("p", p_str);
        if (static_cast<bool>(*tau_opt) != static_cast<bool>(*delta_opt))
            throw std::invalid_argument("--tau and --delta must be given together");
        if (*tau_opt) {
            QuadraticSetup s = QuadraticSetup::make(p, parse_mpz("tau", tau_str),
                                                    parse_mpz("delta", delta_str));
            if (*case_opt && case_of(case_str) != s.kind)
                throw std::invalid_argument("--case " + case_str +
                                            " does not match this setup, which is " +
                                            to_string(s.kind));
            return s;
        }
        if (!*case_opt)
            throw std::invalid_argument("need --case for a preset, or --tau/--delta");
        return QuadraticSetup::preset(case_of(case_str), p);
    }
};

int emit(const CommandResult& res, const std::string& fmt) {
    if (fmt == "json")
        std::cout << res.json_payload.dump(2) << "\n";
    else if (fmt == "latex")
        std::cout << res.latex << "\n";
    else
        std::cout << res.text << "\n";
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ideal zeta functions of level orders in quadratic p-adic algebras"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string case_str;
    std::string q_str;
    long n = 0, k = 0, n_max = -1, k_max = 6, terms = 8;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text | latex | json")
            ->check(CLI::IsMember({"text", "latex", "json"}));
    };
    auto add_case = [&](CLI::App* cmd) {
        cmd->add_option("--case", case_str, "ramified | unramified | split")->required();
    };

    CLI::App* cf = app.add_subcommand("closed-form", "numerator from the explicit formula");
    add_case(cf);
    cf->add_option("--n", n, "level")->required()->check(CLI::NonNegativeNumber);
    add_format(cf);

    CLI::App* rec = app.add_subcommand("recurrence", "numerator by unrolling the level recursion");
    add_case(rec);
    rec->add_option("--n", n, "level")->required()->check(CLI::NonNegativeNumber);
    add_format(rec);

    CLI::App* fe = app.add_subcommand("check-fe", "test the index-reflection symmetry of the numerator");
    add_case(fe);
    CLI::Option* fe_n = fe->add_option("--n", n, "single level")->check(CLI::NonNegativeNumber);
    CLI::Option* fe_nmax =
        fe->add_option("--n-max", n_max, "check levels 0..n-max (default 12)")
            ->check(CLI::NonNegativeNumber)
            ->excludes(fe_n);
    add_format(fe);

    CLI::App* ser = app.add_subcommand("series", "Dirichlet coefficients of the ideal count");
    add_case(ser);
    ser->add_option("--n", n, "level")->required()->check(CLI::NonNegativeNumber);
    ser->add_option("--terms", terms, "coefficients a_0..a_terms (default 8)")
        ->check(CLI::NonNegativeNumber);
    ser->add_option("--q", q_str, "specialize the symbol q to this integer");
    add_format(ser);

    CLI::App* ver = app.add_subcommand("verify", "run the full formula-vs-enumeration check suite");
    SetupArgs ver_setup;
    ver_setup.attach(ver);
    ver->add_option("--n-max", n_max, "levels 0..n-max (default 3)")
        ->check(CLI::NonNegativeNumber);
    ver->add_option("--k-max", k_max, "indices p^0..p^k-max (default 6)")
        ->check(CLI::NonNegativeNumber);
    add_format(ver);

    CLI::App* cen = app.add_subcommand("census", "enumerate the ideals of one (level, index) cell");
    SetupArgs cen_setup;
    cen_setup.attach(cen);
    cen->add_option("--n", n, "level")->required()->check(CLI::NonNegativeNumber);
    cen->add_option("--k", k, "index exponent: ideals of index p^k")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_format(cen);

    CLI::App* uni = app.add_subcommand("units", "count unit groups of the level quotients");
    SetupArgs uni_setup;
    uni_setup.attach(uni);
    uni->add_option("--n", n, "level")->required()->check(CLI::PositiveNumber);
    add_format(uni);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cf) return emit(run_closed_form(case_of(case_str), n), format);
        if (*rec) return emit(run_recurrence(case_of(case_str), n), format);
        if (*fe) {
            long lo = 0, hi = 12;
            if (*fe_n) lo = hi = n;
            if (*fe_nmax) hi = n_max;
            return emit(run_check_fe(case_of(case_str), lo, hi), format);
        }
        if (*ser) {
            std::optional<mpz_class> q;
            if (!q_str.empty()) q = parse_mpz("q", q_str);
            return emit(run_series(case_of(case_str), n, terms, q), format);
        }
        if (*ver) {
            if (n_max < 0) n_max = 3;
            return emit(run_verify(ver_setup.resolve(), n_max, k_max), format);
        }
        if (*cen) return emit(run_census(cen_setup.resolve(), n, k), format);
        if (*uni) return emit(run_units(uni_setup.resolve(), n), format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: require_subcommand(1)
}
