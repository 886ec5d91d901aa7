#include "ozeta/report.hpp"

#include <chrono>
#include <sstream>

#include "ozeta/engine.hpp"
#include "ozeta/numutil.hpp"
#include "ozeta/oracle.hpp"

namespace ozeta {
namespace {

using nlohmann::json;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        auto dt = std::chrono::steady_clock::now() - t0;
        return std::chrono::duration<double, std::milli>(dt).count();
    }
};

json checks_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json item{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.is_null()) item["detail"] = c.detail;
        arr.push_back(std::move(item));
    }
    return arr;
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

json make_report(const std::string& command, json parameters, json results,
                 const std::vector<CheckResult>& checks, const Timer& timer) {
    return json{{"schema_version", "v1"},
                {"command", command},
                {"parameters", std::move(parameters)},
                {"results", std::move(results)},
                {"checks", checks_json(checks)},
                {"all_pass", all_pass(checks)},
                {"wall_ms", timer.ms()}};
}

json setup_params(const QuadraticSetup& s) {
    return json{{"case", to_string(s.kind)},
                {"p", json_int(s.p)},
                {"tau", json_int(s.tau)},
                {"delta", json_int(s.delta)}};
}

// one human-readable line per check; parameters inline, mismatch detail only on failure
std::string check_line(const CheckResult& c) {
    std::string line = c.pass ? "ok   " : "FAIL ";
    line += c.name;
    for (const char* key : {"case", "p", "n", "k"}) {
        if (c.detail.is_object() && c.detail.contains(key)) {
            const json& v = c.detail[key];
            line += ' ';
            line += key;
            line += '=';
            line += v.is_string() ? v.get<std::string>() : v.dump();
        }
    }
    if (!c.pass) {
        json extra = c.detail;
        for (const char* key : {"case", "p", "n", "k"})
            if (extra.is_object()) extra.erase(key);
        line += "  ";
        line += extra.dump();
    }
    return line;
}

std::string check_summary(const std::vector<CheckResult>& checks) {
    size_t passed = 0;
    for (const auto& c : checks) passed += c.pass ? 1 : 0;
    std::ostringstream os;
    os << passed << "/" << checks.size() << " checks passed";
    return os.str();
}

std::string checks_text(const std::vector<CheckResult>& checks,
                        const std::string& label) {
    std::string out;
    for (const auto& c : checks) {
        out += check_line(c);
        out += '\n';
    }
    out += label + ": " + check_summary(checks);
    return out;
}

std::string type_key_str(const TypeKey& key) {
    std::string s = "(";
    for (size_t i = 0; i < key.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(key[i]);
    }
    return s + ")";
}

template <class Count>
json histogram_json(const std::map<TypeKey, Count>& hist) {
    json obj = json::object();
    for (const auto& [key, cnt] : hist) obj[type_key_str(key)] = json_int(mpz_class(cnt));
    return obj;
}

}  // namespace

CommandResult run_closed_form(CaseKind kind, long n) {
    Timer timer;
    ZetaNumerator zn = closed_form(kind, n);
    json params{{"case", to_string(kind)}, {"n", n}};
    json results{{"numerator", to_json(zn.P)},
                 {"numerator_text", zn.P.str()},
                 {"denominator_text", v_factor(kind).str()}};
    CommandResult res;
    res.text = zn.P.str();
    res.latex = zn.P.str_latex();
    res.json_payload = to_json(zn.P);
    res.report = make_report("closed-form", std::move(params), std::move(results), {}, timer);
    return res;
}

CommandResult run_recurrence(CaseKind kind, long n) {
    Timer timer;
    ZetaNumerator zn = solve_recurrence(kind, n);
    ZetaNumerator direct = closed_form(kind, n);
    std::vector<CheckResult> checks;
    checks.push_back({"matches-closed-form", zn.P == direct.P,
                      zn.P == direct.P
                          ? json(nullptr)
                          : json{{"recurrence", zn.P.str()}, {"closed", direct.P.str()}}});
    json params{{"case", to_string(kind)}, {"n", n}};
    json results{{"numerator", to_json(zn.P)},
                 {"numerator_text", zn.P.str()},
                 {"denominator_text", v_factor(kind).str()}};
    CommandResult res;
    res.text = zn.P.str();
    res.latex = zn.P.str_latex();
    res.json_payload = to_json(zn.P);
    res.report = make_report("recurrence", std::move(params), std::move(results), checks, timer);
    res.exit_code = all_pass(checks) ? 0 : 1;
    return res;
}

CommandResult run_check_fe(CaseKind kind, long n_lo, long n_hi) {
    Timer timer;
    std::vector<CheckResult> checks;
    json verdicts = json::array();
    for (long n = n_lo; n <= n_hi; ++n) {
        ZetaNumerator zn = closed_form(kind, n);
        bool ok = check_functional_equation(zn);
        checks.push_back({"functional-equation", ok,
                          json{{"case", to_string(kind)}, {"n", n}}});
        verdicts.push_back(json{{"n", n}, {"holds", ok}});
    }
    json params{{"case", to_string(kind)}, {"n_min", n_lo}, {"n_max", n_hi}};
    CommandResult res;
    res.text = checks_text(checks, "check-fe");
    res.latex = res.text;
    res.report = make_report("check-fe", std::move(params),
                             json{{"verdicts", verdicts}}, checks, timer);
    res.json_payload = res.report;
    res.exit_code = all_pass(checks) ? 0 : 1;
    return res;
}

CommandResult run_series(CaseKind kind, long n, long terms,
                         const std::optional<mpz_class>& q) {
    Timer timer;
    CoeffSeries cs = dirichlet_coeffs(kind, n, terms);
    json params{{"case", to_string(kind)}, {"n", n}, {"terms", terms}};
    json results{{"coefficients", to_json(cs)}};
    CommandResult res;
    if (q) {
        params["q"] = json_int(*q);
        std::vector<mpz_class> vals = cs.specialize(*q);
        results["values"] = to_json(vals);
        res.text = ints_text(vals);
        res.latex = res.text;
    } else {
        res.text = series_text(cs);
        std::string lx = "[";
        for (long k = 0; k <= cs.order; ++k) {
            if (k) lx += ", ";
            lx += cs.a[static_cast<size_t>(k)].str_latex();
        }
        res.latex = lx + "]";
    }
    res.report = make_report("series", std::move(params), std::move(results), {}, timer);
    res.json_payload = res.report["results"];
    return res;
}

CommandResult run_verify(const QuadraticSetup& s, long n_max, long k_max) {
    Timer timer;
    std::vector<CheckResult> checks;

    auto append = [&checks](std::vector<CheckResult> more) {
        for (auto& c : more) checks.push_back(std::move(c));
    };

    append(symbolic_equality_checks(s.kind, n_max));
    append(functional_equation_checks(s.kind, n_max));
    append(numerator_invariant_checks(s.kind, n_max));
    append(series_consistency_checks(s.kind, n_max, k_max));

    GridChecks grid = census_grid_checks(s, n_max, k_max);
    append(grid.totals);
    append(grid.principals);
    append(grid.types);
    append(grid.transfers);

    // unit-group index: the p^{2n} brute loop caps how far n can go
    long n_units = n_max;
    while (n_units > 0 && pow_int(s.p, 2 * n_units) > kLatticeBudget) --n_units;
    append(unit_index_checks(s, n_units));

    // independent principality oracle; p^2 generator candidates per ideal,
    // so keep p and k small
    if (s.p <= 50) append(principality_cross_checks(s, n_max, std::min(k_max, 3L)));

    json params = setup_params(s);
    params["n_max"] = n_max;
    params["k_max"] = k_max;
    CommandResult res;
    res.text = checks_text(checks, "verify");
    res.latex = res.text;
    res.report = make_report("verify", std::move(params),
                             json{{"checks_run", checks.size()}}, checks, timer);
    res.json_payload = res.report;
    res.exit_code = all_pass(checks) ? 0 : 1;
    return res;
}

CommandResult run_census(const QuadraticSetup& s, long n, long k) {
    Timer timer;
    LowHighReport rpt = low_high_census(s, n, k);
    const Census& c = rpt.census;

    std::vector<CheckResult> checks;
    json detail{{"case", to_string(s.kind)}, {"p", json_int(s.p)}, {"n", n}, {"k", k}};
    if (!rpt.low_types_allowed) {
        json bad = json::array();
        for (const auto& key : rpt.forbidden) bad.push_back(type_key_str(key));
        detail["forbidden_low_types"] = bad;
    }
    checks.push_back({"low-types-allowed", rpt.low_types_allowed, detail});

    json mult = json::object();
    for (const auto& [i, cnt] : c.multiplier_dist) mult[std::to_string(i)] = json_int(cnt);
    json results{{"n", n},
                 {"k", k},
                 {"total", json_int(c.total)},
                 {"principal", json_int(c.principal)},
                 {"nonprincipal", json_int(c.nonprincipal)},
                 {"principal_types", histogram_json(c.principal_types)},
                 {"low_types", histogram_json(c.low_types)},
                 {"high_types", histogram_json(c.high_types)},
                 {"multiplier_dist", std::move(mult)}};

    std::ostringstream os;
    os << "case=" << to_string(s.kind) << " p=" << s.p << " n=" << n << " k=" << k << "\n";
    os << "total " << c.total << "  principal " << c.principal
       << "  nonprincipal " << c.nonprincipal << "\n";
    os << "principal types:";
    if (c.principal_types.empty()) os << " (none)";
    os << "\n";
    for (const auto& [key, cnt] : c.principal_types) {
        bool low = c.low_types.count(key) != 0;
        os << "  " << type_key_str(key) << ": " << cnt << (low ? "  [low]" : "  [high]") << "\n";
    }
    os << "multiplier distribution:";
    if (c.multiplier_dist.empty()) os << " (none)";
    os << "\n";
    bool first = true;
    for (const auto& [i, cnt] : c.multiplier_dist) {
        os << (first ? "" : "\n") << "  i=" << i << ": " << cnt;
        first = false;
    }

    json params = setup_params(s);
    params["n"] = n;
    params["k"] = k;
    CommandResult res;
    res.text = os.str();
    res.latex = res.text;
    res.report = make_report("census", std::move(params), std::move(results), checks, timer);
    res.json_payload = res.report;
    res.exit_code = all_pass(checks) ? 0 : 1;
    return res;
}

CommandResult run_units(const QuadraticSetup& s, long n) {
    Timer timer;
    std::vector<CheckResult> checks = unit_index_checks(s, n);
    UnitQuotientCounts uc = unit_quotient_counts(s, n);
    QPoly expected = unit_index(s.kind, n);

    json results{{"base_units", json_int(uc.base_units)},
                 {"order_units", json_int(uc.order_units)},
                 {"expected_index", to_json(expected)},
                 {"expected_index_text", expected.str()}};
    std::ostringstream os;
    os << "case=" << to_string(s.kind) << " p=" << s.p << " n=" << n << "\n";
    os << "units in O_0/p^n: " << uc.base_units << "\n";
    os << "units in O_n/p^n (as subgroup image): " << uc.order_units << "\n";
    if (uc.order_units != 0 && uc.base_units % uc.order_units == 0) {
        mpz_class ratio = uc.base_units / uc.order_units;
        results["index"] = json_int(ratio);
        os << "index: " << ratio << "\n";
    }
    os << "expected index at q=" << s.q << ": " << expected.specialize(s.q)
       << "  (" << expected.str() << ")\n";
    os << checks_text(checks, "units");

    json params = setup_params(s);
    params["n"] = n;
    CommandResult res;
    res.text = os.str();
    res.latex = res.text;
    res.report = make_report("units", std::move(params), std::move(results), checks, timer);
    res.json_payload = res.report;
    res.exit_code = all_pass(checks) ? 0 : 1;
    return res;
}

}  // namespace ozeta
