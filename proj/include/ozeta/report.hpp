#pragma once

#include <optional>
#include <string>

#include "ozeta/checks.hpp"
#include "ozeta/render.hpp"

namespace ozeta {

/* One executed CLI command: the RunReport (schema/runreport.v1.json), the
 * payload each --format prints, and the process exit code (0 iff every
 * executed check passed). */
struct CommandResult {
    nlohmann::json report;
    nlohmann::json json_payload;  // what --format json prints
    std::string text;
    std::string latex;
    int exit_code = 0;
};

CommandResult run_closed_form(CaseKind kind, long n);
CommandResult run_recurrence(CaseKind kind, long n);
CommandResult run_check_fe(CaseKind kind, long n_lo, long n_hi);
CommandResult run_series(CaseKind kind, long n, long terms,
                         const std::optional<mpz_class>& q);
CommandResult run_verify(const QuadraticSetup& s, long n_max, long k_max);
CommandResult run_census(const QuadraticSetup& s, long n, long k);
CommandResult run_units(const QuadraticSetup& s, long n);

}  // namespace ozeta
