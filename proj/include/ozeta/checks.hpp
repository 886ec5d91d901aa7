#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ozeta/engine.hpp"
#include "ozeta/oracle.hpp"

namespace ozeta {

struct CheckResult {
    std::string name;
    bool pass = false;
    nlohmann::json detail;  // parameters, expected, actual
};

// closed_form(kind, n).P == solve_recurrence(kind, n).P for n = 0..n_max
std::vector<CheckResult> symbolic_equality_checks(CaseKind kind, long n_max);

// index reflection fixes every canonical numerator, n = 0..n_max
std::vector<CheckResult> functional_equation_checks(CaseKind kind, long n_max);

// canonical shape (degree 2n, constant 1, leading q^n) and the closed-form
// assembly identity, applied to the recurrence output, n = 0..n_max
std::vector<CheckResult> numerator_invariant_checks(CaseKind kind, long n_max);

// a_k(n) = principal_k(n) + a_{k-1}(n-1) in Z[q], plus nonnegativity of all
// Dirichlet coefficients, n = 1..n_max, k = 1..K
std::vector<CheckResult> series_consistency_checks(CaseKind kind, long n_max, long K);

/* Oracle-vs-engine comparisons over the full (n, k) grid, sharing one census
 * per cell:
 *   totals      — ideal count == Dirichlet coefficient at q = p
 *   principals  — principal count == principal-part coefficient at q = p
 *   transfers   — nonprincipal at (n,k) == total at (n-1,k-1), n >= 1
 *   types       — principal type histogram == the predicted one: low type d
 *                 occurs q^d times, every high type occurs [O_0^*:O_n^*] times,
 *                 and no forbidden low types appear
 */
struct GridChecks {
    std::vector<CheckResult> totals;
    std::vector<CheckResult> principals;
    std::vector<CheckResult> transfers;
    std::vector<CheckResult> types;
};

GridChecks census_grid_checks(const QuadraticSetup& s, long n_max, long k_max);

// counted unit-quotient ratio == unit_index specialized at q = p, n = 1..n_max
std::vector<CheckResult> unit_index_checks(const QuadraticSetup& s, long n_max);

// norm-criterion principality == generator-search principality on every ideal,
// n = 0..n_max, k = 0..k_max (keep k_max small; the slow path is quadratic in p)
std::vector<CheckResult> principality_cross_checks(const QuadraticSetup& s, long n_max,
                                                   long k_max);

// the type histogram predicted by the counting formulas, at q = p
std::map<TypeKey, mpz_class> expected_type_histogram(const QuadraticSetup& s, long n,
                                                     long k);

}  // namespace ozeta
