#pragma once

#include "ozeta/algebra.hpp"
#include "ozeta/poly.hpp"

namespace ozeta {

/* Numerator P of the ideal zeta function of the level-n order, as a polynomial
 * in X = q^{-s}: zeta_n(s) = P(X) / V(X).  Canonical numerators satisfy
 * deg P = 2n, P(0) = 1, leading coefficient q^n; producers enforce that via
 * validate_numerator, but the struct itself is plain data (so non-canonical
 * polynomials can still be fed to the functional-equation check). */
struct ZetaNumerator {
    CaseKind kind;
    long n = 0;
    XPoly P;
};

// throws std::invalid_argument when zn violates the canonical-shape invariants
void validate_numerator(const ZetaNumerator& zn);

// Euler-like denominator V: 1 - X (ramified), 1 - X^2 (unramified), (1 - X)^2 (split)
XPoly v_factor(CaseKind kind);

// sum_{i=0}^{m} q^i X^{2i}; the ramified numerator and the recurrence kernel
XPoly qx2_partial_sum(long m);

/* Closed-form numerators:
 *   ramified    R_n = sum_{i<=n} q^i X^{2i}
 *   unramified  U_n = (1 + X) R_{n-1} + q^n X^{2n},  U_0 = 1
 *   split       S_n = (1 - X) R_{n-1} + q^n X^{2n},  S_0 = 1
 */
ZetaNumerator closed_form(CaseKind kind, long n);

/* Unit-group index [O_0^* : O_n^*] as a polynomial in q:
 * 1 at n = 0; then q^n, (q+1)q^{n-1}, (q-1)q^{n-1}. */
QPoly unit_index(CaseKind kind, long n);

/* Series of the principal-ideal partial zeta function,
 *   sum_{d<n} (idx(n)/idx(n-d)) X^{2d}  +  idx(n) X^{2n} / V(X),
 * truncated at order K.  The ratios are computed by exact division in Z[q]
 * (they come out to q^d).  n = 0 gives the full series 1/V, matching the fact
 * that every finite-index ideal of the maximal order is principal. */
CoeffSeries principal_part(CaseKind kind, long n, long K);

/* Solves P_0 = 1, P_m = V * (sum_{d<m} q^d X^{2d}) + idx(m) X^{2m} + X * P_{m-1}
 * up to level n; each step is validated against the canonical shape. */
ZetaNumerator solve_recurrence(CaseKind kind, long n);

// true iff the index reflection (qX^2)^n P(1/(qX)) reproduces P exactly
bool check_functional_equation(const ZetaNumerator& zn);

// first K+1 coefficients of P_n / V: the ideal counts by index exponent
CoeffSeries dirichlet_coeffs(CaseKind kind, long n, long K);

}  // namespace ozeta
