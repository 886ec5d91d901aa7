#include "ozeta/engine.hpp"

#include <stdexcept>
#include <string>

namespace ozeta {

void validate_numerator(const ZetaNumerator& zn) {
    if (zn.n < 0) throw std::invalid_argument("ZetaNumerator: negative level");
    if (zn.P.degree() != 2 * zn.n)
        throw std::invalid_argument("ZetaNumerator: degree != 2n at n=" +
                                    std::to_string(zn.n));
    if (zn.P.coeff(0) != QPoly(1))
        throw std::invalid_argument("ZetaNumerator: constant term != 1");
    if (zn.P.leading() != QPoly::monomial(1, zn.n))
        throw std::invalid_argument("ZetaNumerator: leading coefficient != q^n");
}

XPoly v_factor(CaseKind kind) {
    XPoly one(1), X = XPoly::monomial(QPoly(1), 1);
    switch (kind) {
        case CaseKind::Ramified: return one - X;
        case CaseKind::Unramified: return one - X * X;
        case CaseKind::Split: return (one - X) * (one - X);
    }
    throw std::invalid_argument("v_factor: bad case");
}

XPoly qx2_partial_sum(long m) {
    if (m < 0) return XPoly();
    std::vector<QPoly> c(static_cast<size_t>(2 * m) + 1);
    for (long i = 0; i <= m; ++i) c[static_cast<size_t>(2 * i)] = QPoly::monomial(1, i);
    return XPoly(std::move(c));
}

ZetaNumerator closed_form(CaseKind kind, long n) {
    if (n < 0) throw std::invalid_argument("closed_form: negative n");
    ZetaNumerator zn{kind, n, XPoly(1)};
    if (n > 0) {
        XPoly top = XPoly::monomial(QPoly::monomial(1, n), 2 * n);
        XPoly one(1), X = XPoly::monomial(QPoly(1), 1);
        switch (kind) {
            case CaseKind::Ramified: zn.P = qx2_partial_sum(n); break;
            case CaseKind::Unramified: zn.P = (one + X) * qx2_partial_sum(n - 1) + top; break;
            case CaseKind::Split: zn.P = (one - X) * qx2_partial_sum(n - 1) + top; break;
        }
    }
    validate_numerator(zn);
    return zn;
}

QPoly unit_index(CaseKind kind, long n) {
    if (n < 0) throw std::invalid_argument("unit_index: negative n");
    if (n == 0) return QPoly(1);
    switch (kind) {
        case CaseKind::Ramified: return QPoly::monomial(1, n);
        case CaseKind::Unramified:
            return QPoly::monomial(1, n) + QPoly::monomial(1, n - 1);
        case CaseKind::Split:
            return QPoly::monomial(1, n) - QPoly::monomial(1, n - 1);
    }
    throw std::invalid_argument("unit_index: bad case");
}

CoeffSeries principal_part(CaseKind kind, long n, long K) {
    if (n < 0) throw std::invalid_argument("principal_part: negative n");
    if (K < 0) throw std::invalid_argument("principal_part: negative order");
    QPoly idx_n = unit_index(kind, n);
    CoeffSeries out;
    out.order = K;
    out.a.assign(static_cast<size_t>(K) + 1, QPoly());
    for (long d = 0; d < n && 2 * d <= K; ++d)
        out.a[static_cast<size_t>(2 * d)] = idx_n.divide_exact(unit_index(kind, n - d));
    CoeffSeries tail =
        series_div(XPoly::monomial(QPoly(1), 2 * n), v_factor(kind), K);
    for (long j = 0; j <= K; ++j)
        out.a[static_cast<size_t>(j)] =
            out.a[static_cast<size_t>(j)] + idx_n * tail.a[static_cast<size_t>(j)];
    return out;
}

ZetaNumerator solve_recurrence(CaseKind kind, long n) {
    if (n < 0) throw std::invalid_argument("solve_recurrence: negative n");
    XPoly V = v_factor(kind);
    XPoly X = XPoly::monomial(QPoly(1), 1);
    ZetaNumerator zn{kind, 0, XPoly(1)};
    validate_numerator(zn);
    for (long m = 1; m <= n; ++m) {
        XPoly top = XPoly::monomial(unit_index(kind, m), 2 * m);
        zn.P = V * qx2_partial_sum(m - 1) + top + X * zn.P;
        zn.n = m;
        validate_numerator(zn);
    }
    return zn;
}

bool check_functional_equation(const ZetaNumerator& zn) {
    try {
        return functional_transform(zn.P, zn.n) == zn.P;
    } catch (const inexact_division&) {
        return false;  // a power of q fails to divide: reflection leaves Z[q]
    }
}

CoeffSeries dirichlet_coeffs(CaseKind kind, long n, long K) {
    return series_div(closed_form(kind, n).P, v_factor(kind), K);
}

}  // namespace ozeta
