#include "ozeta/algebra.hpp"

#include <stdexcept>

#include "ozeta/numutil.hpp"

namespace ozeta {

namespace {

mpz_class powm(const mpz_class& b, const mpz_class& e, const mpz_class& m) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

void check_compat(const OrderElement& a, const OrderElement& b) {
    if (!a.setup || !b.setup)
        throw std::invalid_argument("OrderElement: missing setup");
    if (a.level != b.level)
        throw std::invalid_argument("OrderElement: level mismatch");
    if (!(*a.setup == *b.setup))
        throw std::invalid_argument("OrderElement: setup mismatch");
}

}  // namespace

std::string to_string(CaseKind k) {
    switch (k) {
        case CaseKind::Ramified: return "ramified";
        case CaseKind::Unramified: return "unramified";
        case CaseKind::Split: return "split";
    }
    return "?";
}

std::optional<CaseKind> parse_case(const std::string& s) {
    if (s == "ramified") return CaseKind::Ramified;
    if (s == "unramified") return CaseKind::Unramified;
    if (s == "split") return CaseKind::Split;
    return std::nullopt;
}

QuadraticSetup QuadraticSetup::make(const mpz_class& p, const mpz_class& tau,
                                    const mpz_class& delta) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("QuadraticSetup: p must be an odd prime");
    QuadraticSetup s;
    s.p = p;
    s.q = p;
    s.tau = tau;
    s.delta = delta;
    s.disc = tau * tau - 4 * delta;
    if (s.disc == 0)
        throw std::invalid_argument("QuadraticSetup: discriminant is zero");
    long v = p_valuation(s.disc, p);
    if (v == 0) {
        s.kind = (mpz_legendre(s.disc.get_mpz_t(), p.get_mpz_t()) == 1)
                     ? CaseKind::Split
                     : CaseKind::Unramified;
    } else if (v == 1) {
        s.kind = CaseKind::Ramified;
    } else {
        throw std::invalid_argument(
            "QuadraticSetup: val_p(disc) > 1, D does not generate the maximal order");
    }
    return s;
}

QuadraticSetup QuadraticSetup::preset(CaseKind kind, const mpz_class& p) {
    QuadraticSetup s;
    switch (kind) {
        case CaseKind::Ramified: s = make(p, 0, -p); break;
        case CaseKind::Unramified: s = make(p, 0, -smallest_nonresidue(p)); break;
        case CaseKind::Split: s = make(p, 1, 0); break;
    }
    if (s.kind != kind) throw std::logic_error("preset: classification mismatch");
    return s;
}

mpz_class smallest_nonresidue(const mpz_class& p) {
    for (mpz_class u = 2;; ++u)
        if (mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == -1) return u;
}

mpz_class sqrt_mod(const mpz_class& a0, const mpz_class& p) {
    mpz_class a = mod_reduce(a0, p);
    if (a == 0) return 0;
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1)
        throw std::invalid_argument("sqrt_mod: not a quadratic residue");
    if (mod_reduce(p, 4) == 3) return powm(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    mpz_class Q = p - 1;
    long S = 0;
    while (mpz_even_p(Q.get_mpz_t())) {
        Q /= 2;
        ++S;
    }
    mpz_class z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    long m = S;
    mpz_class c = powm(z, Q, p);
    mpz_class t = powm(a, Q, p);
    mpz_class r = powm(a, (Q + 1) / 2, p);
    while (t != 1) {
        long i = 0;
        mpz_class t2 = t;
        while (t2 != 1) {
            t2 = mod_reduce(t2 * t2, p);
            ++i;
        }
        mpz_class b = c;
        for (long j = 0; j < m - i - 1; ++j) b = mod_reduce(b * b, p);
        m = i;
        c = mod_reduce(b * b, p);
        t = mod_reduce(t * c, p);
        r = mod_reduce(r * b, p);
    }
    return r;
}

OrderElement::OrderElement(mpz_class x_, mpz_class y_, long level_,
                           const QuadraticSetup& s)
    : x(std::move(x_)), y(std::move(y_)), level(level_), setup(&s) {
    if (level_ < 0) throw std::invalid_argument("OrderElement: negative level");
}

std::string OrderElement::str() const {
    return "(" + x.get_str() + ", " + y.get_str() + ")@" + std::to_string(level);
}

OrderElement operator+(const OrderElement& a, const OrderElement& b) {
    check_compat(a, b);
    return OrderElement(a.x + b.x, a.y + b.y, a.level, *a.setup);
}

OrderElement operator*(const OrderElement& a, const OrderElement& b) {
    check_compat(a, b);
    const QuadraticSetup& s = *a.setup;
    mpz_class pn = pow_int(s.p, a.level);
    mpz_class x = a.x * b.x - a.y * b.y * pn * pn * s.delta;
    mpz_class y = a.x * b.y + b.x * a.y + a.y * b.y * pn * s.tau;
    return OrderElement(std::move(x), std::move(y), a.level, s);
}

bool operator==(const OrderElement& a, const OrderElement& b) {
    return a.x == b.x && a.y == b.y && a.level == b.level;
}

mpz_class norm(const OrderElement& a) {
    if (!a.setup) throw std::invalid_argument("norm: missing setup");
    const QuadraticSetup& s = *a.setup;
    mpz_class pn = pow_int(s.p, a.level);
    return a.x * a.x + pn * a.x * a.y * s.tau + pn * pn * a.y * a.y * s.delta;
}

bool is_unit(const OrderElement& a) {
    if (!a.setup) throw std::invalid_argument("is_unit: missing setup");
    if (a.level >= 1) return !divisible(a.x, a.setup->p);
    return !divisible(norm(a), a.setup->p);
}

namespace {

// Newton lift of a simple root of X^2 - tau X + delta from mod p to mod p^M;
// the derivative 2r - tau is a unit because the two roots are distinct mod p.
mpz_class lift_root(mpz_class r, const QuadraticSetup& s, long M) {
    long prec = 1;
    while (prec < M) {
        long next = std::min(2 * prec, M);
        mpz_class mod = pow_int(s.p, next);
        mpz_class fr = mod_reduce(r * r - s.tau * r + s.delta, mod);
        mpz_class inv = mod_inverse(mod_reduce(2 * r - s.tau, mod), mod);
        r = mod_reduce(r - fr * inv, mod);
        prec = next;
    }
    return r;
}

}  // namespace

std::pair<mpz_class, mpz_class> split_roots(const QuadraticSetup& s, long M) {
    if (s.kind != CaseKind::Split)
        throw std::invalid_argument("split_roots: setup is not split");
    if (M < 1) throw std::invalid_argument("split_roots: M must be >= 1");
    mpz_class sq = sqrt_mod(s.disc, s.p);
    mpz_class r0 = mod_reduce((s.tau + sq) * mod_inverse(2, s.p), s.p);
    mpz_class modulus = pow_int(s.p, M);
    mpz_class r1 = lift_root(r0, s, M);
    mpz_class r2 = mod_reduce(s.tau - r1, modulus);
    if (mod_reduce(r1 * r1 - s.tau * r1 + s.delta, modulus) != 0 ||
        mod_reduce(r2 * r2 - s.tau * r2 + s.delta, modulus) != 0 ||
        mod_reduce(r1 - r2, s.p) == 0)
        throw std::logic_error("split_roots: lift failed");
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
}

long type_threshold(CaseKind kind, long n) {
    return kind == CaseKind::Ramified ? 2 * n : n;
}

long type_index_exponent(CaseKind kind, const ElementType& t) {
    switch (kind) {
        case CaseKind::Ramified: return t.coords.at(0);
        case CaseKind::Unramified: return 2 * t.coords.at(0);
        case CaseKind::Split: return t.coords.at(0) + t.coords.at(1);
    }
    return 0;
}

TypeContext::TypeContext(const QuadraticSetup& s, long M) : setup_(&s), M_(M) {
    if (M < 1) throw std::invalid_argument("TypeContext: M must be >= 1");
    modulus_ = pow_int(s.p, M);
    if (s.kind == CaseKind::Split) roots_ = split_roots(s, M);
}

TypeContext::Profile TypeContext::profile(const OrderElement& a) const {
    if (a.is_zero())
        throw std::invalid_argument("element type: zero element has no type");
    if (!a.setup || !(*a.setup == *setup_))
        throw std::invalid_argument("element type: setup mismatch");
    const QuadraticSetup& s = *setup_;
    mpz_class N = norm(a);
    Profile pr;
    if (s.kind != CaseKind::Split) {
        if (N == 0) throw std::logic_error("element type: zero norm in a field");
        long v = p_valuation(N, s.p);
        if (s.kind == CaseKind::Unramified) {
            if (v % 2 != 0)
                throw std::logic_error("element type: odd norm valuation, unramified");
            v /= 2;
        }
        if (v >= M_)
            throw precision_exceeded("element type: valuation " + std::to_string(v) +
                                     " reaches precision " + std::to_string(M_));
        pr.count = 1;
        pr.v[0] = v;
        return pr;
    }
    mpz_class pn = pow_int(s.p, a.level);
    mpz_class c1 = mod_reduce(a.x + a.y * pn * roots_.first, modulus_);
    mpz_class c2 = mod_reduce(a.x + a.y * pn * roots_.second, modulus_);
    pr.count = 2;
    if (N == 0) {
        // exactly one embedding is zero (both zero would mean a == 0)
        if (c1 == 0 && c2 == 0)
            throw precision_exceeded(
                "element type: cannot locate the zero embedding at precision " +
                std::to_string(M_));
        if (c1 != 0 && c2 != 0)
            throw std::logic_error("element type: zero norm but nonzero residues");
        if (c1 == 0)
            pr.v[1] = p_valuation(c2, s.p);
        else
            pr.v[0] = p_valuation(c1, s.p);
        return pr;
    }
    if (c1 == 0 || c2 == 0)
        throw precision_exceeded("element type: embedding valuation reaches precision " +
                                 std::to_string(M_));
    long v1 = p_valuation(c1, s.p);
    long v2 = p_valuation(c2, s.p);
    if (v1 + v2 != p_valuation(N, s.p))
        throw std::logic_error("element type: embedding valuations do not add to norm valuation");
    pr.v[0] = v1;
    pr.v[1] = v2;
    return pr;
}

std::optional<ElementType> TypeContext::type(const OrderElement& a) const {
    Profile pr = profile(a);
    ElementType t;
    for (int i = 0; i < pr.count; ++i) {
        if (!pr.v[i]) return std::nullopt;  // nonzero zero divisor
        t.coords.push_back(*pr.v[i]);
    }
    t.min_val = t.coords[0];
    for (long c : t.coords) t.min_val = std::min(t.min_val, c);
    return t;
}

std::optional<ElementType> element_type(const OrderElement& a, long M) {
    if (!a.setup) throw std::invalid_argument("element_type: missing setup");
    return TypeContext(*a.setup, M).type(a);
}

}  // namespace ozeta
