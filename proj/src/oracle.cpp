#include "ozeta/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "ozeta/numutil.hpp"

namespace ozeta {

OrderElement HnfLattice::basis1() const {
    return OrderElement(pow_int(setup->p, a), b, level, *setup);
}

OrderElement HnfLattice::basis2() const {
    return OrderElement(0, pow_int(setup->p, c), level, *setup);
}

bool HnfLattice::contains(const mpz_class& u, const mpz_class& w) const {
    mpz_class pa = pow_int(setup->p, a);
    if (!divisible(u, pa)) return false;
    mpz_class rest = w - div_exact(u, pa) * b;
    return divisible(rest, pow_int(setup->p, c));
}

bool HnfLattice::contains(const OrderElement& e) const { return contains(e.x, e.y); }

std::string HnfLattice::str() const {
    return "(" + std::to_string(a) + ", " + std::to_string(c) + ", " + b.get_str() + ")";
}

std::vector<HnfLattice> enumerate_sublattices(const QuadraticSetup& s, long n, long k) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("enumerate_sublattices: negative n or k");
    mpz_class count = 0;
    for (long c = 0; c <= k; ++c) count += pow_int(s.p, c);
    if (count > kLatticeBudget)
        throw budget_exceeded("enumerate_sublattices: " + count.get_str() +
                              " lattices exceeds budget " + std::to_string(kLatticeBudget));
    std::vector<HnfLattice> out;
    out.reserve(count.get_ui());
    for (long c = 0; c <= k; ++c) {
        mpz_class pc = pow_int(s.p, c);
        for (mpz_class b = 0; b < pc; ++b)
            out.push_back(HnfLattice{k - c, c, b, n, &s});
    }
    return out;
}

bool is_ideal(const HnfLattice& lat) {
    // O_n = Z_p + Z_p (p^n D), so closure under the generator p^n D suffices
    OrderElement gen(0, 1, lat.level, *lat.setup);
    return lat.contains(lat.basis1() * gen) && lat.contains(lat.basis2() * gen);
}

namespace {

std::optional<long> opt_min(std::optional<long> a, std::optional<long> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

}  // namespace

OrderElement representative(const HnfLattice& lat, const TypeContext& ctx) {
    OrderElement e1 = lat.basis1(), e2 = lat.basis2();
    TypeContext::Profile p1 = ctx.profile(e1), p2 = ctx.profile(e2);
    TypeContext::Profile target = p1;
    for (int j = 0; j < target.count; ++j) {
        target.v[j] = opt_min(p1.v[j], p2.v[j]);
        if (!target.v[j])
            throw std::logic_error("representative: lattice not of full rank");
    }
    if (p1 == target) return e1;
    if (p2 == target) return e2;
    // the minima come from different rows with distinct valuations, so the sum
    // attains both (ultrametric equality)
    OrderElement e3 = e1 + e2;
    if (!(ctx.profile(e3) == target))
        throw std::logic_error("representative: v1+v2 misses the minimal profile");
    return e3;
}

OrderElement representative(const HnfLattice& lat) {
    TypeContext ctx(*lat.setup, default_precision(lat.level, lat.index_exp()));
    return representative(lat, ctx);
}

/* Why the norm decides everything here.  Multiplication by a nonzerodivisor g
 * is an injective linear map on the rank-2 module O_n with determinant N(g),
 * so [O_n : g O_n] = q^{val_p N(g)}.  A componentwise-minimal element x of an
 * ideal I satisfies I = x * O_i for exactly one i in [0, n] (dividing out x
 * turns the minimality into a sublattice of O_0 containing 1 whose D-part
 * spans p^i Z_p).  Comparing indices,
 *     q^k = [O_n : I] = [O_n : x O_n] / [x O_i : x O_n]
 *         = q^{val N(x)} / q^{n-i},
 * gives i = k - val_p N(x) + n, and I is principal as an O_n-ideal iff i = n,
 * i.e. iff val_p N(x) = k.  slow_is_principal below re-derives principality
 * with no norms at all, by exhibiting a generator. */
IdealRecord classify(const HnfLattice& lat, const TypeContext& ctx) {
    if (!is_ideal(lat)) throw std::invalid_argument("classify: not an ideal");
    const QuadraticSetup& s = *lat.setup;
    long n = lat.level, k = lat.index_exp();
    IdealRecord rec;
    rec.lattice = lat;
    rec.index_exp = k;
    rec.ideal = true;
    rec.rep = representative(lat, ctx);
    mpz_class N = norm(rec.rep);
    if (N == 0) throw std::logic_error("classify: representative is a zero divisor");
    long valN = p_valuation(N, s.p);
    rec.multiplier = k - valN + n;
    if (rec.multiplier < 0 || rec.multiplier > n)
        throw std::logic_error("classify: multiplier index " +
                               std::to_string(rec.multiplier) + " outside [0, n]");
    rec.principal = (rec.multiplier == n);
    std::optional<ElementType> t = ctx.type(rec.rep);
    if (!t) throw std::logic_error("classify: representative has no type");
    rec.type = *t;
    rec.low = rec.type.min_val < type_threshold(s.kind, n);
    return rec;
}

IdealRecord classify(const HnfLattice& lat) {
    TypeContext ctx(*lat.setup, default_precision(lat.level, lat.index_exp()));
    return classify(lat, ctx);
}

Census ideal_census(const QuadraticSetup& s, long n, long k) {
    TypeContext ctx(s, default_precision(n, k));
    Census census;
    census.n = n;
    census.k = k;
    for (const HnfLattice& lat : enumerate_sublattices(s, n, k)) {
        if (!is_ideal(lat)) continue;
        IdealRecord rec = classify(lat, ctx);
        ++census.total;
        ++census.multiplier_dist[rec.multiplier];
        if (rec.principal) {
            ++census.principal;
            ++census.principal_types[rec.type.coords];
            if (rec.low)
                ++census.low_types[rec.type.coords];
            else
                ++census.high_types[rec.type.coords];
        } else {
            ++census.nonprincipal;
        }
    }
    return census;
}

LowHighReport low_high_census(const QuadraticSetup& s, long n, long k) {
    LowHighReport rep;
    rep.census = ideal_census(s, n, k);
    for (const auto& [key, cnt] : rep.census.low_types) {
        bool allowed = false;
        switch (s.kind) {
            case CaseKind::Ramified:
                allowed = key.size() == 1 && key[0] % 2 == 0 && key[0] / 2 < n;
                break;
            case CaseKind::Unramified:
                allowed = key.size() == 1 && key[0] < n;
                break;
            case CaseKind::Split:
                allowed = key.size() == 2 && key[0] == key[1] && key[0] < n;
                break;
        }
        if (!allowed) {
            rep.low_types_allowed = false;
            rep.forbidden.push_back(key);
        }
    }
    return rep;
}

TransferCheck transfer_check(const QuadraticSetup& s, long n, long k) {
    if (n < 1) throw std::invalid_argument("transfer_check: n must be >= 1");
    if (k < 0) throw std::invalid_argument("transfer_check: negative k");
    TransferCheck tc;
    if (k == 0) {  // O_n itself is principal; nothing to match
        tc.ok = true;
        return tc;
    }
    tc.nonprincipal = ideal_census(s, n, k).nonprincipal;
    tc.prev_total = ideal_census(s, n - 1, k - 1).total;
    tc.ok = (tc.nonprincipal == tc.prev_total);
    return tc;
}

UnitQuotientCounts unit_quotient_counts(const QuadraticSetup& s, long n) {
    if (n < 1) throw std::invalid_argument("unit_quotient_counts: n must be >= 1");
    mpz_class cells = pow_int(s.p, 2 * n);
    if (cells > kLatticeBudget)
        throw budget_exceeded("unit_quotient_counts: p^{2n} = " + cells.get_str() +
                              " exceeds budget " + std::to_string(kLatticeBudget));
    // p^{2n} <= budget keeps p^n (and p) comfortably inside long
    long pn = static_cast<long>(pow_int(s.p, n).get_si());
    long p = static_cast<long>(s.p.get_si());
    long taum = static_cast<long>(mod_reduce(s.tau, s.p).get_si());
    long deltam = static_cast<long>(mod_reduce(s.delta, s.p).get_si());
    UnitQuotientCounts uc;
    // x + y D is a unit of O_0 iff its norm x^2 + tau x y + delta y^2 is prime
    // to p, and that only depends on x, y mod p
    for (long x = 0; x < pn; ++x) {
        long xr = x % p;
        for (long y = 0; y < pn; ++y) {
            long yr = y % p;
            long N = (xr * xr + taum * xr * yr + deltam * yr * yr) % p;
            if (N != 0) ++uc.base_units;
        }
    }
    for (long x = 0; x < pn; ++x)
        if (x % p != 0) ++uc.order_units;
    return uc;
}

HnfLattice p_hnf(const QuadraticSetup& s, long level,
                 std::pair<mpz_class, mpz_class> r1,
                 std::pair<mpz_class, mpz_class> r2) {
    auto& [u1, w1] = r1;
    auto& [u2, w2] = r2;
    if (u1 == 0 && u2 == 0)
        throw std::invalid_argument("p_hnf: first coordinate identically zero");
    if (u1 == 0 || (u2 != 0 && p_valuation(u2, s.p) < p_valuation(u1, s.p))) {
        std::swap(u1, u2);
        std::swap(w1, w2);
    }
    long a = p_valuation(u1, s.p);
    mpz_class pa = pow_int(s.p, a);
    mpz_class u1s = div_exact(u1, pa);  // unit part of the pivot
    mpz_class w2p = (u2 == 0) ? w2 : u1s * w2 - div_exact(u2, pa) * w1;
    if (w2p == 0) throw std::invalid_argument("p_hnf: rank < 2");
    long c = p_valuation(w2p, s.p);
    mpz_class b = 0;
    if (c > 0) {
        mpz_class pc = pow_int(s.p, c);
        b = mod_reduce(w1 * mod_inverse(mod_reduce(u1s, pc), pc), pc);
    }
    return HnfLattice{a, c, b, level, &s};
}

HnfLattice principal_lattice(const OrderElement& g) {
    if (!g.setup) throw std::invalid_argument("principal_lattice: missing setup");
    if (norm(g) == 0)
        throw std::invalid_argument("principal_lattice: zero divisor generates no full-rank lattice");
    OrderElement gen(0, 1, g.level, *g.setup);
    OrderElement gD = g * gen;
    return p_hnf(*g.setup, g.level, {g.x, g.y}, {gD.x, gD.y});
}

bool slow_is_principal(const HnfLattice& lat) {
    const QuadraticSetup& s = *lat.setup;
    if (!is_ideal(lat)) throw std::invalid_argument("slow_is_principal: not an ideal");
    if (s.p > 1000)
        throw budget_exceeded("slow_is_principal: p^2 generator cosets too many at p = " +
                              s.p.get_str());
    OrderElement e1 = lat.basis1(), e2 = lat.basis2();
    for (mpz_class c1 = 0; c1 < s.p; ++c1) {
        for (mpz_class c2 = 0; c2 < s.p; ++c2) {
            OrderElement g(c1 * e1.x + c2 * e2.x, c1 * e1.y + c2 * e2.y, lat.level, s);
            if (g.is_zero() || norm(g) == 0) continue;
            if (principal_lattice(g) == lat) return true;
        }
    }
    return false;
}

}  // namespace ozeta
