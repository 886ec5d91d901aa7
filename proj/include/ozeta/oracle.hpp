#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ozeta/algebra.hpp"

namespace ozeta {

/* Finite-index Z_p-sublattice of O_n in Hermite form: rows (p^a, b), (0, p^c)
 * in the basis {1, p^n D}, with 0 <= b < p^c.  Index = p^{a+c}.  Every
 * finite-index sublattice has exactly one such triple. */
struct HnfLattice {
    long a = 0;
    long c = 0;
    mpz_class b;
    long level = 0;
    const QuadraticSetup* setup = nullptr;

    long index_exp() const { return a + c; }
    OrderElement basis1() const;  // p^a + b p^n D
    OrderElement basis2() const;  // p^c p^n D

    // (u, w) is in the lattice iff p^a | u and p^c | (w - (u/p^a) b)
    bool contains(const mpz_class& u, const mpz_class& w) const;
    bool contains(const OrderElement& e) const;

    std::string str() const;  // "(a, c, b)"

    friend bool operator==(const HnfLattice& s, const HnfLattice& t) {
        return s.a == t.a && s.c == t.c && s.b == t.b && s.level == t.level;
    }
};

inline constexpr long kLatticeBudget = 10'000'000;

/* All index-p^k sublattices of O_n: (a, c, b) with a + c = k, 0 <= b < p^c.
 * There are sum_{c=0..k} p^c of them; throws budget_exceeded past the budget. */
std::vector<HnfLattice> enumerate_sublattices(const QuadraticSetup& s, long n, long k);

// O_n-ideal test: closure of both basis rows under multiplication by p^n D,
// (x, y) -> (-y p^{2n} delta, x + y p^n tau)
bool is_ideal(const HnfLattice& lat);

// precision ample for every valuation met while classifying an index-p^k ideal
inline long default_precision(long n, long k) { return k + 2 * n + 2; }

/* Element of the lattice whose valuation profile attains the componentwise
 * minimum over the lattice; one of v1, v2, v1+v2 always does (ties prefer v1
 * then v2).  Pre: is_ideal. */
OrderElement representative(const HnfLattice& lat, const TypeContext& ctx);
OrderElement representative(const HnfLattice& lat);

struct IdealRecord {
    HnfLattice lattice;
    long index_exp = 0;
    bool ideal = true;
    OrderElement rep;
    ElementType type;
    long multiplier = 0;  // the i with I = rep * O_i
    bool principal = false;
    bool low = false;  // type.min_val < type_threshold(kind, n)
};

IdealRecord classify(const HnfLattice& lat, const TypeContext& ctx);
IdealRecord classify(const HnfLattice& lat);

using TypeKey = std::vector<long>;

struct Census {
    long n = 0;
    long k = 0;
    long total = 0;
    long principal = 0;
    long nonprincipal = 0;
    std::map<TypeKey, long> principal_types;  // type -> count, principal only
    std::map<TypeKey, long> low_types;        // partition of principal_types
    std::map<TypeKey, long> high_types;
    std::map<long, long> multiplier_dist;     // multiplier i -> count, all ideals
};

Census ideal_census(const QuadraticSetup& s, long n, long k);

struct LowHighReport {
    Census census;
    bool low_types_allowed = true;  // every low type lies in the permitted set
    std::vector<TypeKey> forbidden;
};

/* Census plus the structural check on low principal types: the only permitted
 * low types are 2d (ramified), d (unramified), (d, d) (split) with d < n. */
LowHighReport low_high_census(const QuadraticSetup& s, long n, long k);

struct TransferCheck {
    long nonprincipal = 0;  // at (n, k)
    long prev_total = 0;    // all ideals at (n-1, k-1)
    bool ok = false;
};

/* Nonprincipal ideals of O_n at index exponent k are exactly p * J for the
 * ideals J of O_{n-1} at exponent k-1 (multiplication by p costs index q^2
 * against index q for the order drop).  k = 0 is vacuously true. */
TransferCheck transfer_check(const QuadraticSetup& s, long n, long k);

struct UnitQuotientCounts {
    long base_units = 0;   // |(O_0 / p^n O_0)^*|, counted over pairs
    long order_units = 0;  // |(O_n / p^n O_0)^*| = |(Z/p^n)^*|, counted
};

// brute-force unit counts in the two finite quotients; guard p^{2n} <= budget
UnitQuotientCounts unit_quotient_counts(const QuadraticSetup& s, long n);

/* Canonical form of the Z_p-span of two integer rows (unit row scalings and
 * row operations over the localization at p).  Throws if the span has not
 * full rank. */
HnfLattice p_hnf(const QuadraticSetup& s, long level,
                 std::pair<mpz_class, mpz_class> r1,
                 std::pair<mpz_class, mpz_class> r2);

// the lattice g * O_n; g must be a nonzerodivisor
HnfLattice principal_lattice(const OrderElement& g);

/* Test-only slow path: search all p^2 cosets of pI in I for a generator and
 * compare lattices directly — no valuation shortcut involved.  Whether g
 * generates depends only on g mod pI, since 1 + p*o is a unit of O_n.
 * Guarded to small p. */
bool slow_is_principal(const HnfLattice& lat);

}  // namespace ozeta
