#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ozeta {

enum class CaseKind { Ramified, Unramified, Split };

std::string to_string(CaseKind k);
std::optional<CaseKind> parse_case(const std::string& s);

/* The quadratic algebra L = K[D]/(D^2 - tau*D + delta) over K = Q_p, p an odd
 * prime, with D generating the maximal order over Z_p.  The discriminant
 * disc = tau^2 - 4*delta classifies it:
 *   val_p(disc) = 0, disc a square mod p  -> Split       (L = K x K)
 *   val_p(disc) = 0, disc a nonsquare     -> Unramified  (residue degree 2)
 *   val_p(disc) = 1                       -> Ramified    (ramification index 2)
 * Any other (tau, delta) is rejected.  q is the residue cardinality; in this
 * concrete setting q = p always.
 */
struct QuadraticSetup {
    mpz_class p;
    mpz_class q;  // == p
    mpz_class tau;
    mpz_class delta;
    mpz_class disc;
    CaseKind kind;

    static QuadraticSetup make(const mpz_class& p, const mpz_class& tau,
                               const mpz_class& delta);

    // ramified: tau=0, delta=-p; unramified: tau=0, delta=-(smallest nonresidue);
    // split: tau=1, delta=0 (so D is the idempotent (0,1) of K x K)
    static QuadraticSetup preset(CaseKind kind, const mpz_class& p);

    friend bool operator==(const QuadraticSetup& a, const QuadraticSetup& b) {
        return a.p == b.p && a.tau == b.tau && a.delta == b.delta;
    }
};

mpz_class smallest_nonresidue(const mpz_class& p);

// square root mod an odd prime; a must be a quadratic residue
mpz_class sqrt_mod(const mpz_class& a, const mpz_class& p);

/* Element x + y * p^n * D of the level-n order O_n = Z_p[p^n D], kept as the
 * exact integer pair (x, y).  The level n and the setup ride along. */
struct OrderElement {
    mpz_class x;
    mpz_class y;
    long level = 0;
    const QuadraticSetup* setup = nullptr;

    OrderElement() = default;
    OrderElement(mpz_class x_, mpz_class y_, long level_, const QuadraticSetup& s);

    bool is_zero() const { return x == 0 && y == 0; }
    std::string str() const;

    friend OrderElement operator+(const OrderElement& a, const OrderElement& b);
    // (x1 x2 - y1 y2 p^{2n} delta) + (x1 y2 + x2 y1 + y1 y2 p^n tau) p^n D
    friend OrderElement operator*(const OrderElement& a, const OrderElement& b);
    friend bool operator==(const OrderElement& a, const OrderElement& b);
};

// N(x + y p^n D) = x^2 + p^n x y tau + p^{2n} y^2 delta (exact integer)
mpz_class norm(const OrderElement& a);

// units of O_n: for n >= 1, val_p(x) = 0; for n = 0, val_p(norm) = 0
bool is_unit(const OrderElement& a);

/* The two roots of X^2 - tau X + delta in Z/p^M (split case only), Hensel-lifted
 * from the distinct roots mod p.  Returned in ascending order of their canonical
 * representative in [0, p^M).  M >= 1. */
std::pair<mpz_class, mpz_class> split_roots(const QuadraticSetup& s, long M);

/* Valuation type of a nonzero element.
 * Nonsplit: one coordinate, the normalized valuation val_pi
 *   (ramified: val_p(norm); unramified: val_p(norm)/2).
 * Split: two coordinates, the p-valuations of the images under the two
 *   embeddings x + y p^n D_i, computed at precision M.
 * min_val is the smallest coordinate. */
struct ElementType {
    std::vector<long> coords;
    long min_val = 0;

    friend bool operator==(const ElementType& a, const ElementType& b) {
        return a.coords == b.coords;
    }
};

/* Type of a, or nullopt when a is a nonzero zero divisor (split case, one
 * embedding exactly zero — detected exactly via norm == 0).
 * Throws std::invalid_argument on the zero element and precision_exceeded when
 * any computed valuation would reach M. */
std::optional<ElementType> element_type(const OrderElement& a, long M);

// level-n threshold separating low from high types: 2n ramified, n otherwise
long type_threshold(CaseKind kind, long n);

// index exponent contributed by a type: val_p[O_n : I] for I of type w
// (ramified: w; unramified: 2w; split: w1 + w2)
long type_index_exponent(CaseKind kind, const ElementType& t);

/* Precision-M valuation workspace: caches p^M and, in the split case, the
 * Hensel roots, so census loops do not re-lift per element. */
class TypeContext {
public:
    TypeContext(const QuadraticSetup& s, long M);

    long precision() const { return M_; }

    // per-embedding valuations; nullopt marks an exactly-zero coordinate
    struct Profile {
        int count = 1;
        std::array<std::optional<long>, 2> v;

        friend bool operator==(const Profile& a, const Profile& b) {
            return a.count == b.count && a.v == b.v;
        }
    };

    Profile profile(const OrderElement& a) const;
    std::optional<ElementType> type(const OrderElement& a) const;

private:
    const QuadraticSetup* setup_;
    long M_;
    mpz_class modulus_;                             // p^M
    std::pair<mpz_class, mpz_class> roots_{0, 0};   // split only
};

}  // namespace ozeta
