#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ozeta {

struct inexact_division : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* Polynomial in the residue-cardinality symbol q with integer coefficients.
 * Canonical form: no trailing zero coefficients; the zero polynomial is the
 * empty coefficient vector (degree -1). */
class QPoly {
public:
    QPoly() = default;
    QPoly(long c) { c_.assign(1, mpz_class(c)); trim(); }
    QPoly(const mpz_class& c) { c_.assign(1, c); trim(); }
    explicit QPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly monomial(const mpz_class& coeff, long power);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for 0
    mpz_class coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool has_nonnegative_coeffs() const;

    mpz_class specialize(const mpz_class& q) const;

    // multiply by q^e; for e < 0 the division must be exact (throws inexact_division)
    QPoly times_q_power(long e) const;

    // exact polynomial quotient; throws inexact_division if b does not divide *this in Z[q]
    QPoly divide_exact(const QPoly& b) const;

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const mpz_class& s, const QPoly& a);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    // human-readable, descending powers: "q^2 - q", "2q + 1"
    std::string str() const;
    std::string str_latex() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;  // c_[i] = coefficient of q^i
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

/* Polynomial in X (the variable q^{-s}, resp. t) with QPoly coefficients. */
class XPoly {
public:
    XPoly() = default;
    XPoly(long c) : XPoly(QPoly(c)) {}
    XPoly(const QPoly& c) {
        if (!c.is_zero()) c_.assign(1, c);
    }
    explicit XPoly(std::vector<QPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

    static XPoly monomial(const QPoly& coeff, long power);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    QPoly coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return QPoly();
        return c_[static_cast<size_t>(i)];
    }
    QPoly leading() const { return c_.empty() ? QPoly() : c_.back(); }
    const std::vector<QPoly>& coeffs() const { return c_; }

    std::vector<mpz_class> specialize(const mpz_class& q) const;

    XPoly operator-() const;
    friend XPoly operator+(const XPoly& a, const XPoly& b);
    friend XPoly operator-(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    // ascending powers of X: "1 - X + q*X^2"
    std::string str() const;
    // same but TeX-flavored: "1 - X + qX^2", braces on exponents past 9
    std::string str_latex() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<QPoly> c_;  // c_[i] = coefficient of X^i
};

std::ostream& operator<<(std::ostream& os, const XPoly& p);

/* Truncated power series: exactly order+1 coefficients a_0 .. a_order. */
struct CoeffSeries {
    long order = 0;
    std::vector<QPoly> a;  // a.size() == order + 1

    QPoly coeff(long i) const {
        if (i < 0 || i > order) throw std::invalid_argument("CoeffSeries: index out of range");
        return a[static_cast<size_t>(i)];
    }
    std::vector<mpz_class> specialize(const mpz_class& q) const;

    friend bool operator==(const CoeffSeries& x, const CoeffSeries& y) {
        return x.order == y.order && x.a == y.a;
    }
};

/* First K+1 coefficients of num/den as a power series in X.
 * Requires den(0) == 1 so every step stays in Z[q]. */
CoeffSeries series_div(const XPoly& num, const XPoly& den, long K);

/* Index reflection: coefficient j of the result is q^{j-n} * coeff_{2n-j}(P),
 * i.e. the polynomial (qX^2)^n P(1/(qX)).  For j < n the division by q^{n-j}
 * must be exact in Z[q]; otherwise throws inexact_division.
 * Applying it twice returns the input.  Requires deg P <= 2n. */
XPoly functional_transform(const XPoly& P, long n);

}  // namespace ozeta
