#include "ozeta/poly.hpp"

#include "ozeta/numutil.hpp"

namespace ozeta {

namespace {

enum class PStyle { text, latex };

std::string exp_str(long e, PStyle st) {
    if (st == PStyle::latex && e >= 10) return "^{" + std::to_string(e) + "}";
    return "^" + std::to_string(e);
}

// |coeff| * q^e, coeff != 0:  "2q^3", "q", "5"
std::string qterm(const mpz_class& coeff, long e, PStyle st) {
    mpz_class a = abs(coeff);
    std::string s;
    if (a != 1 || e == 0) s += a.get_str();
    if (e > 0) {
        s += "q";
        if (e > 1) s += exp_str(e, st);
    }
    return s;
}

std::string qpoly_str(const QPoly& p, PStyle st) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long e = p.degree(); e >= 0; --e) {
        mpz_class c = p.coeff(e);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        out += qterm(c, e, st);
    }
    return out;
}

bool single_term_of(const QPoly& p, mpz_class& c, long& e) {
    int count = 0;
    for (long i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) != 0) {
            ++count;
            c = p.coeff(i);
            e = i;
        }
    }
    return count == 1;
}

std::string xpoly_str(const XPoly& P, PStyle st) {
    if (P.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long k = 0; k <= P.degree(); ++k) {
        QPoly c = P.coeff(k);
        if (c.is_zero()) continue;
        if (k == 0) {
            out += qpoly_str(c, st);
            first = false;
            continue;
        }
        std::string xpart = "X";
        if (k > 1) xpart += exp_str(k, st);
        mpz_class sc;
        long se = 0;
        if (single_term_of(c, sc, se)) {
            std::string mag = (abs(sc) == 1 && se == 0) ? "" : qterm(sc, se, st);
            std::string body = mag.empty()
                                   ? xpart
                                   : (st == PStyle::text ? mag + "*" + xpart : mag + xpart);
            if (first)
                out += (sc < 0 ? "-" : "") + body;
            else
                out += (sc < 0 ? " - " : " + ") + body;
        } else {
            std::string body = "(" + qpoly_str(c, st) + ")";
            body += (st == PStyle::text) ? "*" + xpart : xpart;
            out += first ? body : " + " + body;
        }
        first = false;
    }
    return out;
}

}  // namespace

QPoly QPoly::monomial(const mpz_class& coeff, long power) {
    if (power < 0) throw std::invalid_argument("QPoly::monomial: negative power");
    if (coeff == 0) return QPoly();
    std::vector<mpz_class> c(static_cast<size_t>(power) + 1, 0);
    c.back() = coeff;
    return QPoly(std::move(c));
}

bool QPoly::has_nonnegative_coeffs() const {
    for (const auto& c : c_)
        if (c < 0) return false;
    return true;
}

mpz_class QPoly::specialize(const mpz_class& q) const {
    mpz_class r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * q + c_[i];
    return r;
}

QPoly QPoly::times_q_power(long e) const {
    if (is_zero()) return QPoly();
    if (e >= 0) {
        std::vector<mpz_class> c(static_cast<size_t>(e), 0);
        c.insert(c.end(), c_.begin(), c_.end());
        return QPoly(std::move(c));
    }
    long drop = -e;
    if (degree() < drop)
        throw inexact_division("times_q_power: q^" + std::to_string(drop) +
                               " does not divide " + str());
    for (long i = 0; i < drop; ++i)
        if (c_[static_cast<size_t>(i)] != 0)
            throw inexact_division("times_q_power: q^" + std::to_string(drop) +
                                   " does not divide " + str());
    return QPoly(std::vector<mpz_class>(c_.begin() + drop, c_.end()));
}

QPoly QPoly::divide_exact(const QPoly& b) const {
    if (b.is_zero()) throw std::invalid_argument("QPoly::divide_exact: division by zero");
    if (is_zero()) return QPoly();
    if (degree() < b.degree())
        throw inexact_division("QPoly::divide_exact: degree too small");
    std::vector<mpz_class> rem = c_;
    const long db = b.degree();
    const long dq = degree() - db;
    std::vector<mpz_class> quot(static_cast<size_t>(dq) + 1, 0);
    const mpz_class lead = b.coeff(db);
    for (long i = dq; i >= 0; --i) {
        mpz_class top = rem[static_cast<size_t>(i + db)];
        if (top == 0) continue;
        if (!divisible(top, lead))
            throw inexact_division("QPoly::divide_exact: inexact leading division");
        mpz_class f = div_exact(top, lead);
        quot[static_cast<size_t>(i)] = f;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i + j)] -= f * b.coeff(j);
    }
    for (const auto& r : rem)
        if (r != 0) throw inexact_division("QPoly::divide_exact: nonzero remainder");
    return QPoly(std::move(quot));
}

QPoly QPoly::operator-() const {
    std::vector<mpz_class> c = c_;
    for (auto& x : c) x = -x;
    return QPoly(std::move(c));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(c));
}

QPoly operator*(const mpz_class& s, const QPoly& a) {
    std::vector<mpz_class> c = a.c_;
    for (auto& x : c) x *= s;
    return QPoly(std::move(c));
}

std::string QPoly::str() const { return qpoly_str(*this, PStyle::text); }

std::string QPoly::str_latex() const { return qpoly_str(*this, PStyle::latex); }

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

XPoly XPoly::monomial(const QPoly& coeff, long power) {
    if (power < 0) throw std::invalid_argument("XPoly::monomial: negative power");
    if (coeff.is_zero()) return XPoly();
    std::vector<QPoly> c(static_cast<size_t>(power) + 1);
    c.back() = coeff;
    return XPoly(std::move(c));
}

std::vector<mpz_class> XPoly::specialize(const mpz_class& q) const {
    std::vector<mpz_class> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].specialize(q);
    return out;
}

XPoly XPoly::operator-() const {
    std::vector<QPoly> c = c_;
    for (auto& x : c) x = -x;
    return XPoly(std::move(c));
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    std::vector<QPoly> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return XPoly(std::move(c));
}

XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly();
    std::vector<QPoly> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return XPoly(std::move(c));
}

std::string XPoly::str() const { return xpoly_str(*this, PStyle::text); }

std::string XPoly::str_latex() const { return xpoly_str(*this, PStyle::latex); }

std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << p.str(); }

std::vector<mpz_class> CoeffSeries::specialize(const mpz_class& q) const {
    std::vector<mpz_class> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i].specialize(q);
    return out;
}

CoeffSeries series_div(const XPoly& num, const XPoly& den, long K) {
    if (K < 0) throw std::invalid_argument("series_div: negative truncation order");
    if (den.coeff(0) != QPoly(1))
        throw std::invalid_argument("series_div: denominator constant term must be 1");
    CoeffSeries s;
    s.order = K;
    s.a.resize(static_cast<size_t>(K) + 1);
    for (long k = 0; k <= K; ++k) {
        QPoly v = num.coeff(k);
        long top = std::min(k, den.degree());
        for (long i = 1; i <= top; ++i)
            v = v - den.coeff(i) * s.a[static_cast<size_t>(k - i)];
        s.a[static_cast<size_t>(k)] = v;
    }
    return s;
}

XPoly functional_transform(const XPoly& P, long n) {
    if (n < 0) throw std::invalid_argument("functional_transform: negative n");
    if (P.degree() > 2 * n)
        throw std::invalid_argument("functional_transform: degree exceeds 2n");
    std::vector<QPoly> c(static_cast<size_t>(2 * n) + 1);
    for (long j = 0; j <= 2 * n; ++j)
        c[static_cast<size_t>(j)] = P.coeff(2 * n - j).times_q_power(j - n);
    return XPoly(std::move(c));
}

}  // namespace ozeta
