#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ozeta {

// Loud failure when a p-adic computation would need more digits than the
// caller's stated precision.  Never degrade to "valuation >= M" silently.
struct precision_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Loud failure when an enumeration would exceed its documented budget.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline mpz_class pow_int(const mpz_class& base, long e) {
    if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// v != 0 required.  Number of times p divides v.
inline long p_valuation(const mpz_class& v, const mpz_class& p) {
    if (v == 0) throw std::invalid_argument("p_valuation: zero argument");
    mpz_class rest;
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()));
}

// nullopt encodes valuation of 0 (i.e. +infinity).
inline std::optional<long> p_valuation_opt(const mpz_class& v, const mpz_class& p) {
    if (v == 0) return std::nullopt;
    return p_valuation(v, p);
}

// Canonical representative of a mod m in [0, m), m > 0.
inline mpz_class mod_reduce(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::invalid_argument("mod_inverse: not invertible");
    return r;
}

inline bool divisible(const mpz_class& a, const mpz_class& d) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline mpz_class div_exact(const mpz_class& a, const mpz_class& d) {
    if (!divisible(a, d)) throw std::invalid_argument("div_exact: not divisible");
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

inline bool is_odd_prime(const mpz_class& p) {
    if (p <= 2 || mpz_even_p(p.get_mpz_t())) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

}  // namespace ozeta
