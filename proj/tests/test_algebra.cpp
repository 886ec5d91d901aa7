#include <doctest.h>

#include <random>

#include "ozeta/algebra.hpp"
#include "ozeta/numutil.hpp"

using namespace ozeta;

TEST_CASE("setup classification") {
    CHECK(QuadraticSetup::make(3, 0, -3).kind == CaseKind::Ramified);
    CHECK(QuadraticSetup::make(3, 0, -2).kind == CaseKind::Unramified);  // disc 8
    CHECK(QuadraticSetup::make(3, 1, 0).kind == CaseKind::Split);        // disc 1
    CHECK(QuadraticSetup::make(3, 0, -1).kind == CaseKind::Split);       // disc 4
    CHECK(QuadraticSetup::make(5, 0, -2).kind == CaseKind::Unramified);  // disc 8 = 3 mod 5
    CHECK(QuadraticSetup::make(7, 3, 1).kind == CaseKind::Unramified);   // disc 5, nonresidue
    CHECK(QuadraticSetup::make(7, 3, 2).kind == CaseKind::Split);        // disc 1
    CHECK(QuadraticSetup::make(5, 5, 5).kind == CaseKind::Ramified);     // disc 5

    CHECK_THROWS_AS(QuadraticSetup::make(2, 1, 0), std::invalid_argument);   // p even
    CHECK_THROWS_AS(QuadraticSetup::make(9, 1, 0), std::invalid_argument);   // p composite
    CHECK_THROWS_AS(QuadraticSetup::make(-3, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticSetup::make(3, 2, 1), std::invalid_argument);   // disc 0
    CHECK_THROWS_AS(QuadraticSetup::make(3, 0, -9), std::invalid_argument);  // disc val 2
    CHECK_THROWS_AS(QuadraticSetup::make(5, 0, 0), std::invalid_argument);
}

TEST_CASE("presets") {
    QuadraticSetup r3 = QuadraticSetup::preset(CaseKind::Ramified, 3);
    CHECK(r3 == QuadraticSetup::make(3, 0, -3));
    CHECK(r3.q == 3);
    QuadraticSetup u3 = QuadraticSetup::preset(CaseKind::Unramified, 3);
    CHECK(u3.tau == 0);
    CHECK(u3.delta == -2);  // 2 is the least nonresidue mod 3
    CHECK(QuadraticSetup::preset(CaseKind::Unramified, 5).delta == -2);
    CHECK(QuadraticSetup::preset(CaseKind::Unramified, 7).delta == -3);
    QuadraticSetup s5 = QuadraticSetup::preset(CaseKind::Split, 5);
    CHECK(s5.tau == 1);
    CHECK(s5.delta == 0);
    CHECK(s5.kind == CaseKind::Split);
    CHECK_THROWS_AS(QuadraticSetup::preset(CaseKind::Split, 4), std::invalid_argument);
}

TEST_CASE("case names") {
    CHECK(to_string(CaseKind::Ramified) == "ramified");
    CHECK(parse_case("unramified") == CaseKind::Unramified);
    CHECK(parse_case("split") == CaseKind::Split);
    CHECK_FALSE(parse_case("Split").has_value());
    CHECK_FALSE(parse_case("inert").has_value());
}

TEST_CASE("number helpers") {
    CHECK(smallest_nonresidue(3) == 2);
    CHECK(smallest_nonresidue(7) == 3);
    CHECK(smallest_nonresidue(11) == 2);
    CHECK(pow_int(3, 4) == 81);
    CHECK(p_valuation(54, 3) == 3);
    CHECK(p_valuation(-9, 3) == 2);
    CHECK_THROWS_AS(p_valuation(0, 3), std::invalid_argument);
    CHECK_FALSE(p_valuation_opt(0, 3).has_value());
    CHECK(p_valuation_opt(12, 2) == 2);
    CHECK(mod_reduce(-1, 5) == 4);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK_THROWS_AS(mod_inverse(3, 9), std::invalid_argument);
    CHECK(div_exact(12, 4) == 3);
    CHECK_THROWS_AS(div_exact(12, 5), std::invalid_argument);
    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(97));
    CHECK_FALSE(is_odd_prime(2));
    CHECK_FALSE(is_odd_prime(91));  // 7 * 13
    for (mpz_class a = 0; a < 13; ++a) {
        mpz_class sq = mod_reduce(a * a, 13);
        if (sq == 0) continue;
        mpz_class r = sqrt_mod(sq, 13);
        CHECK(mod_reduce(r * r, 13) == sq);
    }
    CHECK(mod_reduce(sqrt_mod(2, 7) * sqrt_mod(2, 7), 7) == 2);  // p = 3 mod 4 path
    CHECK(mod_reduce(sqrt_mod(4, 13) * sqrt_mod(4, 13), 13) == 4);  // p = 1 mod 4 path
}

TEST_CASE("element multiplication") {
    QuadraticSetup split3 = QuadraticSetup::preset(CaseKind::Split, 3);
    OrderElement d1(0, 1, 1, split3);
    CHECK(d1 * d1 == OrderElement(0, 3, 1, split3));  // (p^n D)^2 = p^n tau p^n D

    QuadraticSetup s = QuadraticSetup::make(3, 0, -1);
    OrderElement d0(0, 1, 0, s);
    CHECK(d0 * d0 == OrderElement(1, 0, 0, s));  // D^2 = 1 when delta = -1

    OrderElement a(1, 2, 0, s), b(3, 1, 0, s);
    CHECK(a * b == b * a);
    CHECK(a + b == OrderElement(4, 3, 0, s));
    CHECK((a * (b + b)) == (a * b + a * b));

    QuadraticSetup r = QuadraticSetup::preset(CaseKind::Ramified, 3);
    OrderElement ra(1, 1, 1, r), rb(2, 1, 1, r);
    // (1 + 3D)(2 + 3D) = 2 + 9 D^2 + 9D = 2 + 9(-3)... as pairs:
    CHECK(ra * rb == OrderElement(2 - 9 * (-3) * 1, 3, 1, r));

    QuadraticSetup s5 = QuadraticSetup::preset(CaseKind::Split, 5);
    CHECK_THROWS_AS(OrderElement(1, 0, 0, s5) * OrderElement(1, 0, 1, s5),
                    std::invalid_argument);  // mixed levels
}

TEST_CASE("norms and units") {
    QuadraticSetup split3 = QuadraticSetup::preset(CaseKind::Split, 3);
    CHECK(norm(OrderElement(2, 1, 0, split3)) == 6);
    QuadraticSetup r3 = QuadraticSetup::preset(CaseKind::Ramified, 3);
    CHECK(norm(OrderElement(0, 1, 1, r3)) == -27);
    CHECK(norm(OrderElement(0, 1, 0, r3)) == -3);

    // multiplicativity on random elements
    std::mt19937 rng(7u);
    std::uniform_int_distribution<long> coef(-20, 20);
    for (const QuadraticSetup& s :
         {split3, r3, QuadraticSetup::preset(CaseKind::Unramified, 5)}) {
        for (int i = 0; i < 25; ++i) {
            long lev = i % 3;
            OrderElement a(coef(rng), coef(rng), lev, s);
            OrderElement b(coef(rng), coef(rng), lev, s);
            CHECK(norm(a * b) == norm(a) * norm(b));
        }
    }

    // level 0: unit iff the norm is a p-adic unit
    CHECK(is_unit(OrderElement(1, 1, 0, split3)));        // norm 2
    CHECK_FALSE(is_unit(OrderElement(2, 1, 0, split3)));  // norm 6
    CHECK_FALSE(is_unit(OrderElement(0, 1, 0, split3)));  // zero divisor
    // level >= 1: unit iff x is prime to p
    CHECK(is_unit(OrderElement(2, 5, 1, r3)));
    CHECK_FALSE(is_unit(OrderElement(3, 1, 1, r3)));
    CHECK(is_unit(OrderElement(-1, 3, 2, split3)));
}

TEST_CASE("split roots") {
    QuadraticSetup split3 = QuadraticSetup::preset(CaseKind::Split, 3);
    CHECK(split_roots(split3, 1) == std::pair<mpz_class, mpz_class>(0, 1));
    CHECK(split_roots(split3, 5) == std::pair<mpz_class, mpz_class>(0, 1));

    QuadraticSetup s = QuadraticSetup::make(3, 0, -1);  // X^2 - 1
    CHECK(split_roots(s, 1) == std::pair<mpz_class, mpz_class>(1, 2));
    CHECK(split_roots(s, 2) == std::pair<mpz_class, mpz_class>(1, 8));

    QuadraticSetup t = QuadraticSetup::make(5, 0, -6);  // X^2 - 6
    CHECK(split_roots(t, 2) == std::pair<mpz_class, mpz_class>(9, 16));

    // root invariants at several precisions and setups
    for (const QuadraticSetup& u : {split3, s, t, QuadraticSetup::make(7, 3, 2)}) {
        for (long M = 1; M <= 6; ++M) {
            auto [r1, r2] = split_roots(u, M);
            mpz_class mod = pow_int(u.p, M);
            CHECK(r1 < r2);
            CHECK(mod_reduce(r1 * r1 - u.tau * r1 + u.delta, mod) == 0);
            CHECK(mod_reduce(r2 * r2 - u.tau * r2 + u.delta, mod) == 0);
            CHECK(mod_reduce(r1 + r2 - u.tau, mod) == 0);
            CHECK(mod_reduce(r1 - r2, u.p) != 0);
        }
    }
    CHECK_THROWS_AS(split_roots(QuadraticSetup::preset(CaseKind::Ramified, 3), 2),
                    std::invalid_argument);
}

TEST_CASE("element types") {
    QuadraticSetup r3 = QuadraticSetup::preset(CaseKind::Ramified, 3);
    QuadraticSetup u3 = QuadraticSetup::preset(CaseKind::Unramified, 3);
    QuadraticSetup split3 = QuadraticSetup::preset(CaseKind::Split, 3);

    // units have type zero
    auto t = element_type(OrderElement(1, 0, 1, r3), 6);
    REQUIRE(t.has_value());
    CHECK(t->coords == std::vector<long>{0});
    CHECK(t->min_val == 0);
    t = element_type(OrderElement(1, 1, 0, split3), 6);
    REQUIRE(t.has_value());
    CHECK(t->coords == std::vector<long>{0, 0});

    // the uniformizer D has val 1 in the ramified maximal order
    t = element_type(OrderElement(0, 1, 0, r3), 6);
    REQUIRE(t.has_value());
    CHECK(t->coords == std::vector<long>{1});

    // p has val 2 there, val 1 per slot in the split algebra, val 1 unramified
    t = element_type(OrderElement(3, 0, 0, r3), 6);
    CHECK(t->coords == std::vector<long>{2});
    t = element_type(OrderElement(3, 0, 0, split3), 6);
    CHECK(t->coords == std::vector<long>{1, 1});
    t = element_type(OrderElement(3, 0, 0, u3), 6);
    CHECK(t->coords == std::vector<long>{1});

    // split zero divisors have no type
    CHECK_FALSE(element_type(OrderElement(0, 1, 0, split3), 6).has_value());
    CHECK_FALSE(element_type(OrderElement(1, -1, 0, split3), 6).has_value());  // 1 - D

    // asymmetric split type: 1 + 2D has embeddings 1, 3
    t = element_type(OrderElement(1, 2, 0, split3), 6);
    REQUIRE(t.has_value());
    CHECK(t->coords == std::vector<long>{0, 1});
    CHECK(t->min_val == 0);

    CHECK_THROWS_AS(element_type(OrderElement(0, 0, 0, r3), 6), std::invalid_argument);
    // precision exhausted: both split residues vanish mod 3^1 but the norm is 18
    CHECK_THROWS_AS(element_type(OrderElement(3, 3, 0, split3), 1), precision_exceeded);
    CHECK_THROWS_AS(element_type(OrderElement(9, 0, 0, r3), 2), precision_exceeded);

    CHECK(type_threshold(CaseKind::Ramified, 2) == 4);
    CHECK(type_threshold(CaseKind::Unramified, 2) == 2);
    CHECK(type_threshold(CaseKind::Split, 3) == 3);
    CHECK(type_index_exponent(CaseKind::Ramified, ElementType{{3}, 3}) == 3);
    CHECK(type_index_exponent(CaseKind::Unramified, ElementType{{2}, 2}) == 4);
    CHECK(type_index_exponent(CaseKind::Split, ElementType{{1, 2}, 1}) == 3);
}

TEST_CASE("unit-type relation") {
    // units always have type zero; the converse holds at every level in the
    // nonsplit cases and for n >= 1 split, but NOT split at level 0:
    // 1 + (p-1)D has embedding valuations (0, 1), so min val 0, yet norm p.
    QuadraticSetup split3 = QuadraticSetup::preset(CaseKind::Split, 3);
    OrderElement w(1, 2, 0, split3);
    auto tw = element_type(w, 8);
    REQUIRE(tw.has_value());
    CHECK(tw->min_val == 0);
    CHECK_FALSE(is_unit(w));

    std::mt19937 rng(11u);
    std::uniform_int_distribution<long> coef(-40, 40);
    auto check_setup = [&](const QuadraticSetup& s, long lev) {
        for (int i = 0; i < 60; ++i) {
            OrderElement a(coef(rng), coef(rng), lev, s);
            if (a.is_zero()) continue;
            std::optional<ElementType> t;
            try {
                t = element_type(a, 10);
            } catch (const precision_exceeded&) {
                continue;
            }
            if (is_unit(a)) {
                REQUIRE(t.has_value());
                CHECK(t->min_val == 0);
            }
            bool split0 = s.kind == CaseKind::Split && lev == 0;
            if (!split0 && t.has_value() && t->min_val == 0) CHECK(is_unit(a));
        }
    };
    check_setup(QuadraticSetup::preset(CaseKind::Ramified, 3), 0);
    check_setup(QuadraticSetup::preset(CaseKind::Ramified, 5), 1);
    check_setup(QuadraticSetup::preset(CaseKind::Unramified, 3), 0);
    check_setup(QuadraticSetup::preset(CaseKind::Unramified, 3), 2);
    check_setup(split3, 0);
    check_setup(split3, 1);
    check_setup(QuadraticSetup::preset(CaseKind::Split, 7), 2);
}

TEST_CASE("unramified norms have even valuation") {
    QuadraticSetup u5 = QuadraticSetup::preset(CaseKind::Unramified, 5);
    std::mt19937 rng(3u);
    std::uniform_int_distribution<long> coef(-30, 30);
    for (int i = 0; i < 80; ++i) {
        OrderElement a(coef(rng), coef(rng), i % 2, u5);
        if (a.is_zero()) continue;
        CHECK(p_valuation(norm(a), 5) % 2 == 0);
    }
}

TEST_CASE("type context matches the one-shot helper") {
    QuadraticSetup split5 = QuadraticSetup::preset(CaseKind::Split, 5);
    TypeContext ctx(split5, 8);
    CHECK(ctx.precision() == 8);
    std::mt19937 rng(5u);
    std::uniform_int_distribution<long> coef(-60, 60);
    for (int i = 0; i < 40; ++i) {
        OrderElement a(coef(rng), coef(rng), i % 3, split5);
        if (a.is_zero()) continue;
        CHECK(ctx.type(a) == element_type(a, 8));
    }
    // the zero-divisor profile marks the dead embedding (D vanishes under the
    // first root, 0, and is a unit under the second, 1)
    TypeContext::Profile pr = ctx.profile(OrderElement(0, 1, 0, split5));
    CHECK(pr.count == 2);
    CHECK_FALSE(pr.v[0].has_value());
    CHECK(pr.v[1] == 0);
}
