#include <doctest.h>

#include <random>
#include <set>

#include "ozeta/checks.hpp"
#include "ozeta/numutil.hpp"
#include "ozeta/oracle.hpp"

using namespace ozeta;

namespace {
const QuadraticSetup& ram3() {
    static QuadraticSetup s = QuadraticSetup::preset(CaseKind::Ramified, 3);
    return s;
}
const QuadraticSetup& unr3() {
    static QuadraticSetup s = QuadraticSetup::preset(CaseKind::Unramified, 3);
    return s;
}
const QuadraticSetup& spl3() {
    static QuadraticSetup s = QuadraticSetup::preset(CaseKind::Split, 3);
    return s;
}
}  // namespace

TEST_CASE("sublattice enumeration") {
    CHECK(enumerate_sublattices(spl3(), 0, 0).size() == 1);
    CHECK(enumerate_sublattices(spl3(), 0, 1).size() == 4);    // 1 + 3
    CHECK(enumerate_sublattices(spl3(), 1, 2).size() == 13);   // 1 + 3 + 9
    CHECK(enumerate_sublattices(ram3(), 0, 3).size() == 40);

    // triples are unique and well formed
    std::set<std::tuple<long, long, std::string>> seen;
    for (long k = 0; k <= 3; ++k) {
        for (const HnfLattice& lat : enumerate_sublattices(unr3(), 1, k)) {
            CHECK(lat.a + lat.c == k);
            CHECK(lat.index_exp() == k);
            CHECK(lat.b >= 0);
            CHECK(lat.b < pow_int(3, lat.c));
            CHECK(seen.insert({lat.a, lat.c, lat.b.get_str()}).second);
        }
    }
    // budget: 5^11 lattices at c = k = 11 is past 10^7
    CHECK_THROWS_AS(
        enumerate_sublattices(QuadraticSetup::preset(CaseKind::Split, 5), 0, 11),
        budget_exceeded);
}

TEST_CASE("lattice membership") {
    HnfLattice lat{1, 1, 1, 0, &spl3()};  // rows (3, 1), (0, 3)
    CHECK(lat.contains(3, 1));
    CHECK(lat.contains(0, 3));
    CHECK(lat.contains(3, 4));
    CHECK(lat.contains(-3, 2));   // -(3,1) + (0,3)
    CHECK_FALSE(lat.contains(1, 0));
    CHECK_FALSE(lat.contains(3, 0));
    CHECK(lat.contains(OrderElement(6, 2, 0, spl3())));
    CHECK(lat.str() == "(1, 1, 1)");
}

TEST_CASE("hermite canonical form") {
    // round-trips every enumerated lattice from its own basis rows
    for (const QuadraticSetup& s : {ram3(), unr3(), spl3()}) {
        for (long n = 0; n <= 2; ++n) {
            for (long k = 0; k <= 3; ++k) {
                for (const HnfLattice& lat : enumerate_sublattices(s, n, k)) {
                    OrderElement b1 = lat.basis1(), b2 = lat.basis2();
                    CHECK(p_hnf(s, n, {b1.x, b1.y}, {b2.x, b2.y}) == lat);
                    // row operations and p-adic unit scalings keep the span
                    CHECK(p_hnf(s, n, {b2.x, b2.y}, {b1.x + 2 * b2.x, b1.y + 2 * b2.y}) ==
                          lat);
                    CHECK(p_hnf(s, n, {2 * b1.x, 2 * b1.y}, {-b2.x, -b2.y}) == lat);
                }
            }
        }
    }
    CHECK_THROWS_AS(p_hnf(spl3(), 0, {1, 2}, {2, 4}), std::invalid_argument);  // rank 1
    CHECK_THROWS_AS(p_hnf(spl3(), 0, {0, 0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("ideal test") {
    // the whole order is an ideal at every level
    for (long n = 0; n <= 2; ++n)
        CHECK(is_ideal(HnfLattice{0, 0, 0, n, &spl3()}));
    // p O_0 inside O_1, written in level-1 coordinates, and a ramified sample
    CHECK(is_ideal(HnfLattice{1, 0, 0, 1, &spl3()}));
    CHECK(is_ideal(HnfLattice{1, 1, 1, 1, &ram3()}));
    // (3, 1), (0, 3) at level 0 split: closed under D iff (1, 3) lands inside
    CHECK_FALSE(is_ideal(HnfLattice{1, 1, 1, 0, &spl3()}));
    CHECK(is_ideal(HnfLattice{1, 1, 0, 0, &spl3()}));  // p O_0
    // ideal counts match the Dirichlet coefficients (spot cells)
    long ideals = 0;
    for (const HnfLattice& lat : enumerate_sublattices(spl3(), 0, 2))
        ideals += is_ideal(lat) ? 1 : 0;
    CHECK(ideals == 3);  // (2,0), (1,1), (0,2) in the two slots
}

TEST_CASE("representatives attain the valuation minimum") {
    for (const QuadraticSetup& s : {ram3(), unr3(), spl3()}) {
        for (long n = 0; n <= 2; ++n) {
            for (long k = 0; k <= 4; ++k) {
                TypeContext ctx(s, default_precision(n, k));
                for (const HnfLattice& lat : enumerate_sublattices(s, n, k)) {
                    if (!is_ideal(lat)) continue;
                    OrderElement rep = representative(lat, ctx);
                    CHECK(lat.contains(rep));
                    TypeContext::Profile target = ctx.profile(lat.basis1());
                    TypeContext::Profile p2 = ctx.profile(lat.basis2());
                    for (int i = 0; i < target.count; ++i) {
                        if (!target.v[i] || (p2.v[i] && *p2.v[i] < *target.v[i]))
                            target.v[i] = p2.v[i];
                    }
                    CHECK(ctx.profile(rep) == target);
                }
            }
        }
    }
    // the full order's representative is 1
    CHECK(representative(HnfLattice{0, 0, 0, 1, &ram3()}) ==
          OrderElement(1, 0, 1, ram3()));
}

TEST_CASE("classification examples") {
    // 3D * O_1 in the ramified order: index 27, generated at the order itself
    {
        OrderElement g(0, 1, 1, ram3());
        HnfLattice lat = principal_lattice(g);
        CHECK(lat == HnfLattice{3, 0, 0, 1, &ram3()});
        IdealRecord rec = classify(lat);
        CHECK(rec.ideal);
        CHECK(rec.index_exp == 3);
        CHECK(rec.principal);
        CHECK(rec.multiplier == 1);
        CHECK(rec.type.coords == std::vector<long>{3});
    }
    // p O_0 as a level-1 split ideal: generated by p over O_0, not over O_1
    {
        HnfLattice lat{1, 0, 0, 1, &spl3()};
        REQUIRE(is_ideal(lat));
        IdealRecord rec = classify(lat);
        CHECK_FALSE(rec.principal);
        CHECK(rec.multiplier == 0);
        CHECK(rec.rep == lat.basis1());  // the rep is p itself
        CHECK(rec.type.coords == std::vector<long>{1, 1});
        CHECK_FALSE(rec.low);  // min valuation 1 reaches the level-1 threshold
    }
}

TEST_CASE("census spot values") {
    // maximal orders: unique ideal per reachable index
    for (long k = 0; k <= 4; ++k) {
        Census c = ideal_census(ram3(), 0, k);
        CHECK(c.total == 1);
        CHECK(c.principal == 1);
    }
    CHECK(ideal_census(unr3(), 0, 1).total == 0);
    CHECK(ideal_census(unr3(), 0, 2).total == 1);
    CHECK(ideal_census(spl3(), 0, 2).total == 3);
    CHECK(ideal_census(spl3(), 0, 2).principal == 3);

    // level 1 cells against the symbolic counts at q = 3
    Census s11 = ideal_census(spl3(), 1, 1);
    CHECK(s11.total == 1);
    CHECK(s11.principal == 0);
    Census u13 = ideal_census(unr3(), 1, 3);
    CHECK(u13.total == 1);
    CHECK(u13.principal == 0);
    Census r12 = ideal_census(ram3(), 1, 2);
    CHECK(r12.total == 4);
    CHECK(r12.principal == 3);
    CHECK(r12.nonprincipal == 1);
    CHECK(r12.principal_types.at(TypeKey{2}) == 3);
    CHECK(r12.multiplier_dist.at(1) == 3);
    CHECK(r12.multiplier_dist.at(0) == 1);
    Census s12 = ideal_census(spl3(), 1, 2);
    CHECK(s12.principal_types.at(TypeKey{1, 1}) == 2);
    CHECK(s12.high_types.at(TypeKey{1, 1}) == 2);
    CHECK(s12.low_types.empty());

    // deep cells: every principal type is high once k >= 2n
    Census r14 = ideal_census(ram3(), 1, 4);
    CHECK(r14.principal == 3);
    CHECK(r14.principal_types.at(TypeKey{4}) == 3);
    CHECK(r14.low_types.empty());
    CHECK(low_high_census(ram3(), 1, 4).low_types_allowed);
    Census s14 = ideal_census(spl3(), 1, 4);
    CHECK(low_high_census(spl3(), 1, 4).low_types_allowed);
    CHECK(s14.low_types.empty());
    CHECK(s14.principal == 6);  // (1,3), (2,2), (3,1), two ideals each
    // a genuinely low cell: ramified n=2, k=2 gives type (2) below threshold 4
    Census r22 = ideal_census(ram3(), 2, 2);
    CHECK(r22.low_types.at(TypeKey{2}) == 3);
    CHECK(r22.high_types.empty());
    CHECK(low_high_census(ram3(), 2, 2).low_types_allowed);
}

TEST_CASE("nonprincipal transfer") {
    for (const QuadraticSetup& s : {ram3(), unr3(), spl3()}) {
        for (long n = 1; n <= 2; ++n) {
            for (long k = 0; k <= 4; ++k) {
                TransferCheck tc = transfer_check(s, n, k);
                CHECK(tc.ok);
                if (k == 0) CHECK(tc.nonprincipal == 0);
            }
        }
    }
    TransferCheck tc = transfer_check(ram3(), 1, 2);
    CHECK(tc.nonprincipal == 1);
    CHECK(tc.prev_total == 1);
}

TEST_CASE("unit quotient counts") {
    UnitQuotientCounts r = unit_quotient_counts(ram3(), 1);
    CHECK(r.base_units == 6);
    CHECK(r.order_units == 2);
    UnitQuotientCounts u = unit_quotient_counts(unr3(), 1);
    CHECK(u.base_units == 8);
    CHECK(u.order_units == 2);
    UnitQuotientCounts sp = unit_quotient_counts(spl3(), 1);
    CHECK(sp.base_units == 4);
    CHECK(sp.order_units == 2);
    // ratios match the index polynomials at q = p out to level 3
    for (const CheckResult& c : unit_index_checks(spl3(), 3)) CHECK(c.pass);
    for (const CheckResult& c : unit_index_checks(ram3(), 3)) CHECK(c.pass);
    for (const CheckResult& c : unit_index_checks(unr3(), 3)) CHECK(c.pass);
    CHECK_THROWS_AS(
        unit_quotient_counts(QuadraticSetup::preset(CaseKind::Split, 1009), 2),
        budget_exceeded);
}

TEST_CASE("norm criterion agrees with generator search") {
    for (const QuadraticSetup& s : {ram3(), unr3(), spl3()}) {
        for (const CheckResult& c : principality_cross_checks(s, 2, 3)) CHECK(c.pass);
    }
    for (const CheckResult& c :
         principality_cross_checks(QuadraticSetup::preset(CaseKind::Split, 5), 1, 2))
        CHECK(c.pass);
    static QuadraticSetup big = QuadraticSetup::preset(CaseKind::Split, 1009);
    CHECK_THROWS_AS(slow_is_principal(HnfLattice{0, 0, 0, 1, &big}), budget_exceeded);
}

TEST_CASE("classification is precision stable") {
    for (const QuadraticSetup& s : {ram3(), spl3()}) {
        for (long n = 0; n <= 2; ++n) {
            for (long k = 0; k <= 4; ++k) {
                TypeContext lo(s, default_precision(n, k));
                TypeContext hi(s, default_precision(n, k) + 4);
                for (const HnfLattice& lat : enumerate_sublattices(s, n, k)) {
                    if (!is_ideal(lat)) continue;
                    IdealRecord a = classify(lat, lo);
                    IdealRecord b = classify(lat, hi);
                    CHECK(a.type.coords == b.type.coords);
                    CHECK(a.principal == b.principal);
                    CHECK(a.multiplier == b.multiplier);
                }
            }
        }
    }
}

TEST_CASE("high valuation types sit inside the conductor") {
    // an element with every coordinate at or past the threshold lies in
    // p^n O_0, i.e. its constant coordinate is divisible by p^n -- and
    // conversely
    std::mt19937 rng(17u);
    std::uniform_int_distribution<long> coef(-81, 81);
    for (const QuadraticSetup& s : {ram3(), unr3(), spl3()}) {
        for (long n = 1; n <= 2; ++n) {
            long found_high = 0;
            for (int i = 0; i < 300; ++i) {
                OrderElement a(coef(rng), coef(rng), n, s);
                if (a.is_zero()) continue;
                std::optional<ElementType> t;
                try {
                    t = element_type(a, 12);
                } catch (const precision_exceeded&) {
                    continue;
                }
                if (!t) continue;
                bool high = t->min_val >= type_threshold(s.kind, n);
                bool in_conductor = divisible(a.x, pow_int(s.p, n));
                CHECK(high == in_conductor);
                found_high += high ? 1 : 0;
            }
            CHECK(found_high > 0);  // the sample actually exercises both sides
        }
    }
}

TEST_CASE("expected type histograms match a hand count") {
    // ramified n=1, k=2: three principal ideals, all of type (2)
    auto h = expected_type_histogram(ram3(), 1, 2);
    CHECK(h.size() == 1);
    CHECK(h.at(TypeKey{2}) == 3);
    // split n=1, k=3: types (1,2) and (2,1), each counted q-1 = 2 times
    h = expected_type_histogram(spl3(), 1, 3);
    CHECK(h.size() == 2);
    CHECK(h.at(TypeKey{1, 2}) == 2);
    CHECK(h.at(TypeKey{2, 1}) == 2);
    // unramified n=2, k=2: one low type (1), q^1 ideals
    h = expected_type_histogram(unr3(), 2, 2);
    CHECK(h.size() == 1);
    CHECK(h.at(TypeKey{1}) == 3);
    // odd k in the nonsplit cases is empty
    CHECK(expected_type_histogram(unr3(), 1, 3).empty());
}
