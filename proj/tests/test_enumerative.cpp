#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "unihopf/enumerative.hpp"
#include "unihopf/hopf.hpp"
#include "unihopf/instances.hpp"

using namespace unihopf;

namespace {
CensusProvider& test_census() {
    static CensusProvider prov(std::filesystem::temp_directory_path() / "unihopf-test-cache");
    return prov;
}
}  // namespace

TEST_CASE("bell and atomic series") {
    auto ba = bell_and_atomic(8);
    const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    const long atomic[] = {0, 1, 1, 2, 6, 22, 92, 426, 2146};
    for (int n = 0; n <= 8; ++n) {
        CHECK(ba.bell[n] == bell[n]);
        CHECK(ba.atomic[n] == atomic[n]);
    }

    // B(x) (1 - A(x)) = 1 through order 8
    RationalSeries b(8), a(8);
    for (int n = 0; n <= 8; ++n) b[n] = Rational(ba.bell[n]);
    a[0] = Rational(1);
    for (int n = 1; n <= 8; ++n) a[n] = Rational(-ba.atomic[n]);
    CHECK(b * a == RationalSeries::one(8));

    CHECK_THROWS(bell_and_atomic(13));
}

TEST_CASE("class counts against censuses") {
    auto t = class_counts(test_census(), 2, 4);
    const long k2[] = {1, 1, 2, 5, 16};
    for (int n = 0; n <= 4; ++n) {
        CHECK(t.k[n] == k2[n]);
        CHECK(t.superclasses[n] == bell_numbers(4)[n]);  // Bell at q=2
        CHECK(t.superclasses[n] == t.diagram_sums[n]);
    }

    auto t3 = class_counts(test_census(), 3, 4);
    const long k3[] = {1, 1, 3, 11, 57};
    const long sc3[] = {1, 1, 3, 11, 49};
    for (int n = 0; n <= 4; ++n) {
        CHECK(t3.k[n] == k3[n]);
        CHECK(t3.superclasses[n] == sc3[n]);
    }
}

TEST_CASE("c sequence by inversion") {
    auto t = class_counts(test_census(), 2, 6);
    auto c = c_sequence(t.k);
    const long expected[] = {0, 1, 1, 2, 7, 29, 145};
    for (int n = 1; n <= 6; ++n) CHECK(c[n] == expected[n]);

    // the known closed forms, evaluated at t = q-1, give the same values
    std::vector<IntPoly> table = {
        IntPoly(),                                                       // unused
        IntPoly::constant(1),                                            // c1
        IntPoly({Integer(0), Integer(1)}),                               // t
        IntPoly({Integer(0), Integer(1), Integer(1)}),                   // t^2+t
        IntPoly({Integer(0), Integer(1), Integer(4), Integer(2)}),       // 2t^3+4t^2+t
        IntPoly({Integer(0), Integer(1), Integer(9), Integer(14), Integer(5)}),
        IntPoly({Integer(0), Integer(1), Integer(16), Integer(54), Integer(55), Integer(18),
                 Integer(1)}),
    };
    for (int n = 1; n <= 6; ++n) CHECK(Rational(c[n]) == table[n].eval(Rational(1)));

    // all c_n are nonnegative in the computed range
    for (int n = 1; n <= 6; ++n) CHECK(c[n] >= 0);

    // at p=3 the table at t=2 matches for n <= 5
    auto t3 = class_counts(test_census(), 3, 5);
    auto c3 = c_sequence(t3.k);
    for (int n = 1; n <= 5; ++n) CHECK(Rational(c3[n]) == table[n].eval(Rational(2)));

    CHECK_THROWS(c_sequence(std::vector<Integer>{Integer(2), Integer(1)}));
}

TEST_CASE("series composition of the closed forms reproduces class counts") {
    // build K(x) = 1/(1 - sum c_n(t) x^n) over integer polynomials and evaluate
    PolySeries cs(5);
    cs[0] = IntPoly::constant(1);
    std::vector<IntPoly> table = {
        IntPoly(), IntPoly::constant(1), IntPoly({Integer(0), Integer(1)}),
        IntPoly({Integer(0), Integer(1), Integer(1)}),
        IntPoly({Integer(0), Integer(1), Integer(4), Integer(2)}),
        IntPoly({Integer(0), Integer(1), Integer(9), Integer(14), Integer(5)}),
    };
    for (int n = 1; n <= 5; ++n) cs[n] = IntPoly() - table[n];
    auto ks = series_invert(cs);

    // k_4 as a polynomial in t is 2t^3+7t^2+6t+1; at t=2 it is 57 = the census count
    CHECK(ks[4] == IntPoly({Integer(1), Integer(6), Integer(7), Integer(2)}));
    CHECK(ks[4].eval(Rational(2)) == Rational(57));
    auto t3 = class_counts(test_census(), 3, 5);
    for (int n = 0; n <= 5; ++n) CHECK(Rational(t3.k[n]) == ks[n].eval(Rational(2)));
}

TEST_CASE("counting inequality") {
    auto t = class_counts(test_census(), 2, 6);
    auto ba = bell_and_atomic(6);
    auto rep = check_counting_inequality(t.k, ba.atomic, 6);
    CHECK(rep.all_hold());
    // n=2: equality with A_2 k_0 + A_1 k_1 = 2
    CHECK(rep.rows[1].rhs == 2);
    CHECK(rep.rows[1].margin == 0);
    // n=6: 275 against 92 + 22 k_1 + 6 k_2 + 2 k_3 + k_4 + k_5 = 213
    CHECK(rep.rows[5].lhs == 275);
    CHECK(rep.rows[5].rhs == 213);
    Integer by_hand = Integer(92) + 22 * t.k[1] + 6 * t.k[2] + 2 * t.k[3] + t.k[4] + t.k[5];
    CHECK(by_hand == 213);
}

TEST_CASE("second counting inequality") {
    auto t = class_counts(test_census(), 2, 6);
    auto c = c_sequence(t.k);
    auto rep = check_counting2(2, c, 6);
    CHECK(rep.all_hold());
    CHECK(rep.rows[1].lhs == 2);  // n=2: equality case c_1 + c_2 = 2
    CHECK(rep.rows[1].margin == 0);

    auto t3 = class_counts(test_census(), 3, 5);
    auto rep3 = check_counting2(3, c_sequence(t3.k), 5);
    CHECK(rep3.all_hold());
}

TEST_CASE("conjecture fits") {
    auto fit2 = fit_conjecture(test_census(), 2, {2, 3});
    CHECK(fit2.poly == IntPoly::monomial(Integer(1), 1));
    CHECK(fit2.nonnegative);

    auto fit3 = fit_conjecture(test_census(), 3, {2, 3, 5});
    CHECK(fit3.poly == IntPoly({Integer(0), Integer(1), Integer(1)}));
    CHECK(fit3.nonnegative);

    // too few sample points for c_4 produce a line that misses nonnegativity,
    // flagging the insufficiency rather than disproving anything
    auto under = fit_conjecture(test_census(), 4, {2, 3});
    CHECK_FALSE(under.nonnegative);

    CHECK_THROWS(fit_conjecture(test_census(), 2, {2}));
}

TEST_CASE("the Hadamard product of orders and partitions has a free type series") {
    // coinvariant counts of LxPi against the inverse of 1 - (atomic series), to order 8
    InstanceLxPi lp{InstanceL{}, InstancePi{}};
    auto counts = type_series_counts(lp, 8);
    auto ba = bell_and_atomic(8);
    RationalSeries one_minus_a(8);
    one_minus_a[0] = Rational(1);
    for (int n = 1; n <= 8; ++n) one_minus_a[n] = Rational(-ba.atomic[n]);
    auto expect = series_invert(one_minus_a);
    for (int n = 0; n <= 8; ++n) CHECK(Rational(counts[n]) == expect[n]);
}

TEST_CASE("lagrange quotients") {
    InstanceCfU cf(test_census(), 2);
    InstanceScfU scf(2);
    InstanceLxPi lp{InstanceL{}, InstancePi{}};
    const int N = 5;
    auto ts_cf = type_series(cf, N);
    auto ts_scf = type_series(scf, N);
    auto ts_lp = type_series(lp, N);

    // s/s = 1
    auto self = lagrange_quotient_check(ts_cf, ts_cf);
    CHECK(self.quotient[0] == Rational(1));
    for (int i = 1; i <= N; ++i) CHECK(self.quotient[i] == Rational(0));

    // scf and LxPi coincide at p=2
    auto unit = lagrange_quotient_check(ts_scf, ts_lp);
    CHECK(unit.nonnegative_integers());
    CHECK(unit.quotient[0] == Rational(1));
    for (int i = 1; i <= N; ++i) CHECK(unit.quotient[i] == Rational(0));

    CHECK(lagrange_quotient_check(ts_cf, ts_scf).nonnegative_integers());
    CHECK(lagrange_quotient_check(ts_cf, ts_lp).nonnegative_integers());
}
