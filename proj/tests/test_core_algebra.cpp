#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "unihopf/int_poly.hpp"
#include "unihopf/prime_field.hpp"
#include "unihopf/rational.hpp"
#include "unihopf/trunc_series.hpp"

using namespace unihopf;

TEST_CASE("rationals are canonical and exact") {
    Rational r(6, 4);
    CHECK(r.num() == 3);
    CHECK(r.den() == 2);
    Rational s(-3, -6);
    CHECK(s.num() == 1);
    CHECK(s.den() == 2);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1) / Rational(0));

    // (a/b + c/d)(b d) = a d + c b on random small operands
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 40);
    for (int i = 0; i < 300; ++i) {
        long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Rational lhs = (Rational(a, b) + Rational(c, d)) * Rational(b * d);
        CHECK(lhs == Rational(a * d + c * b));
    }
}

TEST_CASE("polynomial evaluation") {
    IntPoly p({Integer(1), Integer(3), Integer(1)});  // t^2 + 3t + 1
    CHECK(p.eval(Rational(1)) == Rational(5));
    CHECK(IntPoly().eval(Rational(7)) == Rational(0));
    IntPoly c4({Integer(0), Integer(1), Integer(4), Integer(2)});  // 2t^3 + 4t^2 + t
    CHECK(c4.eval(Rational(1)) == Rational(7));
    CHECK(c4.str() == "2t^3+4t^2+t");
    CHECK(IntPoly().str() == "0");
}

TEST_CASE("series inversion") {
    // geometric series
    RationalSeries s(6);
    s[0] = Rational(1);
    s[1] = Rational(-1);
    auto u = series_invert(s);
    for (int i = 0; i <= 6; ++i) CHECK(u[i] == Rational(1));

    // 1 - (x + x^2 + 2x^3 + 6x^4 + 22x^5 + 92x^6) inverts to the Bell series
    RationalSeries a(6);
    a[0] = Rational(1);
    const long at[] = {0, 1, 1, 2, 6, 22, 92};
    for (int i = 1; i <= 6; ++i) a[i] = Rational(-at[i]);
    auto b = series_invert(a);
    const long bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (int i = 0; i <= 6; ++i) CHECK(b[i] == Rational(bell[i]));

    RationalSeries z(3);  // constant term 0
    z[1] = Rational(1);
    CHECK_THROWS(series_invert(z));

    SECTION("inverse is a genuine inverse for random unit series") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<long> coeff(-5, 5), den(1, 4);
        for (int trial = 0; trial < 50; ++trial) {
            RationalSeries r(5);
            r[0] = Rational(1);
            for (int i = 1; i <= 5; ++i) r[i] = Rational(coeff(rng), den(rng));
            auto prod = r * series_invert(r);
            CHECK(prod == RationalSeries::one(5));
        }
    }

    SECTION("truncation orders must match") {
        RationalSeries x(3), y(4);
        CHECK_THROWS(x + y);
        CHECK_THROWS(x * y);
    }

    SECTION("series over integer polynomials") {
        // constant term must be a unit of Z[t]
        PolySeries s2(2);
        s2[0] = IntPoly::constant(Integer(1));
        s2[1] = IntPoly::monomial(Integer(-1), 1);  // 1 - t x
        auto inv = series_invert(s2);
        CHECK(inv[2] == IntPoly::monomial(Integer(1), 2));  // t^2 x^2
        PolySeries bad(2);
        bad[0] = IntPoly::monomial(Integer(1), 1);
        CHECK_THROWS(series_invert(bad));
    }
}

TEST_CASE("interpolation") {
    using P = std::pair<Rational, Rational>;
    std::vector<P> line{{Rational(1), Rational(1)},
                        {Rational(2), Rational(2)},
                        {Rational(4), Rational(4)},
                        {Rational(6), Rational(6)}};
    CHECK(interpolate_poly(line, 3) == IntPoly::monomial(Integer(1), 1));

    // c_4 samples at t = q-1 for q in {2,3,5,7} recover the cubic
    IntPoly c4({Integer(0), Integer(1), Integer(4), Integer(2)});
    std::vector<P> pts;
    for (long q : {2, 3, 5, 7}) pts.push_back({Rational(q - 1), c4.eval(Rational(q - 1))});
    CHECK(interpolate_poly(pts, 3) == c4);

    CHECK_THROWS(interpolate_poly({line[0], line[1], line[2]}, 3));  // too few points
    CHECK_THROWS(interpolate_poly({line[0], line[0]}, 1));           // duplicate abscissae
    // inconsistent overdetermined data
    auto bad = line;
    bad.push_back({Rational(7), Rational(8)});
    CHECK_THROWS(interpolate_poly(bad, 3));
    // non-integer coefficients rejected when integrality is demanded
    std::vector<P> half{{Rational(0), Rational(0)}, {Rational(1), Rational(1, 2)}};
    CHECK_THROWS(interpolate_poly(half, 1, true));

    SECTION("left inverse of evaluation on random integer polynomials") {
        std::mt19937 rng(3);
        std::uniform_int_distribution<long> coeff(-9, 9);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Integer> cs(4);
            for (auto& c : cs) c = coeff(rng);
            IntPoly p(cs);
            std::vector<P> sample;
            for (long x = 0; x < 4; ++x) sample.push_back({Rational(x), p.eval(Rational(x))});
            CHECK(interpolate_poly(sample, 3) == p);
        }
    }
}

TEST_CASE("prime field axioms, exhaustively for p in {2,3,5,7}") {
    CHECK(FFElem(2, 5).inverse() == FFElem(3, 5));
    CHECK(FFElem(1, 2) + FFElem(1, 2) == FFElem(0, 2));
    CHECK(FFElem(4, 7) * FFElem(2, 7) == FFElem(1, 7));
    CHECK_THROWS(FFElem(0, 5).inverse());
    CHECK_THROWS(FFElem(1, 3) + FFElem(1, 5));
    CHECK_THROWS(FFElem(1, 4));  // non-prime modulus

    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (std::uint32_t a = 0; a < p; ++a) {
            FFElem x(a, p);
            CHECK(x + FFElem(0, p) == x);
            CHECK(x * FFElem(1, p) == x);
            CHECK(x + (-x) == FFElem(0, p));
            if (a) CHECK(x * x.inverse() == FFElem(1, p));
            for (std::uint32_t b = 0; b < p; ++b) {
                FFElem y(b, p);
                CHECK(x + y == y + x);
                CHECK(x * y == y * x);
                for (std::uint32_t c = 0; c < p; ++c) {
                    FFElem z(c, p);
                    CHECK((x + y) + z == x + (y + z));
                    CHECK((x * y) * z == x * (y * z));
                    CHECK(x * (y + z) == x * y + x * z);
                }
            }
        }
    }
}
