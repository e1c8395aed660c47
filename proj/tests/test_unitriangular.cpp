#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "unihopf/arc_diagram.hpp"
#include "unihopf/uni_matrix.hpp"

using namespace unihopf;

TEST_CASE("elementary product identity") {
    // (Id+E_ij)(Id+E_jk) = Id + E_ij + E_jk + E_ik over F_2, order i j k
    LinearOrder l{0, 1, 2};
    auto u = UniMatrix::elementary(l, 2, 0, 1, 1);
    auto v = UniMatrix::elementary(l, 2, 1, 2, 1);
    auto w = u * v;
    CHECK(w.entry(0, 1) == 1);
    CHECK(w.entry(1, 2) == 1);
    CHECK(w.entry(0, 2) == 1);

    auto id = UniMatrix::identity(l, 2);
    CHECK(w * id == w);
    CHECK((w * w.inverse()).is_identity());
    CHECK((w.inverse() * w).is_identity());
}

TEST_CASE("inverse") {
    LinearOrder l{0, 1};
    CHECK(UniMatrix::identity(l, 5).inverse().is_identity());
    auto e = UniMatrix::elementary(l, 5, 0, 1, 2);
    CHECK(e.inverse().entry(0, 1) == 3);  // Id - 2E
    auto e2 = UniMatrix::elementary(l, 2, 0, 1, 1);
    CHECK(e2.inverse() == e2);  // characteristic 2

    std::mt19937 rng(5);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 50; ++trial) {
            LinearOrder ord = standard_order(5);
            UniMatrix m(ord, p);
            std::uniform_int_distribution<std::uint32_t> val(0, p - 1);
            for (int r = 0; r < 5; ++r)
                for (int c = r + 1; c < 5; ++c) m.set_at(r, c, val(rng));
            CHECK((m * m.inverse()).is_identity());
        }
    }
}

TEST_CASE("direct sum and principal minors") {
    LinearOrder l{0, 1, 2, 3};
    auto id01 = UniMatrix::identity({0, 1}, 3);
    auto id23 = UniMatrix::identity({2, 3}, 3);
    CHECK(UniMatrix::direct_sum(id01, id23, l).is_identity());

    // the same matrix regardless of the operand order
    UniMatrix a({0, 2}, 3);
    a.set_entry(0, 2, 2);
    UniMatrix b({1, 3}, 3);
    b.set_entry(1, 3, 1);
    CHECK(UniMatrix::direct_sum(a, b, l) == UniMatrix::direct_sum(b, a, l));

    auto sum = UniMatrix::direct_sum(a, b, l);
    CHECK(sum.principal_minor({0, 2}) == a);
    CHECK(sum.principal_minor({1, 3}) == b);

    // order incompatibility is rejected
    UniMatrix a_rev(LinearOrder{2, 0}, 3);
    CHECK_THROWS(UniMatrix::direct_sum(a_rev, b, l));

    SECTION("nested minors compose: (U_S)_R = U_R") {
        std::mt19937 rng(17);
        std::uniform_int_distribution<std::uint32_t> val(0, 2);
        for (int trial = 0; trial < 30; ++trial) {
            UniMatrix m(standard_order(6), 3);
            for (int r = 0; r < 6; ++r)
                for (int c = r + 1; c < 6; ++c) m.set_at(r, c, val(rng));
            Ground s{0, 1, 3, 4, 5};
            Ground r2{1, 3, 5};
            CHECK(m.principal_minor(s).principal_minor(r2) == m.principal_minor(r2));
        }
    }

    SECTION("minors along segments commute with direct sums") {
        // (U (+) V)_{S1} = U_A (+) V_B for the four-corner intersections
        std::mt19937 rng(23);
        std::uniform_int_distribution<std::uint32_t> val(0, 1);
        LinearOrder t1{0, 1, 2}, t2{3, 4, 5};
        LinearOrder whole = concat_orders(t1, t2);
        for (int trial = 0; trial < 40; ++trial) {
            UniMatrix u(t1, 2), v(t2, 2);
            for (int r = 0; r < 3; ++r)
                for (int c = r + 1; c < 3; ++c) {
                    u.set_at(r, c, val(rng));
                    v.set_at(r, c, val(rng));
                }
            Ground s1{0, 2, 3};  // S1 splits as A = {0,2} in t1, B = {3} in t2
            auto lhs = UniMatrix::direct_sum(u, v, whole).principal_minor(s1);
            auto rhs = UniMatrix::direct_sum(u.principal_minor({0, 2}), v.principal_minor({3}),
                                             restrict_order(whole, s1));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("minors are multiplicative exactly on segments") {
    LinearOrder l{0, 1, 2};  // i j k
    auto w = homomorphism_witness(l, {0, 2});
    REQUIRE_FALSE(w.multiplicative);
    REQUIRE(w.counterexample.has_value());
    auto [u, v] = *w.counterexample;
    // the witness pair violates multiplicativity through the minor
    Ground s{0, 2};
    auto prod_minor = (u * v).principal_minor(s);
    auto minor_prod = u.principal_minor(s) * v.principal_minor(s);
    CHECK(prod_minor != minor_prod);

    CHECK(homomorphism_witness(l, {0, 1}).multiplicative);
    CHECK(homomorphism_witness(l, ground_of(l)).multiplicative);

    SECTION("witness exists iff not a segment, exhaustive n <= 5") {
        for (int n = 1; n <= 5; ++n) {
            LinearOrder ord = standard_order(n);
            for (const auto& s : enumerate_subsets(ground_of(ord))) {
                auto res = homomorphism_witness(ord, s, 3);
                CHECK(res.multiplicative == is_segment(ord, s));
                if (!res.multiplicative) {
                    auto [a, b] = *res.counterexample;
                    CHECK((a * b).principal_minor(s) !=
                          a.principal_minor(s) * b.principal_minor(s));
                }
            }
        }
    }
}

TEST_CASE("matrix graphs") {
    // l = h i j k with entries (h,k), (i,j), (i,k)
    LinearOrder l{0, 1, 2, 3};
    UniMatrix u(l, 5);
    u.set_entry(0, 3, 2);
    u.set_entry(1, 2, 3);
    u.set_entry(1, 3, 4);
    auto g = u.graph();
    CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}, {1, 3}});

    // the {h,k} principal minor keeps the (h,k) entry
    auto minor = u.principal_minor({0, 3});
    CHECK(minor.order() == LinearOrder{0, 3});
    CHECK(minor.entry(0, 3) == 2);

    CHECK(UniMatrix::identity(l, 5).graph() == SimpleGraph::edgeless({0, 1, 2, 3}));

    // graphs of direct sums are unions
    UniMatrix a({0, 1}, 2);
    a.set_entry(0, 1, 1);
    UniMatrix b({2, 3}, 2);
    b.set_entry(2, 3, 1);
    auto sum = UniMatrix::direct_sum(a, b, l);
    CHECK(sum.graph() == a.graph().disjoint_union(b.graph()));
}

TEST_CASE("encode/decode round-trip") {
    for (std::uint32_t p : {2u, 3u}) {
        LinearOrder l = standard_order(4);
        std::uint64_t count = 1;
        for (std::size_t t = 0; t < UniMatrix::tri(4); ++t) count *= p;
        for (std::uint64_t i = 0; i < count; ++i)
            CHECK(UniMatrix::decode(i, l, p).encode() == i);
    }
}

TEST_CASE("canonical representative sweep") {
    CHECK(canonical_superclass_rep(UniMatrix::identity(standard_order(4), 3)).is_identity());

    // Id + E_ij + E_ik reduces to Id + E_ij over F_2
    LinearOrder l{0, 1, 2};
    UniMatrix u(l, 2);
    u.set_entry(0, 1, 1);
    u.set_entry(0, 2, 1);
    auto r = canonical_superclass_rep(u);
    CHECK(r == UniMatrix::elementary(l, 2, 0, 1, 1));

    // an already-canonical matrix is fixed (the worked 6x6 example)
    LinearOrder l6{0, 1, 2, 3, 4, 5};
    SetPartition x({{0, 3, 4}, {1}, {2, 5}});
    ArcDiagram d(l6, x, 5, {{{0, 3}, 2}, {{3, 4}, 3}, {{2, 5}, 4}});
    auto m = diagram_to_matrix(d);
    CHECK(canonical_superclass_rep(m) == m);

    SECTION("idempotent and sparse on random matrices") {
        std::mt19937 rng(41);
        for (std::uint32_t p : {2u, 3u, 5u}) {
            std::uniform_int_distribution<std::uint32_t> val(0, p - 1);
            for (int trial = 0; trial < 100; ++trial) {
                UniMatrix m2(standard_order(6), p);
                for (int rr = 0; rr < 6; ++rr)
                    for (int cc = rr + 1; cc < 6; ++cc) m2.set_at(rr, cc, val(rng));
                auto c1 = canonical_superclass_rep(m2);
                CHECK(c1.is_row_col_sparse());
                CHECK(canonical_superclass_rep(c1) == c1);
            }
        }
    }
}
