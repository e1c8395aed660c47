#include <catch2/catch_amalgamated.hpp>

#include "unihopf/ordered.hpp"

using namespace unihopf;

TEST_CASE("segments") {
    LinearOrder l{5, 6, 7, 8, 9, 10};  // f g h i j k
    CHECK(is_segment(l, {7, 8}));
    CHECK_FALSE(is_segment(l, {5, 8}));
    CHECK(is_segment(l, {}));
    CHECK(is_segment(l, ground_of(l)));
    CHECK_THROWS(is_segment(l, {99}));
}

TEST_CASE("concatenation and restriction") {
    CHECK(concat_orders({0, 1}, {2}) == LinearOrder{0, 1, 2});
    CHECK(concat_orders({}, {3, 1}) == LinearOrder{3, 1});
    CHECK(concat_orders({1, 2}, {0, 3}) == LinearOrder{1, 2, 0, 3});
    CHECK_THROWS(concat_orders({0, 1}, {1, 2}));

    CHECK(restrict_order({2, 0, 1}, {0, 2}) == LinearOrder{2, 0});
    LinearOrder l{3, 1, 4, 0};
    CHECK(restrict_order(l, ground_of(l)) == l);
    CHECK(restrict_order({0, 1, 2}, {}) == LinearOrder{});
    CHECK_THROWS(restrict_order({0, 1}, {5}));

    SECTION("restriction undoes concatenation, all splits of small grounds") {
        for (const auto& l1 : enumerate_orders({0, 1}))
            for (const auto& l2 : enumerate_orders({2, 3, 4})) {
                auto cat = concat_orders(l1, l2);
                CHECK(restrict_order(cat, ground_of(l1)) == l1);
                CHECK(restrict_order(cat, ground_of(l2)) == l2);
            }
    }

    SECTION("segments respect restriction") {
        LinearOrder l{0, 1, 2, 3, 4};
        for (const auto& t : enumerate_subsets(ground_of(l))) {
            if (!is_segment(l, t)) continue;
            auto lt = restrict_order(l, t);
            for (const auto& s : enumerate_subsets(t))
                if (is_segment(l, s)) CHECK(is_segment(lt, s));
        }
    }
}

TEST_CASE("decompositions") {
    CHECK(enumerate_decompositions({0, 1}, 2).size() == 4);
    CHECK(enumerate_decompositions({0, 1, 2}, 2, true).size() == 6);
    auto empty = enumerate_decompositions({}, 2);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0][0].empty());
    CHECK(empty[0][1].empty());
    CHECK(enumerate_decompositions({0, 1, 2}, 3).size() == 27);
    CHECK_THROWS(enumerate_decompositions({0}, 0));

    // set compositions of a 3-set: 1 + 6 + 6
    CHECK(enumerate_set_compositions({0, 1, 2}).size() == 13);
    CHECK(enumerate_set_compositions({}).size() == 1);
}

TEST_CASE("relabeling is a functorial action") {
    LinearOrder abc{0, 1, 2};
    Bijection to_xyz{{0, 10}, {1, 11}, {2, 12}};
    CHECK(relabel(abc, to_xyz) == LinearOrder{10, 11, 12});
    CHECK(relabel(abc, identity_bijection({0, 1, 2})) == abc);
    CHECK_THROWS(relabel(abc, Bijection{{0, 5}, {1, 5}, {2, 6}}));  // not injective
    CHECK_THROWS(relabel(abc, Bijection{{0, 5}}));                  // not defined everywhere

    // action law: transporting twice composes
    Bijection sigma{{0, 1}, {1, 2}, {2, 0}}, tau{{0, 0}, {1, 2}, {2, 1}};
    for (const auto& l : enumerate_orders({0, 1, 2}))
        CHECK(relabel(relabel(l, sigma), tau) == relabel(l, compose(tau, sigma)));
}
