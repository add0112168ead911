#include <set>

#include "doctest.h"
#include "g2rc/harness.hpp"
#include "g2rc/rigged_config.hpp"
#include "support.hpp"

using namespace g2rc;
using testing_support::fixture;

TEST_CASE("vacancy numbers") {
    auto c = fixture("ex_def").shape();
    CHECK(rc::vacancy(c, 1, 6) == 2);
    CHECK(rc::vacancy(c, 1, 2) == 0);
    CHECK(rc::vacancy(c, 2, 1) == 1);
    Configuration empty{5, {}, {}};
    for (int i = 1; i <= 4; ++i) CHECK(rc::vacancy(empty, 2, i) == 5);
}

TEST_CASE("lambda from a configuration") {
    CHECK(rc::lambda_of(fixture("ex_def").shape()) == Weight{2, 0});
    CHECK(rc::lambda_of(fixture("bm4a_r1").shape()) == Weight{1, 1});
    CHECK(rc::lambda_of(Configuration{7, {}, {}}) == Weight{0, 7});
}

TEST_CASE("admissibility") {
    CHECK(rc::is_admissible(fixture("bm4a_r1").shape(), {1, 1}));
    auto bad = fixture("bm2b_bad").shape();
    CHECK(rc::vacancy(bad, 1, 5) == -1);
    CHECK_FALSE(rc::is_admissible(bad, rc::lambda_of(bad)));
    CHECK(rc::is_admissible(Configuration{3, {}, {}}, {0, 3}));
}

TEST_CASE("charge") {
    CHECK(rc::charge_config(fixture("ex_def").shape()) == -10);
    CHECK(rc::charge(fixture("ex_def")) == -8);
    CHECK(rc::charge(fixture("bm2a")) == -19);
    CHECK(rc::charge_config(fixture("bm4a_r0").shape()) == -5);
    CHECK(rc::charge(fixture("bm4a_r0")) == -5);
    CHECK(rc::charge_config(Configuration{}) == 0);
}

TEST_CASE("enumeration") {
    auto two = rc::enumerate_rc({1, 1}, 3);
    REQUIRE(two.size() == 2);
    CHECK(two[0].nu1.size() == 1);
    CHECK(std::set<int>{two[0].nu1[0].rig, two[1].nu1[0].rig} == std::set<int>{0, 1});
    auto zero = rc::enumerate_rc({0, 0}, 0);
    CHECK(zero == std::vector<RiggedConfig>{RiggedConfig{}});
    auto some = rc::enumerate_rc({2, 0}, 4);
    CHECK(std::find(some.begin(), some.end(), fixture("ex_def")) != some.end());
    for (const auto& r : some) CHECK(rc::is_valid(r));
    CHECK(rc::enumerate_rc({5, 5}, 2).empty());
    CHECK_THROWS_AS(rc::enumerate_rc({0, 0}, 9), ResourceError);
}

TEST_CASE("count identity |RC| = |P| up to L = 5") {
    for (int L = 0; L <= 5; ++L)
        for (Weight w : rc::dominant_weights(L)) {
            CAPTURE(L);
            CAPTURE(w.l1);
            CAPTURE(w.l2);
            CHECK(rc::enumerate_rc(w, L).size() == paths::enumerate_paths(w, L).size());
        }
}

TEST_CASE("second differences and stabilization") {
    for (int L = 0; L <= 5; ++L)
        for (Weight w : rc::dominant_weights(L))
            for (const auto& c : rc::enumerate_configs(w, L)) {
                auto s = harness::check_structure(c);
                CHECK(s.convexity.fails == 0);
                CHECK(s.stabilization.fails == 0);
            }
}
