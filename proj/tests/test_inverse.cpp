#include "doctest.h"
#include "g2rc/bijection.hpp"
#include "g2rc/inverse.hpp"
#include "support.hpp"

using namespace g2rc;
using testing_support::fixture;
using testing_support::letters;
using testing_support::make_rc;

TEST_CASE("inverse step undoes the first step of the examples") {
    for (const char* name : {"ex_def", "bm5", "bm4d", "bm8c", "boomerang"}) {
        auto r = fixture(name);
        auto o = bij::delta_theta(r);
        CAPTURE(name);
        CHECK(inv::delta_theta_inv(o.rc, o.letter) == r);
    }
}

TEST_CASE("letter 1 only lengthens the path") {
    CHECK(inv::delta_theta_inv(RiggedConfig{}, 1) == make_rc(1, "", ""));
    auto s = inv::delta_theta_inv_step(make_rc(2, "", "1:0"), 1);
    CHECK(s.rc == make_rc(3, "", "1:0"));
    CHECK(s.plan.empty());
}

TEST_CASE("phi inverse") {
    CHECK(inv::phi_inv(letters({7, 12, 2, 1})) == fixture("ex_def"));
    CHECK(inv::phi_inv({}) == RiggedConfig{});
    CHECK(inv::phi_inv(letters({9, 2, 1})) == fixture("bm4a_r1"));
    CHECK(inv::phi_inv(letters({4, 5, 1})) == fixture("bm4a_r0"));
    std::vector<std::string> trace;
    inv::phi_inv(letters({12, 11, 1, 5, 1}), &trace);
    CHECK(trace.size() == 5);
    CHECK(trace.front().rfind("1: ", 0) == 0);
}

TEST_CASE("letters leaving the dominant chamber are refused") {
    // lambda = 0 at L = 0; adding 2 would need lambda = 3L1 - L2
    CHECK_THROWS_AS(inv::delta_theta_inv(RiggedConfig{}, 2), InverseError);
    CHECK_THROWS_AS(inv::phi_inv(letters({1, 2})), InverseError);
}

TEST_CASE("box bookkeeping of the inverse step") {
    for (const auto& p : paths::enumerate_paths({1, 1}, 4)) {
        RiggedConfig cur;
        for (auto it = p.rbegin(); it != p.rend(); ++it) {
            auto next = inv::delta_theta_inv(cur, *it);
            auto [d1, d2] = bij::boxes_removed(*it);
            CHECK(rc::size(next.shape().nu1) - rc::size(cur.shape().nu1) == d1);
            CHECK(rc::size(next.shape().nu2) - rc::size(cur.shape().nu2) == d2);
            cur = next;
        }
    }
}
