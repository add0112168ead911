#include "doctest.h"
#include "g2rc/bijection.hpp"
#include "support.hpp"

using namespace g2rc;
using testing_support::fixture;
using testing_support::letters;
using testing_support::make_rc;

TEST_CASE("first step of the worked example") {
    auto o = bij::delta_theta(fixture("ex_def"));
    CHECK(o.letter == 7);
    // p_1 of nu2 is 0 here, so the 1-strings of nu2 carry rigging 0
    CHECK(o.rc == make_rc(3, "5:1", "2:0 1:0 1:0"));
    CHECK(rc::vacancy(o.rc, 2, 1) == 0);
    CHECK(o.delta_alpha == 1);
    // [1] on a 1-string of nu2, [2][3] on the 2-string, [5] on the 6-string
    const auto& st = o.marking;
    CHECK(st.in(1) == 2);
    CHECK(st.str(1).len == 1);
    CHECK(st.in(2) == 1);
    CHECK(st.str(2).len == 2);
    CHECK(st.at[3].idx == st.at[2].idx);
    CHECK(st.str(5).len == 6);
}

TEST_CASE("phi on the worked examples") {
    CHECK(bij::phi(fixture("ex_def")) == letters({7, 12, 2, 1}));
    CHECK(bij::phi(fixture("bm2a")) == letters({8, 8, 1, 5, 8, 1}));
    CHECK(bij::phi(fixture("bm4b")) == letters({9, 3, 2, 1}));
    CHECK(bij::phi(fixture("bm4a_r1")) == letters({9, 2, 1}));
    CHECK(bij::phi(fixture("bm4a_r0")) == letters({4, 5, 1}));
    CHECK(bij::phi(fixture("bm5")) == letters({5, 9, 2, 1}));
    CHECK(bij::phi(fixture("bm8c")) == letters({12, 7, 0, 2, 1}));
    CHECK(bij::phi(RiggedConfig{}) == Path{});
}

TEST_CASE("no singular string in nu2 returns 1") {
    auto r = make_rc(3, "", "1:0");  // p = 1, rigging 0
    REQUIRE(rc::is_valid(r));
    auto o = bij::delta_theta(r);
    CHECK(o.letter == 1);
    CHECK(o.rc == make_rc(2, "", "1:0"));
    auto e = bij::delta_theta(make_rc(1, "", ""));
    CHECK(e.letter == 1);
    CHECK(e.rc == RiggedConfig{});
}

TEST_CASE("boomerang restart") {
    auto o = bij::delta_theta(fixture("boomerang"));
    CHECK(o.letter == 13);
    const auto& six = o.marking.tab(1)[0];
    CHECK(six.len == 6);
    CHECK(six.marks == std::vector<int>{2, 3, 4, 7, 8, 9});
    CHECK(o.marking.tab(1)[1].marks.empty());
}

TEST_CASE("BM-5 example first step returns 5") {
    auto o = bij::delta_theta(fixture("bm5"));
    CHECK(o.letter == 5);
    CHECK(o.marking.str(3).len == 5);
    CHECK_FALSE(o.marking.has(5));
}

TEST_CASE("q-singular rigging after inactivation") {
    auto o = bij::delta_theta(fixture("bm8c"));
    CHECK(o.letter == 12);
    CHECK(o.marking.str(8).inactive);
    CHECK(o.rc == make_rc(4, "6:2", "2:0 2:0 1:0"));
    // the box-deleted 6-string is left q-singular
    CHECK(rc::vacancy(o.rc, 1, 6) - o.rc.nu1[0].rig == 1);
}

TEST_CASE("boxes removed per letter") {
    CHECK(bij::boxes_removed(1) == std::pair{0, 0});
    CHECK(bij::boxes_removed(2) == std::pair{0, 1});
    CHECK(bij::boxes_removed(7) == std::pair{3, 2});
    CHECK(bij::boxes_removed(14) == std::pair{6, 4});
    CHECK(bij::boxes_removed(kEmpty) == std::pair{3, 2});
}

TEST_CASE("VC tables") {
    bij::MarkingState none;
    auto one = bij::vacancy_changes(1, none, 5);
    for (int i = 1; i <= 5; ++i) {
        CHECK(one.d1[i] == 0);
        CHECK(one.d2[i] == -1);
    }
    auto empty = bij::vacancy_changes(kEmpty, none, 5);
    for (int i = 1; i <= 5; ++i) CHECK(empty.d2[i] == 0);

    // letter 2 with i1 = 2: -3 (i >= 6), -2 (i = 5), -1 (i = 4) | +1 (i >= 2)
    auto r = make_rc(4, "", "2:0");
    bij::MarkingState st = bij::init_state(r);
    Letter b = bij::run_box_marking(r, st);
    REQUIRE(b == 2);
    auto two = bij::vacancy_changes(b, st, 8);
    CHECK(std::vector<int>(two.d1.begin() + 1, two.d1.end()) == std::vector<int>{0, 0, 0, -1, -2, -3, -3, -3});
    CHECK(std::vector<int>(two.d2.begin() + 1, two.d2.end()) == std::vector<int>{-1, 1, 1, 1, 1, 1, 1, 1});
    CHECK_THROWS_AS(bij::vacancy_changes(5, st, 8), RuleError);
}

TEST_CASE("charge drops by the number of nu2 strings at every step") {
    for (const char* name : {"ex_def", "bm2a", "bm3", "bm4c", "bm4d", "bm8a", "bm8b", "boomerang"}) {
        RiggedConfig cur = fixture(name);
        while (cur.L > 0) {
            auto o = bij::delta_theta(cur);
            CAPTURE(name);
            CHECK(rc::charge(cur) - rc::charge(o.rc) == -int(cur.nu2.size()) + (o.letter == kEmpty));
            cur = o.rc;
        }
    }
}
