#include <sstream>

#include "doctest.h"
#include "g2rc/harness.hpp"
#include "g2rc/io.hpp"
#include "support.hpp"

using namespace g2rc;
using testing_support::fixture;
using testing_support::letters;

TEST_CASE("verify single cells") {
    auto r = harness::verify({2, 0}, 4);
    CHECK(r.bijective);
    CHECK(r.statistic_ok);
    CHECK(r.rc_count == r.path_count);
    CHECK(r.ok());

    auto small = harness::verify({1, 1}, 3);
    CHECK(small.rc_count == 2);
    CHECK(small.path_count == 2);

    auto trivial = harness::verify({0, 0}, 0);
    CHECK(trivial.rc_count == 1);
    CHECK(trivial.path_count == 1);
    CHECK(trivial.bijective);
}

TEST_CASE("sweeps") {
    auto three = harness::sweep(3);
    for (const auto& r : three) CHECK(r.ok());
    auto zero = harness::sweep(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].L == 0);
}

TEST_CASE("reports are byte-identical across thread counts") {
    auto a = harness::sweep(4, 1), b = harness::sweep(4, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(harness::to_json(a[k]) == harness::to_json(b[k]));
    CHECK(harness::to_json(a[3]).find("wall_ms") == std::string::npos);
    CHECK(harness::to_json(a[3], true).find("wall_ms") != std::string::npos);
}

TEST_CASE("fixture replay") {
    auto res = harness::fixtures_check(G2RC_FIXTURE_DIR);
    CHECK(res.size() > 50);
    for (const auto& r : res) {
        CAPTURE(r.name);
        CAPTURE(r.check);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
    CHECK_THROWS_AS(harness::fixtures_check("/nonexistent"), IoError);
}

TEST_CASE("json forms") {
    auto r = fixture("ex_def");
    CHECK(io::rc_from_json(io::rc_to_json(r)) == r);
    CHECK(io::rc_to_json(r) ==
          R"({"L":4,"nu1":[{"len":6,"rig":1},{"len":2,"rig":0}],"nu2":[{"len":2,"rig":0},{"len":2,"rig":0},{"len":1,"rig":1},{"len":1,"rig":0}]})");
    auto p = letters({7, 0, 2, 1});
    CHECK(io::path_to_json(p) == R"(["7","empty","2","1"])");
    CHECK(io::path_from_json(io::path_to_json(p)) == p);
    CHECK(io::weight_to_json({2, -1}) == R"({"l1":2,"l2":-1})");
    CHECK_THROWS_AS(io::rc_from_json("{"), IoError);
    CHECK_THROWS_AS(io::rc_from_json(R"({"nu1":[]})"), IoError);
    CHECK_THROWS_AS(io::path_from_json(R"(["15"])"), IoError);
}

TEST_CASE("lambda argument") {
    CHECK(io::parse_lambda("2,1") == Weight{2, 1});
    CHECK_THROWS_AS(io::parse_lambda("2"), IoError);
    CHECK_THROWS_AS(io::parse_lambda("a,1"), IoError);
    CHECK_THROWS_AS(io::parse_lambda("1,2x"), IoError);
}
