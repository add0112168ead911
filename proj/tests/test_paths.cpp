#include <map>
#include <set>

#include "doctest.h"
#include "g2rc/paths.hpp"
#include "support.hpp"

using namespace g2rc;
using testing_support::letters;

TEST_CASE("tensor e on small paths") {
    CHECK(paths::tensor_e(2, letters({1, 1})) == std::nullopt);
    CHECK(paths::tensor_f(2, letters({1, 1})) == letters({1, 2}));
    CHECK_FALSE(paths::tensor_e(1, letters({7, 12, 2, 1})));
    CHECK_FALSE(paths::tensor_e(2, letters({7, 12, 2, 1})));
    CHECK_FALSE(paths::tensor_e(1, letters({2, 1})));
    CHECK_THROWS_AS(paths::tensor_e(1, Path{}), std::invalid_argument);
}

TEST_CASE("tensor e and f undo each other") {
    for (Letter a : crystal::kAll)
        for (Letter b : crystal::kAll)
            for (int i : {0, 1, 2}) {
                Path p{a, b};
                if (auto q = paths::tensor_f(i, p)) CHECK(paths::tensor_e(i, *q) == p);
            }
}

TEST_CASE("path weight") {
    CHECK(paths::path_weight(letters({7, 12, 2, 1})) == Weight{2, 0});
    CHECK(paths::path_weight({}) == Weight{});
    CHECK(paths::path_weight(letters({1, 1, 1})) == Weight{0, 3});
}

TEST_CASE("classically restricted") {
    CHECK(paths::is_classically_restricted(letters({7, 12, 2, 1}), {2, 0}));
    CHECK(paths::is_classically_restricted(letters({1, 1, 1}), {0, 3}));
    CHECK_FALSE(paths::is_classically_restricted(letters({2, 1}), {2, 0}));
    CHECK_THROWS_AS(paths::is_classically_restricted(letters({2, 1}), {3, -1}), std::invalid_argument);
}

TEST_CASE("enumerate paths") {
    auto p = paths::enumerate_paths({1, 1}, 3);
    CHECK(std::set<Path>(p.begin(), p.end()) == std::set<Path>{letters({9, 2, 1}), letters({4, 5, 1})});
    CHECK(paths::enumerate_paths({0, 0}, 0) == std::vector<Path>{Path{}});
    auto q = paths::enumerate_paths({2, 0}, 4);
    CHECK(std::find(q.begin(), q.end(), letters({7, 12, 2, 1})) != q.end());
    CHECK(std::is_sorted(q.begin(), q.end()));
    CHECK_THROWS_AS(paths::enumerate_paths({0, 0}, 8), ResourceError);
}

TEST_CASE("direct and recursive criteria agree; pruned enumeration matches brute force" * doctest::timeout(60)) {
    for (int L = 0; L <= 4; ++L) {
        Weight top{3 * L, L};
        for (int l1 = 0; l1 <= top.l1; ++l1)
            for (int l2 = 0; l2 <= top.l2; ++l2) {
                Weight lam{l1, l2};
                auto fast = paths::enumerate_paths(lam, L);
                auto slow = paths::enumerate_paths_brute(lam, L);
                CAPTURE(L);
                CAPTURE(l1);
                CAPTURE(l2);
                CHECK(fast == slow);
                for (const auto& p : slow) CHECK(paths::is_classically_restricted_rec(p, lam));
            }
    }
    // the recursive form rejects exactly what the direct form rejects
    for (Letter a : crystal::kAll)
        for (Letter b : crystal::kAll) {
            Path p{a, b};
            Weight w = paths::path_weight(p);
            if (!w.dominant()) continue;
            CHECK(paths::is_classically_restricted(p, w) == paths::is_classically_restricted_rec(p, w));
        }
}

TEST_CASE("local energy values") {
    CHECK(paths::local_energy(1, 1) == 0);
    CHECK(paths::local_energy(2, 1) == -1);
    CHECK(paths::local_energy(kEmpty, 5) == -1);
    CHECK(paths::local_energy(5, kEmpty) == -1);
    CHECK(paths::local_energy(kEmpty, kEmpty) == -2);
}

TEST_CASE("S0, S1, S2 partition B0 x B0") {
    std::map<int, int> sizes;
    for (Letter a = 1; a <= 14; ++a)
        for (Letter b = 1; b <= 14; ++b) ++sizes[paths::energy_class(a, b)];
    CHECK(sizes[0] + sizes[1] + sizes[2] == 196);
    CHECK(sizes.size() == 3);
}

TEST_CASE("H is constant on classical components") {
    std::set<Path> seen;
    std::map<Path, int> tops;
    for (Letter a = 1; a <= 14; ++a)
        for (Letter b = 1; b <= 14; ++b) {
            Path start{a, b};
            if (seen.count(start)) continue;
            std::vector<Path> todo{start};
            seen.insert(start);
            int h = paths::local_energy(a, b);
            Path top;
            while (!todo.empty()) {
                Path p = todo.back();
                todo.pop_back();
                CHECK(paths::local_energy(p[0], p[1]) == h);
                if (!paths::tensor_e(1, p) && !paths::tensor_e(2, p)) top = p;
                for (int i : {1, 2})
                    for (auto q : {paths::tensor_e(i, p), paths::tensor_f(i, p)})
                        if (q && seen.insert(*q).second) todo.push_back(*q);
            }
            tops[top] = h;
        }
    std::map<Path, int> want{{letters({1, 1}), 0},
                             {letters({2, 1}), -1},
                             {letters({5, 1}), -2},
                             {letters({8, 1}), -2},
                             {letters({14, 1}), -2}};
    CHECK(tops == want);
}

TEST_CASE("energy") {
    CHECK(paths::energy(letters({7, 12, 2, 1})) == -8);
    CHECK(paths::energy(letters({5, 9, 2, 1})) == -8);
    CHECK(paths::energy(letters({1, 1, 1, 1, 1})) == 0);
    CHECK(paths::energy({}) == 0);
}
