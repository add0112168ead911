#pragma once
// Tensor powers of B, classically restricted paths, local energy and energy.
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "g2rc/crystal.hpp"

namespace g2rc {

using Path = std::vector<Letter>;

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace paths {

inline constexpr int kDefaultMaxL = 7;

// Anti-Kashiwara convention, factors associated left to right.
std::optional<Path> tensor_e(int i, const Path& p);
std::optional<Path> tensor_f(int i, const Path& p);

Weight path_weight(const Path& p);

// Direct definition: weight matches and e_1, e_2 both vanish.
bool is_classically_restricted(const Path& p, Weight lam);
// Peel off the first letter; equivalent to the above.
bool is_classically_restricted_rec(const Path& p, Weight lam);

// Depth-first generation pruned by the recursive criterion; canonical order.
std::vector<Path> enumerate_paths(Weight lam, int L, int max_l = kDefaultMaxL);

// Unpruned 15^L scan, kept for testing.
std::vector<Path> enumerate_paths_brute(Weight lam, int L);

int local_energy(Letter b1, Letter b2);
int energy(const Path& p);

// 0, 1 or 2: the H-class of a pair of non-empty letters (H = -class).
int energy_class(Letter b1, Letter b2);

}  // namespace paths
}  // namespace g2rc
