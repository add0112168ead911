#pragma once
// The 15-element crystal B^{2,1} of type G2^(1): boxes 1..14 and the empty box.
#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace g2rc {

// 1..14 are the boxes; kEmpty (15) sorts last so tag order is the canonical order.
using Letter = std::uint8_t;
inline constexpr Letter kEmpty = 15;
inline constexpr int kNumLetters = 15;

struct Weight {
    int l1 = 0, l2 = 0;
    Weight operator+(Weight o) const { return {l1 + o.l1, l2 + o.l2}; }
    Weight operator-(Weight o) const { return {l1 - o.l1, l2 - o.l2}; }
    Weight& operator+=(Weight o) { l1 += o.l1; l2 += o.l2; return *this; }
    bool dominant() const { return l1 >= 0 && l2 >= 0; }
    int operator[](int i) const { return i == 1 ? l1 : l2; }
    auto operator<=>(const Weight&) const = default;
};

namespace crystal {

// cartan[a-1][b-1]; alpha_b is column b.
inline constexpr std::array<std::array<int, 2>, 2> kCartan{{{2, -3}, {-1, 2}}};
inline constexpr std::array<int, 2> kGamma{1, 3};

inline constexpr Weight alpha(int i) {
    return {kCartan[0][i - 1], kCartan[1][i - 1]};
}

// All letters in canonical order.
inline constexpr std::array<Letter, kNumLetters> kAll{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, kEmpty};

bool valid(Letter b);
std::optional<Letter> f(int i, Letter b);
std::optional<Letter> e(int i, Letter b);
int epsilon(int i, Letter b);
int phi(int i, Letter b);
Weight weight(Letter b);

std::string name(Letter b);                // "1".."14", "empty"
std::optional<Letter> parse(const std::string& s);  // accepts "empty", "0", "∅"

std::string to_dot();

}  // namespace crystal
}  // namespace g2rc
