#include "g2rc/crystal.hpp"

#include <sstream>
#include <utility>

namespace g2rc::crystal {

namespace {

struct Edge { int i; Letter from, to; };

constexpr Edge kEdges[] = {
    {1, 2, 3}, {1, 3, 4}, {1, 4, 6}, {1, 5, 7}, {1, 7, 9}, {1, 10, 11}, {1, 11, 12}, {1, 12, 13},
    {2, 1, 2}, {2, 4, 5}, {2, 6, 8}, {2, 8, 10}, {2, 9, 11}, {2, 13, 14},
    {0, 10, 2}, {0, 11, 3}, {0, 12, 4}, {0, 13, 6}, {0, 14, kEmpty}, {0, kEmpty, 1},
};

}  // namespace

bool valid(Letter b) { return b >= 1 && b <= kEmpty; }

std::optional<Letter> f(int i, Letter b) {
    for (const auto& ed : kEdges)
        if (ed.i == i && ed.from == b) return ed.to;
    return std::nullopt;
}

std::optional<Letter> e(int i, Letter b) {
    for (const auto& ed : kEdges)
        if (ed.i == i && ed.to == b) return ed.from;
    return std::nullopt;
}

int epsilon(int i, Letter b) {
    int k = 0;
    for (auto c = e(i, b); c; c = e(i, *c)) ++k;
    return k;
}

int phi(int i, Letter b) {
    int k = 0;
    for (auto c = f(i, b); c; c = f(i, *c)) ++k;
    return k;
}

Weight weight(Letter b) {
    return {phi(1, b) - epsilon(1, b), phi(2, b) - epsilon(2, b)};
}

std::string name(Letter b) {
    return b == kEmpty ? std::string("empty") : std::to_string(int(b));
}

std::optional<Letter> parse(const std::string& s) {
    if (s == "empty" || s == "0" || s == "\xE2\x88\x85") return kEmpty;
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos == s.size() && v >= 1 && v <= 14) return Letter(v);
    } catch (...) {
    }
    return std::nullopt;
}

std::string to_dot() {
    std::ostringstream os;
    os << "digraph B21 {\n";
    for (Letter b : kAll) os << "  \"" << name(b) << "\";\n";
    for (const auto& ed : kEdges)
        os << "  \"" << name(ed.from) << "\" -> \"" << name(ed.to) << "\" [label=\"" << ed.i << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace g2rc::crystal
