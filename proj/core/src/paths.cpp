#include "g2rc/paths.hpp"

#include <array>

namespace g2rc::paths {

namespace {

// Returns the index of the factor e_i (or f_i) acts on, or -1 if the result vanishes.
// Prefix (eps, phi) are built with the two-factor rule:
//   e_i(b1 (x) b2) = e_i b1 (x) b2 if phi_i(b2) < eps_i(b1), else b1 (x) e_i b2.
int acting_index(int i, const Path& p, bool raise) {
    const int n = int(p.size());
    std::vector<int> eps(n), ph(n);
    for (int k = 0; k < n; ++k) {
        int e2 = crystal::epsilon(i, p[k]), f2 = crystal::phi(i, p[k]);
        if (k == 0) {
            eps[k] = e2;
            ph[k] = f2;
        } else {
            int e1 = eps[k - 1], f1 = ph[k - 1];
            eps[k] = e2 + std::max(0, e1 - f2);
            ph[k] = f1 + std::max(0, f2 - e1);
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        if (k == 0) return (raise ? eps[0] : ph[0]) > 0 ? 0 : -1;
        int e1 = eps[k - 1], f1 = ph[k - 1];
        int e2 = crystal::epsilon(i, p[k]), f2 = crystal::phi(i, p[k]);
        bool left = raise ? (f2 < e1) : (f2 <= e1);
        if (!left) return (raise ? e2 : f2) > 0 ? k : -1;
        (void)f1;
    }
    return -1;
}

std::optional<Path> act(int i, const Path& p, bool raise) {
    if (p.empty()) throw std::invalid_argument("tensor operator on empty path");
    int k = acting_index(i, p, raise);
    if (k < 0) return std::nullopt;
    auto c = raise ? crystal::e(i, p[k]) : crystal::f(i, p[k]);
    if (!c) return std::nullopt;
    Path q = p;
    q[k] = *c;
    return q;
}

// S0 and S1 as membership tables indexed by letters 1..14.
struct Tables {
    std::array<std::array<std::uint8_t, 15>, 15> cls{};
    Tables() {
        for (auto& row : cls) row.fill(2);
        auto set = [&](int i, int j, int c) { cls[i][j] = std::uint8_t(c); };
        // S0
        set(1, 1, 0);
        set(14, 14, 0);
        for (int i : {1, 2})
            for (int j = 2; j <= 14; ++j) set(i, j, 0);
        for (int i : {3, 4, 6})
            for (int j = 6; j <= 14; ++j)
                if (j != 7) set(i, j, 0);
        for (int i : {5, 8, 10})
            for (int j = 10; j <= 14; ++j) set(i, j, 0);
        for (int i : {7, 9, 11, 12, 13})
            for (int j : {13, 14}) set(i, j, 0);
        // S1
        set(2, 1, 1);
        for (int i : {3, 4, 6})
            for (int j = 1; j <= 7; ++j)
                if (j != 6) set(i, j, 1);
        for (int i : {5, 8, 10})
            for (int j = 2; j <= 9; ++j) set(i, j, 1);
        for (int i : {7, 9, 11, 12, 13})
            for (int j = 6; j <= 12; ++j)
                if (j != 7) set(i, j, 1);
        for (int j = 10; j <= 13; ++j) set(14, j, 1);
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

void dfs(Weight lam, int left, Path& cur, std::vector<Path>& out) {
    if (left == 0) {
        if (lam == Weight{}) out.push_back(cur);
        return;
    }
    for (Letter b : crystal::kAll) {
        Weight mu = lam - crystal::weight(b);
        if (!mu.dominant()) continue;
        if (crystal::epsilon(1, b) > mu.l1 || crystal::epsilon(2, b) > mu.l2) continue;
        cur.push_back(b);
        dfs(mu, left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::optional<Path> tensor_e(int i, const Path& p) { return act(i, p, true); }
std::optional<Path> tensor_f(int i, const Path& p) { return act(i, p, false); }

Weight path_weight(const Path& p) {
    Weight w;
    for (Letter b : p) w += crystal::weight(b);
    return w;
}

bool is_classically_restricted(const Path& p, Weight lam) {
    if (!lam.dominant()) throw std::invalid_argument("non-dominant weight");
    if (path_weight(p) != lam) return false;
    if (p.empty()) return true;
    return !tensor_e(1, p) && !tensor_e(2, p);
}

bool is_classically_restricted_rec(const Path& p, Weight lam) {
    if (!lam.dominant()) throw std::invalid_argument("non-dominant weight");
    for (Letter b : p) {
        Weight mu = lam - crystal::weight(b);
        if (!mu.dominant()) return false;
        if (crystal::epsilon(1, b) > mu.l1 || crystal::epsilon(2, b) > mu.l2) return false;
        lam = mu;
    }
    return lam == Weight{};
}

std::vector<Path> enumerate_paths(Weight lam, int L, int max_l) {
    if (L > max_l) throw ResourceError("path enumeration: L exceeds bound " + std::to_string(max_l));
    std::vector<Path> out;
    if (!lam.dominant() || L < 0) return out;
    Path cur;
    dfs(lam, L, cur, out);
    return out;
}

std::vector<Path> enumerate_paths_brute(Weight lam, int L) {
    std::vector<Path> out;
    Path p(L, 1);
    std::vector<int> idx(L, 0);
    while (true) {
        for (int k = 0; k < L; ++k) p[k] = crystal::kAll[idx[k]];
        if (is_classically_restricted(p, lam)) out.push_back(p);
        int k = L - 1;
        while (k >= 0 && ++idx[k] == kNumLetters) idx[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

int energy_class(Letter b1, Letter b2) { return tables().cls[b1][b2]; }

int local_energy(Letter b1, Letter b2) {
    bool e1 = b1 == kEmpty, e2 = b2 == kEmpty;
    if (e1 && e2) return -2;
    if (e1 || e2) return -1;
    return -energy_class(b1, b2);
}

int energy(const Path& p) {
    int d = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        Letter next = j + 1 < p.size() ? p[j + 1] : Letter(1);
        d += int(j + 1) * local_energy(p[j], next);
    }
    return d;
}

}  // namespace g2rc::paths
