#include "g2rc/rigged_config.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace g2rc {

Configuration RiggedConfig::shape() const {
    Configuration c;
    c.L = L;
    for (const auto& s : nu1) c.nu1.push_back(s.len);
    for (const auto& s : nu2) c.nu2.push_back(s.len);
    std::sort(c.nu1.rbegin(), c.nu1.rend());
    std::sort(c.nu2.rbegin(), c.nu2.rend());
    return c;
}

void RiggedConfig::canonicalize() {
    auto desc = [](const Str& x, const Str& y) { return y < x; };
    std::erase_if(nu1, [](const Str& s) { return s.len <= 0; });
    std::erase_if(nu2, [](const Str& s) { return s.len <= 0; });
    std::sort(nu1.begin(), nu1.end(), desc);
    std::sort(nu2.begin(), nu2.end(), desc);
}

namespace rc {

int vacancy(const Configuration& c, int a, int i) {
    int p = 0;
    if (a == 1) {
        for (int j : c.nu1) p -= 2 * std::min(i, j);
        for (int j : c.nu2) p += std::min(i, 3 * j);
    } else {
        p = c.L;
        for (int j : c.nu1) p += std::min(3 * i, j);
        for (int j : c.nu2) p -= 2 * std::min(i, j);
    }
    return p;
}

int size(const std::vector<int>& part) {
    int n = 0;
    for (int j : part) n += j;
    return n;
}

Weight lambda_of(const Configuration& c) {
    int n1 = size(c.nu1), n2 = size(c.nu2);
    return {-2 * n1 + 3 * n2, c.L + n1 - 2 * n2};
}

int window(const Configuration& c) {
    int m1 = c.nu1.empty() ? 0 : c.nu1.front();
    int m2 = c.nu2.empty() ? 0 : c.nu2.front();
    return std::max(m1, 3 * m2) + 1;
}

bool vacancies_nonnegative(const Configuration& c) {
    int w = window(c);
    for (int a : {1, 2})
        for (int i = 1; i <= w; ++i)
            if (vacancy(c, a, i) < 0) return false;
    return true;
}

bool is_admissible(const Configuration& c, Weight lam) {
    return lambda_of(c) == lam && vacancies_nonnegative(c);
}

bool is_valid(const RiggedConfig& r) {
    Configuration c = r.shape();
    if (!vacancies_nonnegative(c)) return false;
    for (int a : {1, 2})
        for (const auto& s : r.nu(a)) {
            if (s.len <= 0) return false;
            if (s.rig < 0 || s.rig > vacancy(c, a, s.len)) return false;
        }
    return true;
}

int charge_config(const Configuration& c) {
    int q = 0;
    for (int i : c.nu1)
        for (int j : c.nu1) q += std::min(i, j);
    for (int i : c.nu1)
        for (int j : c.nu2) q -= std::min(i, 3 * j);
    for (int i : c.nu2)
        for (int j : c.nu2) q += std::min(i, j);
    q -= c.L * int(c.nu2.size());
    return q;
}

int charge(const RiggedConfig& r) {
    int q = charge_config(r.shape());
    for (int a : {1, 2})
        for (const auto& s : r.nu(a)) q += s.rig;
    return q;
}

std::pair<int, int> box_counts(Weight lam, int L) {
    return {3 * L - 2 * lam.l1 - 3 * lam.l2, 2 * L - lam.l1 - 2 * lam.l2};
}

namespace {

void partitions(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions(n, n, cur, out);
    return out;
}

}  // namespace

std::vector<Configuration> enumerate_configs(Weight lam, int L, int max_l) {
    if (L > max_l) throw ResourceError("configuration enumeration: L exceeds bound " + std::to_string(max_l));
    std::vector<Configuration> out;
    auto [n1, n2] = box_counts(lam, L);
    if (n1 < 0 || n2 < 0 || !lam.dominant()) return out;
    auto p1 = partitions(n1), p2 = partitions(n2);
    for (const auto& a : p1)
        for (const auto& b : p2) {
            Configuration c{L, a, b};
            if (is_admissible(c, lam)) out.push_back(std::move(c));
        }
    return out;
}

std::vector<RiggedConfig> enumerate_rc(Weight lam, int L, int max_l) {
    std::vector<RiggedConfig> out;
    for (const auto& c : enumerate_configs(lam, L, max_l)) {
        // Blocks of equal length, riggings weakly decreasing within a block.
        struct Block { int a, len, mult, p; };
        std::vector<Block> blocks;
        for (int a : {1, 2}) {
            const auto& part = c.nu(a);
            for (std::size_t k = 0; k < part.size();) {
                std::size_t e = k;
                while (e < part.size() && part[e] == part[k]) ++e;
                blocks.push_back({a, part[k], int(e - k), vacancy(c, a, part[k])});
                k = e;
            }
        }
        RiggedConfig r;
        r.L = L;
        std::function<void(std::size_t)> rec = [&](std::size_t bi) {
            if (bi == blocks.size()) {
                out.push_back(r);
                return;
            }
            const auto& b = blocks[bi];
            auto& nu = r.nu(b.a);
            std::function<void(int, int)> fill = [&](int left, int cap) {
                if (left == 0) {
                    rec(bi + 1);
                    return;
                }
                for (int v = cap; v >= 0; --v) {
                    nu.push_back({b.len, v});
                    fill(left - 1, v);
                    nu.pop_back();
                }
            };
            fill(b.mult, b.p);
        };
        rec(0);
    }
    return out;
}

std::vector<Weight> dominant_weights(int L) {
    std::vector<Weight> out;
    for (int l1 = 0; 2 * l1 <= 3 * L; ++l1)
        for (int l2 = 0; 3 * l2 <= 3 * L; ++l2) {
            auto [n1, n2] = box_counts({l1, l2}, L);
            if (n1 >= 0 && n2 >= 0) out.push_back({l1, l2});
        }
    return out;
}

std::string to_string(const RiggedConfig& r) {
    std::ostringstream os;
    os << "L=" << r.L << " nu1=[";
    for (std::size_t k = 0; k < r.nu1.size(); ++k) os << (k ? " " : "") << r.nu1[k].len << ":" << r.nu1[k].rig;
    os << "] nu2=[";
    for (std::size_t k = 0; k < r.nu2.size(); ++k) os << (k ? " " : "") << r.nu2[k].len << ":" << r.nu2[k].rig;
    os << "]";
    return os.str();
}

}  // namespace rc
}  // namespace g2rc
