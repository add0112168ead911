#include "g2rc/inverse.hpp"

#include <map>
#include <sstream>

#include "g2rc/bijection.hpp"

namespace g2rc::inv {

namespace {

// Every way to put d boxes onto the strings of one tableau: an amount per existing
// string, the remainder split into new strings (weakly decreasing).
void grow(const std::vector<Str>& strs, int a, int d, std::size_t k, std::vector<BoxAdd>& cur,
          std::vector<std::vector<BoxAdd>>& out) {
    if (k == strs.size()) {
        // remainder as a partition into new strings
        std::vector<BoxAdd> base = cur;
        auto parts = [&](auto&& self, int left, int maxp) -> void {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (int p = std::min(left, maxp); p >= 1; --p) {
                cur.push_back({a, 0, p, 0});
                self(self, left - p, p);
                cur.pop_back();
            }
        };
        parts(parts, d, d);
        cur = base;
        return;
    }
    grow(strs, a, d, k + 1, cur, out);
    for (int x = 1; x <= d; ++x) {
        cur.push_back({a, int(k) + 1, x, 0});  // from = index+1 while building
        grow(strs, a, d - x, k + 1, cur, out);
        cur.pop_back();
    }
}

std::string plan_string(const std::vector<BoxAdd>& plan) {
    std::ostringstream os;
    for (std::size_t k = 0; k < plan.size(); ++k) {
        const auto& x = plan[k];
        os << (k ? " " : "") << "nu" << x.a << ":" << x.from << "+" << x.k << "(" << x.rig << ")";
    }
    return plan.empty() ? "-" : os.str();
}

}  // namespace

InverseStep delta_theta_inv_step(const RiggedConfig& r, Letter b) {
    if (!crystal::valid(b)) throw std::invalid_argument("bad letter");
    InverseStep res;
    RiggedConfig rc = r;
    rc.canonicalize();
    Weight lam = rc::lambda_of(rc.shape()) + crystal::weight(b);
    if (!lam.dominant())
        throw InverseError("letter " + crystal::name(b) + " leaves the dominant chamber");

    auto [d1, d2] = bij::boxes_removed(b);
    std::vector<std::vector<BoxAdd>> g1, g2;
    std::vector<BoxAdd> cur;
    grow(rc.nu1, 1, d1, 0, cur, g1);
    grow(rc.nu2, 2, d2, 0, cur, g2);

    std::map<RiggedConfig, std::vector<BoxAdd>> found;
    std::map<RiggedConfig, bool> seen;
    for (const auto& p1 : g1)
        for (const auto& p2 : g2) {
            // grown strings carry a placeholder rigging until the vacancies are known
            RiggedConfig big;
            big.L = rc.L + 1;
            std::vector<std::pair<int, int>> grown;  // (a, len) of touched strings
            std::vector<BoxAdd> plan;
            for (int a : {1, 2}) {
                const auto& src = rc.nu(a);
                const auto& pl = a == 1 ? p1 : p2;
                std::vector<int> extra(src.size(), 0);
                for (const auto& x : pl) {
                    if (x.from > 0) extra[x.from - 1] = x.k;
                    else grown.push_back({a, x.k}), plan.push_back({a, 0, x.k, 0});
                }
                for (std::size_t k = 0; k < src.size(); ++k) {
                    if (extra[k] == 0) {
                        big.nu(a).push_back(src[k]);
                    } else {
                        grown.push_back({a, src[k].len + extra[k]});
                        plan.push_back({a, src[k].len, extra[k], 0});
                    }
                }
            }
            Configuration c = big.shape();
            for (auto [a, len] : grown) (a == 1 ? c.nu1 : c.nu2).push_back(len);
            std::sort(c.nu1.rbegin(), c.nu1.rend());
            std::sort(c.nu2.rbegin(), c.nu2.rend());
            if (!rc::vacancies_nonnegative(c)) continue;

            // every grown string was selected at singularity class <= 2
            std::vector<int> vac;
            for (auto [a, len] : grown) vac.push_back(rc::vacancy(c, a, len));
            std::vector<int> cls(grown.size(), 0);
            while (true) {
                RiggedConfig cand = big;
                bool ok = true;
                for (std::size_t k = 0; k < grown.size(); ++k) {
                    int rig = vac[k] - cls[k];
                    if (rig < 0) ok = false;
                    cand.nu(grown[k].first).push_back({grown[k].second, rig});
                    plan[k].rig = rig;
                }
                if (ok && rc::is_valid(cand)) {
                    cand.canonicalize();
                    if (!seen.count(cand)) {
                        seen[cand] = true;
                        ++res.candidates;
                        try {
                            auto o = bij::delta_theta(cand);
                            if (o.letter == b && o.rc == rc) found[cand] = plan;
                        } catch (const RuleError&) {
                        }
                    }
                }
                std::size_t k = 0;
                while (k < cls.size() && cls[k] == 2) cls[k++] = 0;
                if (k == cls.size()) break;
                ++cls[k];
            }
        }

    if (found.size() != 1) {
        std::ostringstream os;
        os << "letter " << crystal::name(b) << " on " << rc::to_string(rc) << ": " << found.size()
           << " preimages among " << res.candidates << " box-add plans";
        for (const auto& [c, pl] : found) os << "\n  " << rc::to_string(c) << "  [" << plan_string(pl) << "]";
        throw InverseError(os.str());
    }
    res.rc = found.begin()->first;
    res.plan = found.begin()->second;
    return res;
}

RiggedConfig phi_inv(const Path& p, std::vector<std::string>* trace) {
    RiggedConfig cur;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        auto s = delta_theta_inv_step(cur, *it);
        if (trace)
            trace->push_back(crystal::name(*it) + ": " + plan_string(s.plan) + " -> " + rc::to_string(s.rc));
        cur = std::move(s.rc);
    }
    return cur;
}

}  // namespace g2rc::inv
