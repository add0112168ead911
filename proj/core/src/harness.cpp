#include "g2rc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

#include "g2rc/bijection.hpp"
#include "g2rc/inverse.hpp"
#include "g2rc/io.hpp"
#include "json.hpp"

namespace g2rc::harness {

using json = nlohmann::ordered_json;

bool Report::ok() const {
    for (const auto& [k, c] : counters)
        if (c.fails) return false;
    return true;
}

long Report::forward_fails() const {
    long n = 0;
    for (const auto& [k, c] : counters)
        if (k != "roundtrip_rc" && k != "roundtrip_path" && k != "inverse_gap") n += c.fails;
    return n;
}

StructureCheck check_structure(const Configuration& c) {
    StructureCheck out;
    auto m = [&](int a, int len) {
        return len < 1 ? 0 : int(std::count(c.nu(a).begin(), c.nu(a).end(), len));
    };
    auto p = [&](int a, int i) { return rc::vacancy(c, a, i); };  // the formulas also hold at i = 0
    auto check = [&](Counter& k, bool ok, const std::string& what) {
        ++k.checks;
        if (!ok) {
            ++k.fails;
            out.why.push_back(what);
        }
    };
    int w = rc::window(c) + 2;
    for (int i = 1; i <= w; ++i) {
        std::string at = " at i=" + std::to_string(i);
        check(out.convexity, -p(1, 3 * i - 2) + 2 * p(1, 3 * i - 1) - p(1, 3 * i) == -2 * m(1, 3 * i - 1),
              "p1 second difference around 3i-1" + at);
        check(out.convexity,
              -p(1, 3 * i - 1) + 2 * p(1, 3 * i) - p(1, 3 * i + 1) == -2 * m(1, 3 * i) + m(2, i),
              "p1 second difference around 3i" + at);
        check(out.convexity, -p(1, 3 * i) + 2 * p(1, 3 * i + 1) - p(1, 3 * i + 2) == -2 * m(1, 3 * i + 1),
              "p1 second difference around 3i+1" + at);
        int rhs = 3 * m(1, 3 * i) + 2 * (m(1, 3 * i - 1) + m(1, 3 * i + 1)) + m(1, 3 * i - 2) + m(1, 3 * i + 2) -
                  2 * m(2, i);
        check(out.convexity, -p(2, i - 1) + 2 * p(2, i) - p(2, i + 1) == rhs, "p2 second difference" + at);
    }
    Weight lam = rc::lambda_of(c);
    int m1 = c.nu1.empty() ? 0 : c.nu1.front(), m2 = c.nu2.empty() ? 0 : c.nu2.front();
    int from1 = std::max({3 * m2, m1, 1}), from2 = std::max({m2, (m1 + 2) / 3, 1});
    for (int k = 0; k < 4; ++k) {
        check(out.stabilization, p(1, from1 + k) == lam.l1, "p1 limit at i=" + std::to_string(from1 + k));
        check(out.stabilization, p(2, from2 + k) == lam.l2, "p2 limit at i=" + std::to_string(from2 + k));
    }
    return out;
}

namespace {

struct Ctx {
    Report& rep;
    const Options& opt;
    void pass(const char* k) { ++rep.counters[k].checks; }
    void check(const char* k, bool ok, const RiggedConfig& r, const std::string& detail) {
        auto& c = rep.counters[k];
        ++c.checks;
        if (ok) return;
        ++c.fails;
        if (int(rep.failures.size()) < opt.max_failures) rep.failures.push_back({rc::to_string(r), k, detail});
    }
};

std::string letters(const Path& p) {
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + crystal::name(p[k]);
    return s;
}

// Runs Phi step by step with the per-step checks; returns false on a forward failure.
bool run_forward(Ctx& cx, const RiggedConfig& r, Path& p) {
    RiggedConfig cur = r;
    std::vector<int> before, after;
    while (cur.L > 0) {
        bij::DeltaOutcome o;
        try {
            o = bij::delta_theta(cur);
        } catch (const std::exception& e) {
            cx.check("forward", false, r, std::string(e.what()) + " at " + rc::to_string(cur));
            return false;
        }
        cx.pass("forward");
        Letter b = o.letter;
        Weight lam = rc::lambda_of(cur.shape());
        Weight mu = lam - crystal::weight(b);
        cx.check("dominance", mu.dominant(), r, "letter " + crystal::name(b) + " at " + rc::to_string(cur));
        bool adm = o.rc.L == cur.L - 1 && rc::is_valid(o.rc) && rc::lambda_of(o.rc.shape()) == mu;
        cx.check("admissible", adm, r, "after letter " + crystal::name(b) + ": " + rc::to_string(o.rc));
        int dc = rc::charge(cur) - rc::charge(o.rc);
        int want = -int(cur.nu2.size()) + (b == kEmpty);
        cx.check("dc", dc == want, r,
                 "letter " + crystal::name(b) + ": got " + std::to_string(dc) + " want " + std::to_string(want));

        if (r.L <= cx.opt.vc_max_l) {
            Configuration c0 = cur.shape(), c1 = o.rc.shape();
            int imax = std::max(rc::window(c0), rc::window(c1)) + 2;
            std::string bad;
            try {
                auto vd = bij::vacancy_changes(b, o.marking, imax);
                for (int i = 1; i <= imax && bad.empty(); ++i) {
                    if (rc::vacancy(c1, 1, i) - rc::vacancy(c0, 1, i) != vd.d1[i])
                        bad = "dp1 at i=" + std::to_string(i);
                    else if (rc::vacancy(c1, 2, i) - rc::vacancy(c0, 2, i) != vd.d2[i])
                        bad = "dp2 at i=" + std::to_string(i);
                }
            } catch (const RuleError& e) {
                bad = e.what();
            }
            cx.check("vc", bad.empty(), r, "letter " + crystal::name(b) + ": " + bad);
        }
        before.push_back(int(cur.nu2.size()));
        after.push_back(int(o.rc.nu2.size()));
        p.push_back(b);
        cur = std::move(o.rc);
    }
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        Letter b1 = p[k], b2 = p[k + 1];
        int da = before[k] - after[k];
        int h = after[k] - before[k] + (b1 == kEmpty) - (b2 == kEmpty);
        cx.check("ha", paths::local_energy(b1, b2) == h, r,
                 "H(" + crystal::name(b1) + "," + crystal::name(b2) + ") vs " + std::to_string(h));
        int cls = b1 == kEmpty ? 2 : b2 == kEmpty ? 0 : paths::energy_class(b1, b2);
        cx.check("dalpha", da == cls, r,
                 "pair " + crystal::name(b1) + "," + crystal::name(b2) + ": dalpha " + std::to_string(da));
    }
    return true;
}

}  // namespace

Report verify(Weight lam, int L, const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.lam = lam;
    rep.L = L;
    for (const auto& k : kInvariants) rep.counters[k];
    Ctx cx{rep, opt};

    auto rcs = rc::enumerate_rc(lam, L);
    auto ps = paths::enumerate_paths(lam, L);
    rep.rc_count = long(rcs.size());
    rep.path_count = long(ps.size());

    if (opt.structure)
        for (const auto& c : rc::enumerate_configs(lam, L)) {
            auto s = check_structure(c);
            for (auto [name, cnt] : {std::pair{"convexity", &s.convexity}, {"stabilization", &s.stabilization}}) {
                rep.counters[name].checks += cnt->checks;
                rep.counters[name].fails += cnt->fails;
            }
            for (const auto& w : s.why)
                if (int(rep.failures.size()) < opt.max_failures)
                    rep.failures.push_back({"config", "structure", w});
        }

    std::set<Path> pset(ps.begin(), ps.end()), image;
    bool forward_ok = true;
    for (const auto& r : rcs) {
        Path p;
        if (!run_forward(cx, r, p)) {
            forward_ok = false;
            continue;
        }
        cx.check("injective", image.insert(p).second, r, "path " + letters(p) + " hit twice");
        int q = rc::charge(r), e = paths::energy(p);
        cx.check("statistic", q == e, r,
                 "charge " + std::to_string(q) + " energy " + std::to_string(e) + " path " + letters(p));
    }
    for (const auto& p : ps) {
        bool hit = image.count(p) > 0;
        cx.check("image", hit, RiggedConfig{}, "path " + letters(p) + " not reached");
    }
    for (const auto& p : image) {
        if (!pset.count(p)) cx.check("image", false, RiggedConfig{}, "path " + letters(p) + " outside P");
    }
    rep.bijective = forward_ok && rep.counters["injective"].fails == 0 && rep.counters["image"].fails == 0 &&
                    rep.rc_count == rep.path_count;
    rep.statistic_ok = forward_ok && rep.counters["statistic"].fails == 0;

    if (L >= 1 && L <= opt.roundtrip_max_l) {
        for (const auto& r : rcs) {
            bij::DeltaOutcome o;
            try {
                o = bij::delta_theta(r);
            } catch (const std::exception&) {
                continue;  // already counted as a forward failure
            }
            try {
                auto back = inv::delta_theta_inv(o.rc, o.letter);
                cx.check("roundtrip_rc", back == r, r, "inverse gave " + rc::to_string(back));
                cx.pass("inverse_gap");
            } catch (const InverseError& e) {
                cx.check("inverse_gap", false, r, e.what());
            }
        }
        for (const auto& p : ps) {
            try {
                auto r = inv::phi_inv(p);
                cx.pass("inverse_gap");
                Path q;
                try {
                    q = bij::phi(r);
                } catch (const std::exception& e) {
                    cx.check("roundtrip_path", false, r, std::string("forward: ") + e.what());
                    continue;
                }
                cx.check("roundtrip_path", q == p, r, "path " + letters(p) + " came back as " + letters(q));
            } catch (const InverseError& e) {
                cx.check("inverse_gap", false, RiggedConfig{}, "path " + letters(p) + ": " + e.what());
            }
        }
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<Report> sweep(int max_l, int jobs, const Options& opt) {
    std::vector<std::pair<int, Weight>> cells;
    for (int L = 0; L <= max_l; ++L)
        for (Weight w : rc::dominant_weights(L)) cells.push_back({L, w});
    std::vector<Report> out(cells.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k; (k = next++) < cells.size();) out[k] = verify(cells[k].second, cells[k].first, opt);
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return out;
}

std::string to_json(const Report& r, bool timing) {
    json j;
    j["lambda"] = {{"l1", r.lam.l1}, {"l2", r.lam.l2}};
    j["L"] = r.L;
    j["rc_count"] = r.rc_count;
    j["path_count"] = r.path_count;
    j["bijective"] = r.bijective;
    j["statistic_ok"] = r.statistic_ok;
    j["pass"] = r.ok();
    json c = json::object();
    for (const auto& k : kInvariants) {
        auto it = r.counters.find(k);
        if (it == r.counters.end()) continue;
        c[k] = {{"checks", it->second.checks}, {"fails", it->second.fails}};
    }
    j["counters"] = c;
    json f = json::array();
    for (const auto& x : r.failures) f.push_back({{"rc", x.rc}, {"invariant", x.invariant}, {"detail", x.detail}});
    j["failures"] = f;
    if (timing) j["wall_ms"] = r.wall_ms;
    return j.dump();
}

std::vector<FixtureResult> fixtures_check(const std::string& dir) {
    std::vector<FixtureResult> out;
    json man;
    try {
        man = json::parse(io::read_file(dir + "/manifest.json"));
    } catch (const json::exception& e) {
        throw IoError(dir + "/manifest.json: " + e.what());
    }
    auto path_of = [](const json& a) {
        Path p;
        for (const auto& x : a) {
            auto b = crystal::parse(x.get<std::string>());
            if (!b) throw IoError("bad letter in manifest");
            p.push_back(*b);
        }
        return p;
    };
    for (const auto& m : man) {
        std::string name = m.at("name");
        auto add = [&](std::string check, bool pass, std::string detail = {}) {
            out.push_back({name, std::move(check), pass, std::move(detail)});
        };
        RiggedConfig r;
        try {
            r = io::rc_from_json(io::read_file(dir + "/" + m.at("file").get<std::string>()));
        } catch (const IoError& e) {
            add("load", false, e.what());
            continue;
        }
        Weight lam{m.at("lambda")[0].get<int>(), m.at("lambda")[1].get<int>()};
        Weight got = rc::lambda_of(r.shape());
        add("lambda", got == lam, io::weight_to_json(got));
        if (!m.value("admissible", true)) {
            add("not admissible", !rc::is_admissible(r.shape(), lam));
            continue;
        }
        add("valid", rc::is_valid(r));
        Path p;
        try {
            p = bij::phi(r);
        } catch (const std::exception& e) {
            add("phi", false, e.what());
            continue;
        }
        int q = rc::charge(r), e = paths::energy(p);
        add("charge = energy", q == e, std::to_string(q) + " vs " + std::to_string(e));
        if (m.contains("path")) {
            Path want = path_of(m["path"]);
            add("path", p == want, letters(p));
        }
        if (m.contains("charge")) add("charge", q == m["charge"].get<int>(), std::to_string(q));
        if (m.contains("energy")) add("energy", e == m["energy"].get<int>(), std::to_string(e));
        if (m.contains("config_charge")) {
            int cc = rc::charge_config(r.shape());
            add("config charge", cc == m["config_charge"].get<int>(), std::to_string(cc));
        }
        if (m.contains("first_letter")) {
            Letter b = p.empty() ? 0 : p.front();
            add("first letter", crystal::name(b) == m["first_letter"].get<std::string>(), crystal::name(b));
        }
        for (const auto& c : m.value("counter", json::array())) {
            Path cp = path_of(c.at("path"));
            int ce = paths::energy(cp);
            add("counter path " + letters(cp), ce == c.at("energy").get<int>() && ce != q && cp != p,
                "energy " + std::to_string(ce));
        }
        try {
            add("inverse", inv::phi_inv(p) == r);
        } catch (const InverseError& ex) {
            add("inverse", false, ex.what());
        }
    }
    return out;
}

}  // namespace g2rc::harness
