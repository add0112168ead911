// g2rc: enumerate, run Phi and its inverse, verify, sweep, export the crystal graph.
// Exit status: 0 pass, 1 invariant failure, 2 usage or IO error.
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "g2rc/bijection.hpp"
#include "g2rc/harness.hpp"
#include "g2rc/inverse.hpp"
#include "g2rc/io.hpp"

using namespace g2rc;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

std::string row(const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 1; k < v.size(); ++k) s += (k > 1 ? " " : "") + std::to_string(v[k]);
    return s;
}

void trace_step(std::ostream& os, int k, const RiggedConfig& before, const bij::DeltaOutcome& o) {
    int imax = std::max(rc::window(before.shape()), rc::window(o.rc.shape()));
    os << "step " << k << ": " << crystal::name(o.letter) << "\n";
    os << "  marks  " << bij::describe(o.marking) << "\n";
    for (const auto& l : o.marking.log) os << "  rule   " << l << "\n";
    try {
        auto vd = bij::vacancy_changes(o.letter, o.marking, imax);
        os << "  dp1    " << row(vd.d1) << "\n  dp2    " << row(vd.d2) << "\n";
    } catch (const RuleError& e) {
        os << "  dp     " << e.what() << "\n";
    }
    os << "  dalpha " << o.delta_alpha << "\n";
    os << "  ->     " << rc::to_string(o.rc) << "\n";
}

RiggedConfig load_rc(const std::string& file) {
    RiggedConfig r = io::rc_from_json(io::read_file(file));
    if (!rc::is_valid(r)) throw IoError(file + ": not an admissible rigged configuration");
    return r;
}

int cmd_enum_rc(Weight lam, int L, bool js) {
    auto rcs = rc::enumerate_rc(lam, L);
    for (const auto& r : rcs) {
        if (js)
            std::cout << io::rc_to_json(r) << "\n";
        else
            std::cout << rc::to_string(r) << "  charge " << rc::charge(r) << "\n";
    }
    if (!js) std::cout << rcs.size() << " rigged configurations\n";
    return kPass;
}

int cmd_enum_paths(Weight lam, int L, bool js) {
    auto ps = paths::enumerate_paths(lam, L);
    for (const auto& p : ps) {
        if (js)
            std::cout << io::path_to_json(p) << "\n";
        else
            std::cout << io::path_to_json(p) << "  energy " << paths::energy(p) << "\n";
    }
    if (!js) std::cout << ps.size() << " paths\n";
    return kPass;
}

int cmd_phi(const std::string& file, bool trace) {
    RiggedConfig r = load_rc(file);
    Path p;
    RiggedConfig cur = r;
    try {
        for (int k = 1; cur.L > 0; ++k) {
            auto o = bij::delta_theta(cur);
            if (trace) trace_step(std::cout, k, cur, o);
            p.push_back(o.letter);
            cur = std::move(o.rc);
        }
    } catch (const RuleError& e) {
        std::cerr << "phi: " << e.what() << " at " << rc::to_string(cur) << "\n";
        return kFail;
    }
    int q = rc::charge(r), e = paths::energy(p);
    std::cout << io::path_to_json(p) << "\n";
    std::cout << "charge " << q << " energy " << e << "\n";
    return q == e ? kPass : kFail;
}

int cmd_phi_inv(const std::string& file, bool trace) {
    Path p = io::path_from_json(io::read_file(file));
    Weight lam = paths::path_weight(p);
    if (!lam.dominant() || !paths::is_classically_restricted(p, lam)) {
        std::cerr << "phi-inv: path is not classically restricted\n";
        return kUsage;
    }
    std::vector<std::string> lines;
    RiggedConfig r;
    try {
        r = inv::phi_inv(p, trace ? &lines : nullptr);
    } catch (const InverseError& e) {
        std::cerr << "phi-inv: " << e.what() << "\n";
        return kFail;
    }
    for (const auto& l : lines) std::cout << "add " << l << "\n";
    std::cout << io::rc_to_json(r) << "\n";
    return bij::phi(r) == p ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rigged configuration bijection for the G2(1) crystal B(2,1)"};
    app.require_subcommand(1);

    std::string lam_s = "0,0", file, dot = "-", dir = G2RC_FIXTURE_DIR;
    int L = 0, max_l = 5, jobs = 1;
    bool js = false, trace = false, timing = false;
    harness::Options opt;

    auto* erc = app.add_subcommand("enumerate-rc", "List RC(lambda, L)");
    erc->add_option("--lambda", lam_s, "a,b for a*L1 + b*L2")->required();
    erc->add_option("--L", L, "path length")->required()->check(CLI::NonNegativeNumber);
    erc->add_flag("--json", js, "one JSON object per line");

    auto* eps = app.add_subcommand("enumerate-paths", "List P(lambda, L)");
    eps->add_option("--lambda", lam_s, "a,b for a*L1 + b*L2")->required();
    eps->add_option("--L", L, "path length")->required()->check(CLI::NonNegativeNumber);
    eps->add_flag("--json", js, "one JSON array per line");

    auto* phi = app.add_subcommand("phi", "Map a rigged configuration to its path");
    phi->add_option("--rc", file, "RC JSON file")->required();
    phi->add_flag("--trace", trace, "print marks, rules and vacancy changes per step");

    auto* phinv = app.add_subcommand("phi-inv", "Map a path to its rigged configuration");
    phinv->add_option("--path", file, "path JSON file")->required();
    phinv->add_flag("--trace", trace, "print the box adding per letter");

    auto* ver = app.add_subcommand("verify", "Check every invariant on one (lambda, L)");
    ver->add_option("--lambda", lam_s, "a,b for a*L1 + b*L2")->required();
    ver->add_option("--L", L, "path length")->required()->check(CLI::NonNegativeNumber);
    ver->add_flag("--timing", timing, "include wall time (breaks byte-stable output)");
    ver->add_option("--roundtrip-max-L", opt.roundtrip_max_l, "largest L for inverse round trips");
    ver->add_option("--vc-max-L", opt.vc_max_l, "largest L for the VC oracle");

    auto* swp = app.add_subcommand("sweep", "Verify every dominant lambda for L = 0..max-L");
    swp->add_option("--max-L", max_l, "largest L")->required()->check(CLI::NonNegativeNumber);
    swp->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    swp->add_flag("--timing", timing, "include wall time (breaks byte-stable output)");
    swp->add_option("--roundtrip-max-L", opt.roundtrip_max_l, "largest L for inverse round trips");
    swp->add_option("--vc-max-L", opt.vc_max_l, "largest L for the VC oracle");

    auto* fx = app.add_subcommand("fixtures", "Replay the worked-example fixtures");
    fx->add_option("--dir", dir, "fixture directory");

    auto* gr = app.add_subcommand("graph", "Write the crystal graph in DOT");
    gr->add_option("--dot", dot, "output file, - for stdout")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        Weight lam = io::parse_lambda(lam_s);
        if (erc->parsed()) return cmd_enum_rc(lam, L, js);
        if (eps->parsed()) return cmd_enum_paths(lam, L, js);
        if (phi->parsed()) return cmd_phi(file, trace);
        if (phinv->parsed()) return cmd_phi_inv(file, trace);
        if (ver->parsed()) {
            if (!lam.dominant()) throw IoError("lambda must be dominant");
            auto rep = harness::verify(lam, L, opt);
            std::cout << harness::to_json(rep, timing) << "\n";
            return rep.ok() ? kPass : kFail;
        }
        if (swp->parsed()) {
            std::cout << "{\"report\":\"sweep\",\"max_L\":" << max_l
                      << ",\"scope\":\"exhaustive for L <= max_L only; larger L is not checked\"}\n";
            auto reps = harness::sweep(max_l, jobs, opt);
            bool ok = true;
            for (const auto& r : reps) {
                std::cout << harness::to_json(r, timing) << "\n";
                ok = ok && r.ok();
            }
            return ok ? kPass : kFail;
        }
        if (fx->parsed()) {
            bool ok = true;
            for (const auto& r : harness::fixtures_check(dir)) {
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.check;
                if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
                std::cout << "\n";
                ok = ok && r.pass;
            }
            return ok ? kPass : kFail;
        }
        if (gr->parsed()) {
            if (dot == "-")
                std::cout << crystal::to_dot();
            else
                io::write_file(dot, crystal::to_dot());
            return kPass;
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
