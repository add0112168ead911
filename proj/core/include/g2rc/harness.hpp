#pragma once
// Exhaustive verification of Phi per (lambda, L), sweeps, and fixture replay.
#include <map>
#include <string>
#include <vector>

#include "g2rc/rigged_config.hpp"

namespace g2rc::harness {

struct Counter {
    long checks = 0, fails = 0;
};

struct Failure {
    std::string rc, invariant, detail;
};

struct Options {
    int vc_max_l = 4;         // VC oracle is run up to this L
    int roundtrip_max_l = 4;  // inverse round trips up to this L
    bool structure = true;    // second differences and stabilization
    int max_failures = 20;    // kept in the report; counters keep counting
};

// Counter names, in report order.
inline const std::vector<std::string> kInvariants{
    "forward", "dominance", "admissible", "dc",  "ha",           "dalpha",         "vc",         "convexity",
    "stabilization", "injective", "image", "statistic", "roundtrip_rc", "roundtrip_path", "inverse_gap"};

struct Report {
    Weight lam;
    int L = 0;
    long rc_count = 0, path_count = 0;
    bool bijective = false, statistic_ok = false;
    std::map<std::string, Counter> counters;
    std::vector<Failure> failures;
    double wall_ms = 0;

    bool ok() const;
    // Fails of the forward direction only (inverse gaps are reported apart).
    long forward_fails() const;
};

Report verify(Weight lam, int L, const Options& opt = {});

// Every dominant lambda with n1, n2 >= 0 for each L in [0, max_l]; order is (L, lambda).
std::vector<Report> sweep(int max_l, int jobs = 1, const Options& opt = {});

// One JSON object on one line; timing is left out unless asked for so reports stay byte-stable.
std::string to_json(const Report& r, bool timing = false);

// Second differences of the vacancy numbers and their large-i limits for one configuration.
struct StructureCheck {
    Counter convexity, stabilization;
    std::vector<std::string> why;
};
StructureCheck check_structure(const Configuration& c);

struct FixtureResult {
    std::string name, check;
    bool pass = false;
    std::string detail;
};

// Replays fixtures/manifest.json against the engine.
std::vector<FixtureResult> fixtures_check(const std::string& dir);

}  // namespace g2rc::harness
