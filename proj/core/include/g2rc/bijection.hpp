#pragma once
// The step delta_theta: box marking, boomerang restarts, rigging adjustment; and Phi.
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2rc/rigged_config.hpp"

namespace g2rc {

struct RuleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace bij {

// A string of nu^(a) during marking.  Marks are stored right to left.
struct MString {
    int len = 0, rig = 0, vac = 0;
    std::vector<int> marks;
    bool inactive = false;

    int cls() const { return vac - rig; }  // 0 singular, 1 q-, 2 qq-singular
    int free() const { return len - int(marks.size()); }
    bool marked(int n) const;
    int rightmost_mark() const { return marks.empty() ? 0 : marks.front(); }
};

struct Where {
    int a = 0, idx = -1;
    explicit operator bool() const { return idx >= 0; }
};

struct MarkingState {
    std::array<std::vector<MString>, 2> nu;  // nu[0] = nu^(1), nu[1] = nu^(2)
    std::array<Where, 11> at{};              // string carrying mark n
    std::array<int, 11> i{};                 // i_n: length of the string carrying mark n
    int col2 = 0;                            // column of [2] in nu^(1), 0 if unmarked
    int idx2 = -1;
    std::vector<std::string> log;

    std::vector<MString>& tab(int a) { return nu[a - 1]; }
    const std::vector<MString>& tab(int a) const { return nu[a - 1]; }
    const MString& str(int n) const { return nu[at[n].a - 1][at[n].idx]; }
    bool has(int n) const { return bool(at[n]); }
    int in(int n) const { return at[n].a; }  // tableau of mark n, 0 if unmarked
};

struct DeltaOutcome {
    Letter letter = 1;
    RiggedConfig rc;
    MarkingState marking;
    int delta_alpha = 0;  // strings of nu^(2) before minus after
};

MarkingState init_state(const RiggedConfig& r);

// Runs [1]..[10]; returns the letter.  The state holds the marks.
Letter run_box_marking(const RiggedConfig& r, MarkingState& st);

// Deletes marked boxes and sets the riggings of shortened strings.
RiggedConfig adjust_riggings(const MarkingState& st, Letter b, const RiggedConfig& r);

DeltaOutcome delta_theta(const RiggedConfig& r);

Path phi(const RiggedConfig& r);

// Per-index vacancy changes predicted from the deleted boxes, for i = 1..imax.
struct VacancyDelta {
    std::vector<int> d1, d2;  // index 0 unused
};
VacancyDelta vacancy_changes(Letter b, const MarkingState& st, int imax);

// Number of boxes removed from each tableau by a step returning b.
std::pair<int, int> boxes_removed(Letter b);

std::string describe(const MarkingState& st);

}  // namespace bij
}  // namespace g2rc
