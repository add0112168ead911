#pragma once
// The inverse step: box adding driven by the returned letter, and Phi^{-1}.
#include <stdexcept>
#include <string>
#include <vector>

#include "g2rc/rigged_config.hpp"

namespace g2rc {

// No preimage (or more than one) for a (letter, rc) pair.
struct InverseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace inv {

// One way of growing strings: k boxes onto a string of length `from` (0 = a new string).
struct BoxAdd {
    int a = 0, from = 0, k = 0, rig = 0;
};

struct InverseStep {
    RiggedConfig rc;
    std::vector<BoxAdd> plan;
    int candidates = 0;  // box-add plans that were checked
};

InverseStep delta_theta_inv_step(const RiggedConfig& r, Letter b);

inline RiggedConfig delta_theta_inv(const RiggedConfig& r, Letter b) {
    return delta_theta_inv_step(r, b).rc;
}

// Right to left from the empty configuration.  With a trace, one line per letter.
RiggedConfig phi_inv(const Path& p, std::vector<std::string>* trace = nullptr);

}  // namespace inv
}  // namespace g2rc
