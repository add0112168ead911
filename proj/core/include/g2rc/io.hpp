#pragma once
// JSON forms: RC {"L","nu1":[{"len","rig"}],"nu2"}, paths ["1".."14","empty"], weights {"l1","l2"}.
#include <stdexcept>
#include <string>

#include "g2rc/rigged_config.hpp"

namespace g2rc {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace io {

std::string rc_to_json(const RiggedConfig& r, int indent = -1);
RiggedConfig rc_from_json(const std::string& text);

std::string path_to_json(const Path& p);
Path path_from_json(const std::string& text);

std::string weight_to_json(Weight w);

// "a,b" -> a*L1 + b*L2
Weight parse_lambda(const std::string& s);

std::string read_file(const std::string& file);
void write_file(const std::string& file, const std::string& text);

}  // namespace io
}  // namespace g2rc
