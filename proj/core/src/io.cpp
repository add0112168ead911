#include "g2rc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace g2rc::io {

using nlohmann::json;

namespace {

json strings(const std::vector<Str>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back({{"len", s.len}, {"rig", s.rig}});
    return a;
}

std::vector<Str> strings_from(const json& a, const char* key) {
    if (!a.is_array()) throw IoError(std::string("\"") + key + "\" must be an array");
    std::vector<Str> out;
    for (const auto& s : a) {
        if (!s.is_object() || !s.contains("len") || !s.contains("rig"))
            throw IoError(std::string("bad string entry in \"") + key + "\"");
        out.push_back({s.at("len").get<int>(), s.at("rig").get<int>()});
        if (out.back().len <= 0) throw IoError("string length must be positive");
    }
    return out;
}

}  // namespace

std::string rc_to_json(const RiggedConfig& r, int indent) {
    json j = {{"L", r.L}, {"nu1", strings(r.nu1)}, {"nu2", strings(r.nu2)}};
    return j.dump(indent);
}

RiggedConfig rc_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        RiggedConfig r;
        r.L = j.at("L").get<int>();
        if (r.L < 0) throw IoError("L must be nonnegative");
        r.nu1 = strings_from(j.value("nu1", json::array()), "nu1");
        r.nu2 = strings_from(j.value("nu2", json::array()), "nu2");
        r.canonicalize();
        return r;
    } catch (const json::exception& e) {
        throw IoError(std::string("rigged configuration JSON: ") + e.what());
    }
}

std::string path_to_json(const Path& p) {
    json a = json::array();
    for (Letter b : p) a.push_back(crystal::name(b));
    return a.dump();
}

Path path_from_json(const std::string& text) {
    try {
        json a = json::parse(text);
        if (!a.is_array()) throw IoError("path JSON must be an array");
        Path p;
        for (const auto& x : a) {
            std::string s = x.is_string() ? x.get<std::string>() : x.dump();
            auto b = crystal::parse(s);
            if (!b) throw IoError("unknown letter \"" + s + "\"");
            p.push_back(*b);
        }
        return p;
    } catch (const json::exception& e) {
        throw IoError(std::string("path JSON: ") + e.what());
    }
}

std::string weight_to_json(Weight w) { return json{{"l1", w.l1}, {"l2", w.l2}}.dump(); }

Weight parse_lambda(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw IoError("lambda must be written a,b");
    try {
        std::size_t n1 = 0, n2 = 0;
        std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        Weight w{std::stoi(a, &n1), std::stoi(b, &n2)};
        if (n1 != a.size() || n2 != b.size()) throw IoError("lambda must be written a,b");
        return w;
    } catch (const std::logic_error&) {
        throw IoError("lambda must be written a,b");
    }
}

std::string read_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot read " + file);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& file, const std::string& text) {
    std::ofstream out(file);
    if (!out) throw IoError("cannot write " + file);
    out << text;
    if (!out) throw IoError("write failed: " + file);
}

}  // namespace g2rc::io
