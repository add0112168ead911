#pragma once
#include <string>

#include "g2rc/io.hpp"

namespace testing_support {

inline g2rc::RiggedConfig fixture(const std::string& name) {
    return g2rc::io::rc_from_json(g2rc::io::read_file(std::string(G2RC_FIXTURE_DIR) + "/" + name + ".json"));
}

inline g2rc::Path letters(std::initializer_list<int> xs) {
    g2rc::Path p;
    for (int x : xs) p.push_back(x == 0 ? g2rc::kEmpty : g2rc::Letter(x));
    return p;
}

// "6:1 2:0" -> strings
inline std::vector<g2rc::Str> strs(const std::string& s) {
    std::vector<g2rc::Str> out;
    std::size_t k = 0;
    while (k < s.size()) {
        while (k < s.size() && s[k] == ' ') ++k;
        if (k >= s.size()) break;
        std::size_t c = s.find(':', k), e = s.find(' ', c);
        if (e == std::string::npos) e = s.size();
        out.push_back({std::stoi(s.substr(k, c - k)), std::stoi(s.substr(c + 1, e - c - 1))});
        k = e;
    }
    return out;
}

inline g2rc::RiggedConfig make_rc(int L, const std::string& a, const std::string& b) {
    g2rc::RiggedConfig r;
    r.L = L;
    r.nu1 = strs(a);
    r.nu2 = strs(b);
    r.canonicalize();
    return r;
}

}  // namespace testing_support
