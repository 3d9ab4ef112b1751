#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "facon/facon.hpp"

namespace facon::fixtures {

inline std::string data_path(const std::string& name) { return std::string(FACON_DATA_DIR) + "/" + name + ".map"; }

inline PolynomialMapping load(const std::string& name) {
    std::ifstream in(data_path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_mapping(ss.str());
}

inline MultiPoly x(const std::string& text, std::size_t n) { return parse_polynomial(text, Space::Ambient, n); }
inline MultiPoly c(const std::string& text, std::size_t n) { return parse_polynomial(text, Space::Parameter, n); }
inline MultiPoly a(const std::string& text, std::size_t n) { return parse_polynomial(text, Space::Target, n); }

inline std::vector<BigRational> rationals(std::initializer_list<long> values) {
    std::vector<BigRational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

inline LimitMapping limit_of(std::initializer_list<const char*> comps, std::size_t n,
                             std::vector<std::size_t> nonzero = {}) {
    LimitMapping lm;
    std::vector<bool> used(n, false);
    for (const char* t : comps) {
        lm.components.push_back(c(t, n));
        for (auto v : lm.components.back().variables()) used[v] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) lm.free_params.push_back(i);
    }
    for (auto i : nonzero) lm.constraints.push_back(MultiPoly::variable(Space::Parameter, n, i));
    return lm;
}

inline const std::vector<std::string>& bundled() {
    static const std::vector<std::string> names{"exfacon", "cusp",  "cone",     "whitney",
                                                "plane",   "triple", "identity", "remark"};
    return names;
}

} // namespace facon::fixtures
