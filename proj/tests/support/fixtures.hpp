#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "mlapd/instance.hpp"

namespace mlapd::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(MLAPD_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Instance demo11() { return load_instance(fixture_path("demo11.inst")); }

// the Figure-style tree used by decomposition tests: same shape as demo11,
// unit costs
inline RootedTree figure_tree() {
    std::vector<VertexSpec> specs;
    auto add = [&](VertexId id, std::optional<VertexId> parent) {
        specs.push_back({id, parent, Rat(1)});
    };
    add(0, std::nullopt);
    add(1, 0);
    add(2, 0);
    add(3, 0);
    add(4, 1);
    add(5, 1);
    add(6, 1);
    add(7, 2);
    add(8, 4);
    add(9, 5);
    add(10, 5);
    return RootedTree(std::move(specs));
}

}  // namespace mlapd::testing
