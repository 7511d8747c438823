#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlapd/rational.hpp"
#include "mlapd/tree.hpp"

namespace mlapd {

using RequestId = std::uint32_t;

struct Request {
    RequestId id;
    VertexId vertex;
    Rat arrival;
    Rat deadline;

    bool operator==(const Request&) const = default;
};

struct Instance {
    RootedTree tree;
    std::vector<Request> requests;

    bool operator==(const Instance&) const = default;
};

struct ParseError : std::runtime_error {
    ParseError(std::string message, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Instance file format (UTF-8, '#' starts a comment):
//   tree <n>
//   v <id> <parent-id|-> <cost>     (n lines; the root uses '-')
//   r <id> <vertex-id> <arrival> <deadline>
// Numbers are decimal ("3.25") or fraction ("13/4") strings, parsed exactly.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

std::string serialize_instance(const Instance& instance);

}  // namespace mlapd
