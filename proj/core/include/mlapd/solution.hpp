#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mlapd/instance.hpp"

namespace mlapd {

struct Transmission {
    Rat time;
    std::vector<VertexId> vertices;  // sorted ascending

    bool operator==(const Transmission&) const = default;
};

struct Solution {
    std::vector<Transmission> transmissions;
    std::map<RequestId, std::size_t> served;  // request -> transmission index
    Rat total_cost = 0;
};

struct RequestVerdict {
    RequestId request;
    bool servable;       // some transmission within [arrival, deadline] contains the vertex
    bool mapping_valid;  // the stored served[] entry actually serves the request
};

struct FeasibilityReport {
    bool feasible = false;      // every request is servable
    bool structure_ok = false;  // connectivity, increasing times, cost arithmetic, mapping
    std::vector<RequestVerdict> requests;
    std::vector<std::string> issues;
};

FeasibilityReport validate_solution(const Instance& instance, const Solution& solution);

/// One line per transmission: "t <time> : <id> <id> ...".
std::string serialize_solution(const Solution& solution);

}  // namespace mlapd
