#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mlapd/engine.hpp"
#include "mlapd/solution.hpp"

namespace mlapd {

struct OptLimits {
    std::size_t max_requests = 8;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OptResult {
    Rat cost;
    Solution solution;                                  // minimizing schedule
    std::vector<std::pair<RequestId, Rat>> assignment;  // request -> transmission time
};

// Exact offline optimum. Any transmission serving a request set can be shifted
// to the earliest deadline among them without unserving anything, so candidate
// transmission times are restricted to request deadlines; over those the
// search is an exact dynamic program on subsets of unserved requests.
OptResult exact_opt(const Instance& instance, const OptLimits& limits = {});

struct LowerBoundCheck {
    bool holds;
    Rat unanticipated_total;  // sum of c(unanticipated) over the trace
    Rat opt_cost;
};

/// Checks the chargeable-cost lower bound: sum_i c(unanticipated_i) <= OPT.
LowerBoundCheck unanticipated_lower_bound(const RootedTree& tree,
                                          const std::vector<TraceRecord>& trace,
                                          const OptResult& opt);

}  // namespace mlapd
