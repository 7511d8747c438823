#pragma once

#include <string>
#include <vector>

#include "mlapd/engine.hpp"

namespace mlapd {

// Stable text form of a run, one block per transmission:
//
//   transmission 1
//   time 1
//   critical 1
//   VE 0 3
//   VI 2
//   A -
//   Abar 0 3
//   costT 3
//   costAbar 2
//   v 0 ell 1 next 3 I 1 2
//   ...one line per vertex, ascending id...
//   <blank line>
//
// Vertex sets print ids ascending, '-' when empty; 'inf' marks an unset timer.
// The format is diffed byte-for-byte in golden tests.
std::string serialize_trace(const Instance& instance, const std::vector<TraceRecord>& trace);

struct TraceDiff {
    bool identical = false;
    std::vector<std::string> differences;  // one entry per differing line
};

TraceDiff diff_trace_text(const std::string& expected, const std::string& actual);

}  // namespace mlapd
