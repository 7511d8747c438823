#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlapd/instance.hpp"
#include "mlapd/solution.hpp"

namespace mlapd {

// Per-vertex memory kept across transmissions: remaining price ell, the
// memorized earliest missed deadline (next), and the vertices invested in most
// recently (I). All vectors are indexed by vertex index.
struct AlgoState {
    std::vector<Rat> ell;
    std::vector<ExtRat> next;
    std::vector<std::vector<std::uint32_t>> invested;  // each sorted ascending

    explicit AlgoState(const RootedTree& tree);
};

// Everything observable about one transmission, including the state snapshots
// taken at entry (next_before, invested_before) and at exit of the deadline
// handler. Vertices are stored as indices into the instance tree.
struct TraceRecord {
    std::size_t index = 0;  // 1-based transmission number
    Rat time;
    RequestId critical_request = 0;
    std::vector<std::uint32_t> expansion;        // V^E, sorted
    std::vector<std::uint32_t> investment;       // V^I, sorted
    std::vector<std::uint32_t> anticipated;      // next_before <= time
    std::vector<std::uint32_t> unanticipated;    // the rest of V^E
    std::vector<std::uint32_t> disproportional;  // deepest expansion vertex per path (caterpillar)
    Rat cost_tree;           // c(V^E) + c(V^I)
    Rat cost_unanticipated;  // c(unanticipated)
    std::vector<ExtRat> next_before;
    std::vector<std::vector<std::uint32_t>> invested_before;
    std::vector<Rat> ell_after;
    std::vector<ExtRat> next_after;
    std::vector<std::vector<std::uint32_t>> invested_after;
};

// An online policy supplies the investment budgets; the deadline machinery
// (critical path, expansion, bottom-up investment, bookkeeping) is shared.
// One policy instance drives one simulation at a time.
class Policy {
public:
    virtual ~Policy() = default;
    virtual std::string name() const = 0;

    /// Called once per transmission after the expansion stage fixes V^E.
    virtual void begin_transmission(const std::vector<char>& /*in_expansion*/) {}

    /// Budget assigned to expansion vertex v in its investment stage.
    virtual Rat budget(std::uint32_t v) const = 0;

    /// If set, v adopts the investments of the returned vertex instead of
    /// funding `target`, and its investment loop ends.
    virtual std::optional<std::uint32_t> delegation_source(std::uint32_t /*v*/,
                                                           std::uint32_t /*target*/) const {
        return std::nullopt;
    }

    /// Vertices that received the enlarged per-path budget this transmission.
    virtual std::vector<std::uint32_t> disproportional_vertices() const { return {}; }
};

/// Serves the critical path only: every budget is zero.
class BaselinePolicy : public Policy {
public:
    std::string name() const override { return "baseline"; }
    Rat budget(std::uint32_t) const override { return 0; }
};

struct SimulationResult {
    Solution solution;
    std::vector<TraceRecord> trace;
};

// Runs the online process: repeatedly picks the unserved request that is
// earliest in the strict (deadline, id) order, fires the deadline handler at
// that time, and records the transmission. Throws std::logic_error if an
// internal invariant breaks (diagnostic, should be unreachable).
SimulationResult simulate(const Instance& instance, Policy& policy);

/// Arrived, unserved requests located in the subtree of v but outside the
/// covered vertex set, ordered by (deadline, id). Returns request positions.
std::vector<std::size_t> pending_below(const Instance& instance, const Rat& now,
                                       std::uint32_t v, const std::vector<char>& request_done,
                                       const std::vector<char>& vertex_covered);

/// Splits V^E into (anticipated, unanticipated) by next_before <= time.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> classify(
    const std::vector<std::uint32_t>& expansion, const std::vector<ExtRat>& next_before,
    const Rat& time);

}  // namespace mlapd
