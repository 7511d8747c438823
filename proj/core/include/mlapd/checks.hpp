#pragma once

#include <string>
#include <vector>

#include "mlapd/engine.hpp"
#include "mlapd/hpd.hpp"

namespace mlapd {

struct CheckResult {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string msg) {
        ok = false;
        violations.push_back(std::move(msg));
    }
    void merge(CheckResult other) {
        ok = ok && other.ok;
        for (auto& v : other.violations) violations.push_back(std::move(v));
    }
};

// Structural facts the deadline handler guarantees on every transmission:
// V^E induces a root-containing subtree; V^E and V^I are disjoint; every I_v
// stays within v's proper subtree; c(T) = c(V^E) + c(V^I); the anticipated /
// unanticipated split matches the next_before snapshot; 0 <= ell_v <= c(v);
// and next values do not decrease upward along investment chains (for
// u, v in V^E with u an ancestor of v and I'_u meeting the subtree of v,
// next'_u >= next'_v).
CheckResult check_structure(const Instance& instance, const std::vector<TraceRecord>& trace);

/// Every anticipated vertex must have been an expansion vertex earlier.
CheckResult check_anticipated_history(const std::vector<TraceRecord>& trace);

struct BudgetAccounting {
    bool ok;
    Rat invested;  // sum of c(V^I) over the run
    Rat cap;       // factor * sum of c(V^E)
};

/// Total investments never exceed factor * total expansion cost
/// (factor = theta, or theta1 + theta2 for the caterpillar policy).
BudgetAccounting check_budget_accounting(const RootedTree& tree,
                                         const std::vector<TraceRecord>& trace,
                                         const Rat& factor);

struct AmortizedBound {
    bool ok;
    Rat alg_cost;
    Rat unanticipated_total;
    Rat cap;  // factor * unanticipated_total
};

/// Full-run amortization: ALG <= factor * sum_i c(unanticipated_i).
AmortizedBound check_amortized_bound(const RootedTree& tree,
                                     const std::vector<TraceRecord>& trace, const Rat& factor);

/// Depth policy floor: anticipated v at t_i has c(I_{v,i}) >= theta * c(v).
CheckResult check_budget_floor_depth(const RootedTree& tree,
                                     const std::vector<TraceRecord>& trace, const Rat& theta);

// Caterpillar policy floors. An anticipated vertex that was the deepest
// expansion vertex of its path at its latest prior expansion time has
// c(I_{v,i}) >= theta1 * c(p(v)); an anticipated vertex with no such recently
// disproportional vertex on its path inside its subtree has
// c(I_{v,i}) >= theta2 * c(v).
CheckResult check_budget_floor_caterpillar(const RootedTree& tree, const Decomposition& decomp,
                                           const std::vector<TraceRecord>& trace,
                                           const Rat& theta1, const Rat& theta2);

/// Sum of c(unanticipated) over the whole trace.
Rat unanticipated_total(const RootedTree& tree, const std::vector<TraceRecord>& trace);

}  // namespace mlapd
