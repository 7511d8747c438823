#include "mlapd/checks.hpp"

#include <algorithm>
#include <optional>

namespace mlapd {

namespace {

bool contains(const std::vector<std::uint32_t>& sorted, std::uint32_t v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::string at(const TraceRecord& rec) {
    return "transmission " + std::to_string(rec.index) + " (t=" + format_rational(rec.time) + ")";
}

Rat cost_of_set(const RootedTree& tree, const std::vector<std::uint32_t>& vs) {
    Rat total = 0;
    for (auto v : vs) total += tree.cost(v);
    return total;
}

}  // namespace

CheckResult check_structure(const Instance& instance, const std::vector<TraceRecord>& trace) {
    const auto& tree = instance.tree;
    CheckResult result;

    for (const auto& rec : trace) {
        // root-containing subtree
        if (!contains(rec.expansion, tree.root()))
            result.fail(at(rec) + ": expansion set misses the root");
        for (std::uint32_t v : rec.expansion) {
            if (auto p = tree.parent(v); p && !contains(rec.expansion, *p))
                result.fail(at(rec) + ": expansion vertex " + std::to_string(tree.id_at(v)) +
                            " lacks its parent in V^E");
        }

        for (std::uint32_t v : rec.investment)
            if (contains(rec.expansion, v))
                result.fail(at(rec) + ": vertex " + std::to_string(tree.id_at(v)) +
                            " is in both V^E and V^I");

        // investments stay strictly below their investor
        for (std::uint32_t v = 0; v < tree.size(); ++v) {
            for (std::uint32_t w : rec.invested_after[v]) {
                if (w == v || !tree.is_ancestor_or_self(v, w))
                    result.fail(at(rec) + ": I_" + std::to_string(tree.id_at(v)) +
                                " contains non-descendant " + std::to_string(tree.id_at(w)));
            }
        }

        // cost identity and classification
        if (rec.cost_tree != cost_of_set(tree, rec.expansion) + cost_of_set(tree, rec.investment))
            result.fail(at(rec) + ": c(T) != c(V^E) + c(V^I)");
        auto [ant, unant] = classify(rec.expansion, rec.next_before, rec.time);
        if (ant != rec.anticipated || unant != rec.unanticipated)
            result.fail(at(rec) + ": anticipated/unanticipated split mismatch");
        if (rec.cost_unanticipated != cost_of_set(tree, rec.unanticipated))
            result.fail(at(rec) + ": recorded c(unanticipated) mismatch");

        // price bounds at rest
        for (std::uint32_t v = 0; v < tree.size(); ++v) {
            if (rec.ell_after[v] < 0 || rec.ell_after[v] > tree.cost(v))
                result.fail(at(rec) + ": ell out of [0, c] at vertex " +
                            std::to_string(tree.id_at(v)));
        }

        // next values do not decrease upward along investment chains
        for (std::uint32_t u : rec.expansion) {
            for (std::uint32_t v : rec.expansion) {
                if (u == v || !tree.is_ancestor_or_self(u, v)) continue;
                bool meets = false;
                for (std::uint32_t w : rec.invested_after[u])
                    if (tree.is_ancestor_or_self(v, w)) {
                        meets = true;
                        break;
                    }
                if (meets && rec.next_after[u] < rec.next_after[v])
                    result.fail(at(rec) + ": next_" + std::to_string(tree.id_at(u)) + " < next_" +
                                std::to_string(tree.id_at(v)) + " despite investment below " +
                                std::to_string(tree.id_at(v)));
            }
        }
    }
    return result;
}

CheckResult check_anticipated_history(const std::vector<TraceRecord>& trace) {
    CheckResult result;
    std::vector<char> expanded_before;
    for (const auto& rec : trace) {
        if (expanded_before.empty()) expanded_before.assign(rec.next_before.size(), 0);
        for (std::uint32_t v : rec.anticipated)
            if (!expanded_before[v])
                result.fail(at(rec) + ": anticipated vertex index " + std::to_string(v) +
                            " never expanded before");
        for (std::uint32_t v : rec.expansion) expanded_before[v] = 1;
    }
    return result;
}

BudgetAccounting check_budget_accounting(const RootedTree& tree,
                                         const std::vector<TraceRecord>& trace,
                                         const Rat& factor) {
    BudgetAccounting acc{true, 0, 0};
    Rat expansion_total = 0;
    for (const auto& rec : trace) {
        acc.invested += cost_of_set(tree, rec.investment);
        expansion_total += cost_of_set(tree, rec.expansion);
    }
    acc.cap = factor * expansion_total;
    acc.ok = acc.invested <= acc.cap;
    return acc;
}

AmortizedBound check_amortized_bound(const RootedTree& tree,
                                     const std::vector<TraceRecord>& trace, const Rat& factor) {
    AmortizedBound bound{true, 0, 0, 0};
    for (const auto& rec : trace) {
        bound.alg_cost += rec.cost_tree;
        bound.unanticipated_total += rec.cost_unanticipated;
    }
    bound.cap = factor * bound.unanticipated_total;
    bound.ok = bound.alg_cost <= bound.cap;
    return bound;
}

CheckResult check_budget_floor_depth(const RootedTree& tree,
                                     const std::vector<TraceRecord>& trace, const Rat& theta) {
    CheckResult result;
    for (const auto& rec : trace) {
        for (std::uint32_t v : rec.anticipated) {
            if (cost_of_set(tree, rec.invested_before[v]) < theta * tree.cost(v))
                result.fail(at(rec) + ": c(I) < theta*c at anticipated vertex " +
                            std::to_string(tree.id_at(v)));
        }
    }
    return result;
}

CheckResult check_budget_floor_caterpillar(const RootedTree& tree, const Decomposition& decomp,
                                           const std::vector<TraceRecord>& trace,
                                           const Rat& theta1, const Rat& theta2) {
    CheckResult result;
    struct LastExpansion {
        bool seen = false;
        bool disproportional = false;
    };
    std::vector<LastExpansion> last(tree.size());

    for (const auto& rec : trace) {
        auto recently_disproportional = [&](std::uint32_t w) {
            return contains(rec.anticipated, w) && last[w].seen && last[w].disproportional;
        };
        for (std::uint32_t v : rec.anticipated) {
            if (recently_disproportional(v)) {
                if (cost_of_set(tree, rec.invested_before[v]) < theta1 * prefix_cost(decomp, tree, v))
                    result.fail(at(rec) + ": c(I) < theta1*c(p(v)) at recently disproportional " +
                                std::to_string(tree.id_at(v)));
                continue;
            }
            bool any_rd_below_on_path = false;
            for (std::uint32_t w : decomp.paths[decomp.path_of[v]]) {
                if (!tree.is_ancestor_or_self(v, w)) continue;
                if (recently_disproportional(w)) {
                    any_rd_below_on_path = true;
                    break;
                }
            }
            if (!any_rd_below_on_path &&
                cost_of_set(tree, rec.invested_before[v]) < theta2 * tree.cost(v))
                result.fail(at(rec) + ": c(I) < theta2*c(v) at anticipated vertex " +
                            std::to_string(tree.id_at(v)));
        }
        for (std::uint32_t v : rec.expansion) {
            last[v].seen = true;
            last[v].disproportional = contains(rec.disproportional, v);
        }
    }
    return result;
}

Rat unanticipated_total(const RootedTree& tree, const std::vector<TraceRecord>& trace) {
    Rat total = 0;
    for (const auto& rec : trace) total += cost_of_set(tree, rec.unanticipated);
    return total;
}

}  // namespace mlapd
