#include "mlapd/solution.hpp"

#include <algorithm>
#include <sstream>

namespace mlapd {

FeasibilityReport validate_solution(const Instance& instance, const Solution& solution) {
    const auto& tree = instance.tree;
    FeasibilityReport report;
    report.structure_ok = true;

    auto flag = [&](std::string msg) {
        report.issues.push_back(std::move(msg));
        report.structure_ok = false;
    };

    Rat recomputed_total = 0;
    std::vector<std::vector<std::uint32_t>> indices(solution.transmissions.size());
    for (std::size_t i = 0; i < solution.transmissions.size(); ++i) {
        const auto& tr = solution.transmissions[i];
        if (i > 0 && !(solution.transmissions[i - 1].time < tr.time))
            flag("transmission " + std::to_string(i) + " does not strictly increase in time");

        bool has_root = false;
        for (VertexId id : tr.vertices) {
            auto idx = tree.index_of(id);
            if (!idx) {
                flag("transmission " + std::to_string(i) + " contains unknown vertex " +
                     std::to_string(id));
                continue;
            }
            indices[i].push_back(*idx);
            if (*idx == tree.root()) has_root = true;
        }
        std::sort(indices[i].begin(), indices[i].end());
        if (!has_root)
            flag("transmission " + std::to_string(i) + " does not contain the root");

        // connectivity: every non-root member's parent must also be a member
        for (std::uint32_t idx : indices[i]) {
            auto p = tree.parent(idx);
            if (!p) continue;
            if (!std::binary_search(indices[i].begin(), indices[i].end(), *p))
                flag("transmission " + std::to_string(i) + " is not a rooted subtree: vertex " +
                     std::to_string(tree.id_at(idx)) + " lacks its parent");
        }
        recomputed_total += tree.cost_of(indices[i]);
    }
    if (recomputed_total != solution.total_cost)
        flag("stored total_cost " + format_rational(solution.total_cost) +
             " differs from recomputed " + format_rational(recomputed_total));

    report.feasible = true;
    for (const auto& req : instance.requests) {
        RequestVerdict verdict{req.id, false, true};
        auto vidx = tree.index_of(req.vertex);
        for (std::size_t i = 0; i < solution.transmissions.size() && vidx; ++i) {
            const auto& tr = solution.transmissions[i];
            if (req.arrival <= tr.time && tr.time <= req.deadline &&
                std::binary_search(indices[i].begin(), indices[i].end(), *vidx)) {
                verdict.servable = true;
                break;
            }
        }
        if (auto it = solution.served.find(req.id); it != solution.served.end()) {
            if (it->second >= solution.transmissions.size()) {
                verdict.mapping_valid = false;
            } else {
                const auto& tr = solution.transmissions[it->second];
                verdict.mapping_valid =
                    vidx && req.arrival <= tr.time && tr.time <= req.deadline &&
                    std::binary_search(indices[it->second].begin(), indices[it->second].end(),
                                       *vidx);
            }
            if (!verdict.mapping_valid)
                flag("served[] entry for request " + std::to_string(req.id) + " is invalid");
        }
        if (!verdict.servable) report.feasible = false;
        report.requests.push_back(verdict);
    }
    return report;
}

std::string serialize_solution(const Solution& solution) {
    std::ostringstream out;
    for (const auto& tr : solution.transmissions) {
        out << "t " << format_rational(tr.time) << " :";
        for (VertexId id : tr.vertices) out << ' ' << id;
        out << "\n";
    }
    return out.str();
}

}  // namespace mlapd
