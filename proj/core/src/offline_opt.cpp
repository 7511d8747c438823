#include "mlapd/offline_opt.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace mlapd {

namespace {

using Mask = std::uint32_t;

struct Step {
    Mask before;
    Mask picked;
};

}  // namespace

OptResult exact_opt(const Instance& instance, const OptLimits& limits) {
    const auto& tree = instance.tree;
    const std::size_t m = instance.requests.size();
    if (m > limits.max_requests)
        throw CapExceeded("instance has " + std::to_string(m) + " requests, cap is " +
                          std::to_string(limits.max_requests));

    OptResult result;
    result.cost = 0;
    if (m == 0) return result;

    // canonical candidate times: the distinct request deadlines, ascending
    std::vector<Rat> times;
    for (const auto& req : instance.requests) times.push_back(req.deadline);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    std::vector<std::uint32_t> req_vertex(m);
    for (std::size_t k = 0; k < m; ++k)
        req_vertex[k] = *tree.index_of(instance.requests[k].vertex);

    // cost of the union of root paths for a request subset, memoized
    std::map<Mask, Rat> union_cost;
    std::vector<char> mark(tree.size(), 0);
    auto cost_of_pick = [&](Mask pick) -> const Rat& {
        auto it = union_cost.find(pick);
        if (it != union_cost.end()) return it->second;
        std::fill(mark.begin(), mark.end(), 0);
        Rat total = 0;
        for (std::size_t k = 0; k < m; ++k) {
            if (!(pick >> k & 1u)) continue;
            for (std::uint32_t w : tree.root_path(req_vertex[k])) {
                if (!mark[w]) {
                    mark[w] = 1;
                    total += tree.cost(w);
                }
            }
        }
        return union_cost.emplace(pick, std::move(total)).first->second;
    };

    const Mask full = m == 32 ? ~Mask(0) : (Mask(1) << m) - 1;
    // dp[S] = cheapest cost with exactly the requests in S still unserved
    std::map<Mask, Rat> dp{{full, Rat(0)}};
    std::vector<std::map<Mask, Step>> choice(times.size());

    for (std::size_t k = 0; k < times.size(); ++k) {
        const Rat& t = times[k];
        Mask eligible = 0, mandatory = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& req = instance.requests[i];
            if (req.arrival <= t && t <= req.deadline) eligible |= Mask(1) << i;
            if (req.deadline == t) mandatory |= Mask(1) << i;
        }
        std::map<Mask, Rat> next_dp;
        for (const auto& [S, base] : dp) {
            Mask elig = eligible & S;
            Mask mand = mandatory & S;  // last chance for these requests
            Mask free = elig & ~mand;
            // every subset of `free`, plus the mandatory ones
            Mask X = free;
            while (true) {
                Mask pick = X | mand;
                Rat total = base;
                if (pick) total += cost_of_pick(pick);
                Mask nS = S & ~pick;
                auto it = next_dp.find(nS);
                if (it == next_dp.end() || total < it->second) {
                    next_dp[nS] = total;
                    choice[k][nS] = Step{S, pick};
                }
                if (X == 0) break;
                X = (X - 1) & free;
            }
        }
        dp = std::move(next_dp);
    }

    result.cost = dp.at(0);

    // walk the choices backwards to recover the schedule
    std::vector<Mask> picked(times.size(), 0);
    Mask state = 0;
    for (std::size_t k = times.size(); k-- > 0;) {
        const Step& step = choice[k].at(state);
        picked[k] = step.picked;
        state = step.before;
    }

    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!picked[k]) continue;
        Transmission tr;
        tr.time = times[k];
        std::vector<std::uint32_t> verts;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(picked[k] >> i & 1u)) continue;
            for (std::uint32_t w : tree.root_path(req_vertex[i])) verts.push_back(w);
            result.solution.served[instance.requests[i].id] =
                result.solution.transmissions.size();
            result.assignment.emplace_back(instance.requests[i].id, times[k]);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        result.solution.total_cost += tree.cost_of(verts);
        for (std::uint32_t w : verts) tr.vertices.push_back(tree.id_at(w));
        result.solution.transmissions.push_back(std::move(tr));
    }
    std::sort(result.assignment.begin(), result.assignment.end());
    return result;
}

LowerBoundCheck unanticipated_lower_bound(const RootedTree& tree,
                                          const std::vector<TraceRecord>& trace,
                                          const OptResult& opt) {
    LowerBoundCheck check;
    check.unanticipated_total = 0;
    for (const auto& rec : trace) check.unanticipated_total += tree.cost_of(rec.unanticipated);
    check.opt_cost = opt.cost;
    check.holds = check.unanticipated_total <= check.opt_cost;
    return check;
}

}  // namespace mlapd
