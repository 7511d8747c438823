#pragma once

// Test-only brute-force oracles, kept independent of the library's search and
// decomposition code paths on purpose.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "mlapd/instance.hpp"
#include "mlapd/rational.hpp"

namespace mlapd::testing {

// e truncated after 50 decimal places; strictly below the true constant
inline const Rat kEulerLower =
    parse_rational("2.71828182845904523536028747135266249775724709369995");

// Minimum cost over every assignment of requests to candidate transmission
// times (a request may use any candidate time inside its window). Plain
// recursive enumeration; exponential, for tiny instances only.
inline Rat brute_force_opt(const Instance& instance, const std::vector<Rat>& candidate_times) {
    const auto& tree = instance.tree;
    const std::size_t m = instance.requests.size();
    if (m == 0) return Rat(0);

    std::vector<std::vector<std::uint32_t>> root_paths;
    for (const auto& req : instance.requests)
        root_paths.push_back(tree.root_path(*tree.index_of(req.vertex)));

    std::vector<std::size_t> pick(m, 0);
    Rat best = -1;
    std::function<void(std::size_t)> recurse = [&](std::size_t k) {
        if (k == m) {
            // cost = sum over used times of the union-of-root-paths cost
            std::map<Rat, std::set<std::uint32_t>> buckets;
            for (std::size_t i = 0; i < m; ++i)
                buckets[candidate_times[pick[i]]].insert(root_paths[i].begin(),
                                                         root_paths[i].end());
            Rat total = 0;
            for (const auto& [t, verts] : buckets)
                for (std::uint32_t v : verts) total += tree.cost(v);
            if (best < 0 || total < best) best = total;
            return;
        }
        const auto& req = instance.requests[k];
        for (std::size_t j = 0; j < candidate_times.size(); ++j) {
            if (req.arrival <= candidate_times[j] && candidate_times[j] <= req.deadline) {
                pick[k] = j;
                recurse(k + 1);
            }
        }
    };
    recurse(0);
    return best;
}

inline std::vector<Rat> deadline_times(const Instance& instance) {
    std::vector<Rat> times;
    for (const auto& req : instance.requests) times.push_back(req.deadline);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

// deadlines, arrivals, and midpoints between consecutive event times
inline std::vector<Rat> extended_times(const Instance& instance) {
    std::vector<Rat> events;
    for (const auto& req : instance.requests) {
        events.push_back(req.arrival);
        events.push_back(req.deadline);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    std::vector<Rat> times = events;
    for (std::size_t i = 0; i + 1 < events.size(); ++i)
        times.push_back((events[i] + events[i + 1]) / 2);
    std::sort(times.begin(), times.end());
    return times;
}

// Minimum dimension over every heavy path decomposition, by enumerating each
// internal vertex's choice of which child continues its path.
inline unsigned brute_force_min_dimension(const RootedTree& tree) {
    std::vector<std::uint32_t> internal;
    for (std::uint32_t v = 0; v < tree.size(); ++v)
        if (!tree.is_leaf(v)) internal.push_back(v);

    std::vector<std::uint32_t> choice(tree.size(), 0);  // continue-child per internal vertex
    unsigned best = 0;
    bool found = false;

    std::function<void(std::size_t)> recurse = [&](std::size_t k) {
        if (k == internal.size()) {
            // count distinct maximal chain segments on each root-leaf path
            unsigned dim = 0;
            for (std::uint32_t u = 0; u < tree.size(); ++u) {
                if (!tree.is_leaf(u)) continue;
                unsigned paths_met = 1;
                std::uint32_t below = u;
                for (auto p = tree.parent(u); p; p = tree.parent(*p)) {
                    if (!(choice[*p] == below)) ++paths_met;  // a new path starts above
                    below = *p;
                }
                dim = std::max(dim, paths_met);
            }
            if (!found || dim < best) {
                best = dim;
                found = true;
            }
            return;
        }
        for (std::uint32_t c : tree.children(internal[k])) {
            choice[internal[k]] = c;
            recurse(k + 1);
        }
    };
    recurse(0);
    return found ? best : 1;
}

// Calls fn on every rooted tree with n vertices given as parent arrays with
// parent[v] < v (every shape appears; labels are canonical), unit costs.
inline void for_each_tree(std::size_t n, const std::function<void(const RootedTree&)>& fn) {
    std::vector<std::uint32_t> parent(n, 0);
    std::function<void(std::size_t)> recurse = [&](std::size_t v) {
        if (v == n) {
            std::vector<VertexSpec> specs;
            for (std::uint32_t i = 0; i < n; ++i) {
                VertexSpec spec;
                spec.id = i;
                if (i > 0) spec.parent = parent[i];
                spec.cost = 1;
                specs.push_back(std::move(spec));
            }
            fn(RootedTree(std::move(specs)));
            return;
        }
        for (std::uint32_t p = 0; p < v; ++p) {
            parent[v] = p;
            recurse(v + 1);
        }
    };
    if (n == 0) return;
    recurse(1);
}

}  // namespace mlapd::testing
