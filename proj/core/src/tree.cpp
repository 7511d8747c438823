#include "mlapd/tree.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace mlapd {

RootedTree::RootedTree(std::vector<VertexSpec> vertices) {
    if (vertices.empty()) throw ValidationError("tree must have at least one vertex");
    std::sort(vertices.begin(), vertices.end(),
              [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (vertices[i].id == vertices[i - 1].id)
            throw ValidationError("duplicate vertex id " + std::to_string(vertices[i].id));
    }

    const std::size_t n = vertices.size();
    ids_.reserve(n);
    costs_.reserve(n);
    parents_.resize(n);
    children_.resize(n);
    for (const auto& v : vertices) {
        ids_.push_back(v.id);
        if (v.cost < 0)
            throw ValidationError("negative cost at vertex " + std::to_string(v.id));
        costs_.push_back(v.cost);
    }

    std::optional<std::uint32_t> root;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (!vertices[i].parent) {
            if (root) throw ValidationError("multiple roots: vertices " +
                                            std::to_string(ids_[*root]) + " and " +
                                            std::to_string(ids_[i]));
            root = i;
            continue;
        }
        auto p = index_of(*vertices[i].parent);
        if (!p) throw ValidationError("unknown parent id " + std::to_string(*vertices[i].parent) +
                                      " at vertex " + std::to_string(ids_[i]));
        if (*p == i) throw ValidationError("vertex " + std::to_string(ids_[i]) + " is its own parent");
        parents_[i] = *p;
        children_[*p].push_back(i);
    }
    if (!root) throw ValidationError("no root vertex");
    root_ = *root;
    // children were appended in ascending index order already

    // depths + acyclicity + preorder intervals in one DFS
    depths_.assign(n, 0);
    tin_.assign(n, 0);
    tout_.assign(n, 0);
    std::vector<char> visited(n, 0);
    std::vector<std::pair<std::uint32_t, std::size_t>> stack;
    std::uint32_t clock = 0;
    stack.emplace_back(root_, 0);
    visited[root_] = 1;
    tin_[root_] = clock++;
    while (!stack.empty()) {
        auto& [v, next_child] = stack.back();
        if (next_child < children_[v].size()) {
            std::uint32_t c = children_[v][next_child++];
            visited[c] = 1;
            depths_[c] = depths_[v] + 1;
            max_depth_ = std::max(max_depth_, depths_[c]);
            tin_[c] = clock++;
            stack.emplace_back(c, 0);
        } else {
            tout_[v] = clock++;
            stack.pop_back();
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        if (!visited[i])
            throw ValidationError("vertex " + std::to_string(ids_[i]) +
                                  " is not reachable from the root (parent cycle)");
    }
}

std::optional<std::uint32_t> RootedTree::index_of(VertexId id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<std::uint32_t>(it - ids_.begin());
}

std::vector<std::uint32_t> RootedTree::root_path(std::uint32_t v) const {
    std::vector<std::uint32_t> path;
    for (std::optional<std::uint32_t> cur = v; cur; cur = parents_[*cur]) path.push_back(*cur);
    std::reverse(path.begin(), path.end());
    return path;
}

Rat RootedTree::cost_of(std::span<const std::uint32_t> indices) const {
    Rat total = 0;
    for (auto i : indices) total += costs_[i];
    return total;
}

bool RootedTree::operator==(const RootedTree& other) const {
    return ids_ == other.ids_ && costs_ == other.costs_ && parents_ == other.parents_;
}

RootedTree reduce_edge_weighted(const std::vector<EdgeWeightedVertex>& vertices) {
    std::optional<VertexId> root;
    std::map<VertexId, std::size_t> degree;
    for (const auto& v : vertices) {
        if (!v.parent) {
            if (root) throw ValidationError("multiple roots in edge-weighted tree");
            root = v.id;
        } else {
            degree[*v.parent]++;
            degree[v.id]++;
        }
    }
    if (!root) throw ValidationError("no root in edge-weighted tree");
    if (degree[*root] != 1)
        throw ValidationError("edge-weighted root must have exactly one adjacent vertex, has " +
                              std::to_string(degree[*root]));

    std::vector<VertexSpec> out;
    out.reserve(vertices.size() - 1);
    for (const auto& v : vertices) {
        if (v.id == *root) continue;
        VertexSpec spec;
        spec.id = v.id;
        spec.cost = v.edge_weight;
        if (*v.parent != *root) spec.parent = *v.parent;
        out.push_back(std::move(spec));
    }
    return RootedTree(std::move(out));
}

}  // namespace mlapd
