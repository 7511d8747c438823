#include "mlapd/hpd.hpp"

#include <algorithm>
#include <sstream>

namespace mlapd {

namespace {

// children-before-parent order (reverse preorder works since parents precede
// children in a preorder walk)
std::vector<std::uint32_t> postorder(const RootedTree& tree) {
    std::vector<std::uint32_t> order;
    order.reserve(tree.size());
    std::vector<std::uint32_t> stack{tree.root()};
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (std::uint32_t c : tree.children(v)) stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

Decomposition assemble(const RootedTree& tree,
                       std::vector<std::optional<std::uint32_t>> continue_child,
                       unsigned dimension) {
    Decomposition d;
    d.continue_child = std::move(continue_child);
    d.path_of.assign(tree.size(), 0);

    // path tops in ascending vertex index; vertex order within a path follows
    // the continue-child chain
    for (std::uint32_t v = 0; v < tree.size(); ++v) {
        auto p = tree.parent(v);
        bool is_top = !p || d.continue_child[*p] != v;
        if (!is_top) continue;
        std::uint32_t pid = static_cast<std::uint32_t>(d.paths.size());
        d.paths.emplace_back();
        for (std::optional<std::uint32_t> cur = v; cur; cur = d.continue_child[*cur]) {
            d.path_of[*cur] = pid;
            d.paths[pid].push_back(*cur);
        }
    }
    d.dimension = dimension;
    return d;
}

}  // namespace

Decomposition min_caterpillar_decomposition(const RootedTree& tree) {
    std::vector<unsigned> rank(tree.size(), 0);
    std::vector<std::optional<std::uint32_t>> cont(tree.size());
    for (std::uint32_t v : postorder(tree)) {
        if (tree.is_leaf(v)) {
            rank[v] = 1;
            continue;
        }
        unsigned best = 0;
        unsigned attained = 0;
        std::uint32_t pick = 0;
        for (std::uint32_t c : tree.children(v)) {
            if (rank[c] > best) {
                best = rank[c];
                attained = 1;
                pick = c;
            } else if (rank[c] == best) {
                ++attained;
            }
        }
        rank[v] = attained == 1 ? best : best + 1;
        cont[v] = pick;  // smallest-id child attaining the max, by iteration order
    }
    return assemble(tree, std::move(cont), rank[tree.root()]);
}

Decomposition size_heavy_decomposition(const RootedTree& tree) {
    std::vector<std::uint32_t> subtree(tree.size(), 1);
    std::vector<std::optional<std::uint32_t>> cont(tree.size());
    for (std::uint32_t v : postorder(tree)) {
        std::uint32_t best_size = 0;
        for (std::uint32_t c : tree.children(v)) {
            subtree[v] += subtree[c];
            if (subtree[c] > best_size) {
                best_size = subtree[c];
                cont[v] = c;
            }
        }
    }
    Decomposition d = assemble(tree, std::move(cont), 0);
    d.dimension = measured_dimension(tree, d.path_of);
    return d;
}

HeavyPathTree heavy_path_tree(const RootedTree& tree, const Decomposition& decomp) {
    HeavyPathTree h;
    h.root = decomp.path_of[tree.root()];
    h.parent.resize(decomp.paths.size());
    h.depth.assign(decomp.paths.size(), 0);
    for (std::uint32_t pid = 0; pid < decomp.paths.size(); ++pid) {
        std::uint32_t top = decomp.paths[pid].front();
        if (auto p = tree.parent(top)) h.parent[pid] = decomp.path_of[*p];
    }
    // path ids ascend with top-vertex index, so parents precede children
    for (std::uint32_t pid = 0; pid < decomp.paths.size(); ++pid) {
        if (h.parent[pid]) h.depth[pid] = h.depth[*h.parent[pid]] + 1;
    }
    return h;
}

Rat prefix_cost(const Decomposition& decomp, const RootedTree& tree, std::uint32_t v) {
    const auto& path = decomp.paths[decomp.path_of[v]];
    Rat total = 0;
    for (std::uint32_t w : path) {
        total += tree.cost(w);
        if (w == v) break;
    }
    return total;
}

unsigned measured_dimension(const RootedTree& tree, const std::vector<std::uint32_t>& path_of) {
    unsigned dim = 0;
    for (std::uint32_t v = 0; v < tree.size(); ++v) {
        if (!tree.is_leaf(v)) continue;
        unsigned count = 0;
        std::optional<std::uint32_t> prev_path;
        // walking upward, a path is met as a contiguous block
        for (std::optional<std::uint32_t> cur = v; cur; cur = tree.parent(*cur)) {
            if (!prev_path || path_of[*cur] != *prev_path) {
                ++count;
                prev_path = path_of[*cur];
            }
        }
        dim = std::max(dim, count);
    }
    return dim;
}

std::string format_decomposition(const RootedTree& tree, const Decomposition& decomp) {
    std::ostringstream out;
    out << "dimension " << decomp.dimension << "\n";
    for (std::uint32_t pid = 0; pid < decomp.paths.size(); ++pid) {
        out << "path " << pid << ":";
        for (std::uint32_t v : decomp.paths[pid]) out << ' ' << tree.id_at(v);
        out << "\n";
    }
    HeavyPathTree h = heavy_path_tree(tree, decomp);
    out << "heavy-path-tree:\n";
    for (std::uint32_t pid = 0; pid < decomp.paths.size(); ++pid) {
        out << "node " << pid << " parent ";
        if (h.parent[pid])
            out << *h.parent[pid];
        else
            out << '-';
        out << " depth " << h.depth[pid] << "\n";
    }
    return out.str();
}

}  // namespace mlapd
