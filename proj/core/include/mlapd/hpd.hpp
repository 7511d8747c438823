#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlapd/tree.hpp"

namespace mlapd {

// A heavy path decomposition: a partition of the vertices into root-ward paths,
// each containing exactly one leaf. Path ids are assigned in ascending order of
// the path's topmost vertex index, so the path containing the root is id 0.
struct Decomposition {
    std::vector<std::uint32_t> path_of;               // vertex index -> path id
    std::vector<std::vector<std::uint32_t>> paths;    // path id -> vertices, top to bottom
    unsigned dimension = 0;                           // max #paths met on any root-leaf path
    std::vector<std::optional<std::uint32_t>> continue_child;  // which child extends v's path
};

struct HeavyPathTree {
    std::uint32_t root = 0;                            // path id containing the tree root
    std::vector<std::optional<std::uint32_t>> parent;  // path id -> parent path id
    std::vector<unsigned> depth;                       // root path has depth 0
};

// Minimum-dimension decomposition via the bottom-up rank recursion:
// rank(leaf) = 1; an internal vertex whose children's max rank m is attained by
// exactly one child keeps rank m and extends that child's path, otherwise it
// takes rank m+1 and extends the smallest-id child attaining m. The resulting
// dimension equals rank(root), the minimum over all decompositions.
Decomposition min_caterpillar_decomposition(const RootedTree& tree);

// Classical subtree-size rule: each internal vertex extends the child with the
// largest subtree (smallest id on ties). Dimension is at most floor(log2 n)+1.
Decomposition size_heavy_decomposition(const RootedTree& tree);

HeavyPathTree heavy_path_tree(const RootedTree& tree, const Decomposition& decomp);

/// c(p(v)): total cost of v's path from its topmost vertex down to v inclusive.
Rat prefix_cost(const Decomposition& decomp, const RootedTree& tree, std::uint32_t v);

/// Recomputes the dimension from the definition (max distinct path ids on any
/// root-leaf path); used to cross-check construction shortcuts.
unsigned measured_dimension(const RootedTree& tree, const std::vector<std::uint32_t>& path_of);

std::string format_decomposition(const RootedTree& tree, const Decomposition& decomp);

}  // namespace mlapd
