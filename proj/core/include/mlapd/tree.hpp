#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mlapd/rational.hpp"

namespace mlapd {

using VertexId = std::uint32_t;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VertexSpec {
    VertexId id;
    std::optional<VertexId> parent;  // empty only for the root
    Rat cost;
};

// Vertex-weighted rooted tree. Vertices are stored in ascending id order and
// addressed by dense index; the index order equals the id order, so "children
// in ascending id" is simply "children in ascending index".
class RootedTree {
public:
    explicit RootedTree(std::vector<VertexSpec> vertices);

    std::size_t size() const { return ids_.size(); }
    std::uint32_t root() const { return root_; }

    VertexId id_at(std::uint32_t index) const { return ids_[index]; }
    std::optional<std::uint32_t> index_of(VertexId id) const;

    const Rat& cost(std::uint32_t index) const { return costs_[index]; }
    std::optional<std::uint32_t> parent(std::uint32_t index) const { return parents_[index]; }
    const std::vector<std::uint32_t>& children(std::uint32_t index) const { return children_[index]; }
    bool is_leaf(std::uint32_t index) const { return children_[index].empty(); }

    unsigned vertex_depth(std::uint32_t index) const { return depths_[index]; }
    unsigned depth() const { return max_depth_; }  // max vertex depth; root is 0

    // constant-time via preorder intervals; self counts as ancestor
    bool is_ancestor_or_self(std::uint32_t ancestor, std::uint32_t v) const {
        return tin_[ancestor] <= tin_[v] && tout_[v] <= tout_[ancestor];
    }

    std::vector<std::uint32_t> root_path(std::uint32_t v) const;  // root..v inclusive

    Rat cost_of(std::span<const std::uint32_t> indices) const;

    bool operator==(const RootedTree& other) const;

private:
    std::vector<VertexId> ids_;
    std::vector<Rat> costs_;
    std::vector<std::optional<std::uint32_t>> parents_;
    std::vector<std::vector<std::uint32_t>> children_;
    std::vector<unsigned> depths_;
    std::vector<std::uint32_t> tin_, tout_;
    std::uint32_t root_ = 0;
    unsigned max_depth_ = 0;
};

struct EdgeWeightedVertex {
    VertexId id;
    std::optional<VertexId> parent;
    Rat edge_weight;  // weight of the edge to the parent; ignored for the root
};

// Moves each edge weight into the endpoint further from the root, drops the old
// root and promotes its unique child (which inherits the dropped edge's weight
// as its vertex cost). The input root must have exactly one adjacent vertex;
// callers split multi-child roots into separate instances first.
RootedTree reduce_edge_weighted(const std::vector<EdgeWeightedVertex>& vertices);

}  // namespace mlapd
