#pragma once

#include "mlapd/engine.hpp"

namespace mlapd {

struct DepthParams {
    Rat theta;  // > 0
};

/// Default aggregation parameter: the tree depth D, or 1 for a single-vertex
/// tree where the bound formula degenerates.
Rat default_depth_theta(const RootedTree& tree);

// Depth-parameterized policy: every expansion vertex v gets budget theta * c(v).
class DepthPolicy : public Policy {
public:
    DepthPolicy(const RootedTree& tree, DepthParams params);

    std::string name() const override { return "depth"; }
    Rat budget(std::uint32_t v) const override { return params_.theta * tree_.cost(v); }
    const DepthParams& params() const { return params_; }

private:
    const RootedTree& tree_;
    DepthParams params_;
};

/// (1 + 1/theta)^depth * (1 + theta), evaluated exactly.
Rat depth_bound(unsigned depth, const Rat& theta);

}  // namespace mlapd
