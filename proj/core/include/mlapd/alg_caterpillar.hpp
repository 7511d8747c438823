#pragma once

#include "mlapd/engine.hpp"
#include "mlapd/hpd.hpp"

namespace mlapd {

struct CaterpillarParams {
    Rat theta1;  // budget factor for the deepest expansion vertex on each path
    Rat theta2;  // budget factor for every other expansion vertex
    Decomposition decomposition;
};

/// Defaults from the decomposition's dimension H: theta1 = 2H+1, theta2 = 2H.
CaterpillarParams default_caterpillar_params(Decomposition decomposition);

// Caterpillar-dimension policy. Identical to the depth policy except in the
// investment stage: the deepest expansion vertex v on its heavy path receives
// budget theta1 * c(p(v)) where p(v) is the path prefix down to v, every other
// vertex receives theta2 * c(v) and, when its chosen target lies under that
// deepest vertex, adopts the deepest vertex's investments instead of funding
// the target itself.
class CaterpillarPolicy : public Policy {
public:
    CaterpillarPolicy(const RootedTree& tree, CaterpillarParams params);

    std::string name() const override { return "caterpillar"; }
    void begin_transmission(const std::vector<char>& in_expansion) override;
    Rat budget(std::uint32_t v) const override;
    std::optional<std::uint32_t> delegation_source(std::uint32_t v,
                                                   std::uint32_t target) const override;
    std::vector<std::uint32_t> disproportional_vertices() const override;

    const CaterpillarParams& params() const { return params_; }

private:
    const RootedTree& tree_;
    CaterpillarParams params_;
    // deepest expansion vertex per path id for the current transmission
    std::vector<std::optional<std::uint32_t>> deepest_;
};

/// (1 + theta1 + theta2) (1 + 1/theta1)^(H+1) (1 + 1/theta2)^H, exactly.
Rat caterpillar_bound(unsigned hdim, const Rat& theta1, const Rat& theta2);

}  // namespace mlapd
