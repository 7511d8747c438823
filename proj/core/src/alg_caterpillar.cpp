#include "mlapd/alg_caterpillar.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlapd {

CaterpillarParams default_caterpillar_params(Decomposition decomposition) {
    unsigned h = decomposition.dimension;
    return CaterpillarParams{Rat(2 * h + 1), Rat(2 * h), std::move(decomposition)};
}

CaterpillarPolicy::CaterpillarPolicy(const RootedTree& tree, CaterpillarParams params)
    : tree_(tree), params_(std::move(params)) {
    if (params_.theta1 <= 0 || params_.theta2 <= 0)
        throw std::invalid_argument("theta1 and theta2 must be positive");
    if (params_.decomposition.path_of.size() != tree.size())
        throw std::invalid_argument("decomposition does not cover the instance tree");
    deepest_.resize(params_.decomposition.paths.size());
}

void CaterpillarPolicy::begin_transmission(const std::vector<char>& in_expansion) {
    std::fill(deepest_.begin(), deepest_.end(), std::nullopt);
    for (std::uint32_t v = 0; v < tree_.size(); ++v) {
        if (!in_expansion[v]) continue;
        auto& slot = deepest_[params_.decomposition.path_of[v]];
        if (!slot || tree_.vertex_depth(v) > tree_.vertex_depth(*slot)) slot = v;
    }
}

Rat CaterpillarPolicy::budget(std::uint32_t v) const {
    if (deepest_[params_.decomposition.path_of[v]] == v)
        return params_.theta1 * prefix_cost(params_.decomposition, tree_, v);
    return params_.theta2 * tree_.cost(v);
}

std::optional<std::uint32_t> CaterpillarPolicy::delegation_source(std::uint32_t v,
                                                                  std::uint32_t target) const {
    auto down = deepest_[params_.decomposition.path_of[v]];
    if (down && *down != v && tree_.is_ancestor_or_self(*down, target)) return down;
    return std::nullopt;
}

std::vector<std::uint32_t> CaterpillarPolicy::disproportional_vertices() const {
    std::vector<std::uint32_t> out;
    for (const auto& slot : deepest_)
        if (slot) out.push_back(*slot);
    std::sort(out.begin(), out.end());
    return out;
}

Rat caterpillar_bound(unsigned hdim, const Rat& theta1, const Rat& theta2) {
    if (theta1 <= 0 || theta2 <= 0)
        throw std::invalid_argument("theta1 and theta2 must be positive");
    return (1 + theta1 + theta2) * pow_rational(1 + 1 / theta1, hdim + 1) *
           pow_rational(1 + 1 / theta2, hdim);
}

}  // namespace mlapd
