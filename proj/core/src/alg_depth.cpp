#include "mlapd/alg_depth.hpp"

#include <stdexcept>

namespace mlapd {

Rat default_depth_theta(const RootedTree& tree) {
    unsigned d = tree.depth();
    return d == 0 ? Rat(1) : Rat(d);
}

DepthPolicy::DepthPolicy(const RootedTree& tree, DepthParams params)
    : tree_(tree), params_(std::move(params)) {
    if (params_.theta <= 0) throw std::invalid_argument("theta must be positive");
}

Rat depth_bound(unsigned depth, const Rat& theta) {
    if (theta <= 0) throw std::invalid_argument("theta must be positive");
    return pow_rational(1 + 1 / theta, depth) * (1 + theta);
}

}  // namespace mlapd
