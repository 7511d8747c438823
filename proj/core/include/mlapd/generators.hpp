#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mlapd/instance.hpp"

namespace mlapd {

enum class TreeShape { Line, Caterpillar, Lobster, Random, PerfectBinary };

std::optional<TreeShape> parse_shape(const std::string& name);
std::string shape_name(TreeShape shape);

struct CostRange {
    std::uint32_t lo = 1;
    std::uint32_t hi = 20;
};

// Deterministic in (shape, n, seed). Vertex ids are 0..n-1 with root 0; costs
// are integers drawn uniformly from the range.
RootedTree gen_tree(TreeShape shape, std::size_t n, std::uint64_t seed, CostRange costs = {});

// m requests on uniformly random vertices. Arrivals land on integers in
// [0, horizon); the deadline window is an integer in [0, overlap * horizon]
// scaled by a uniform draw. Every arrival and deadline then gets a distinct
// jitter j/kJitterDenominator (j = 1..2m unique per time), so all times in an
// instance are pairwise distinct exactly.
std::vector<Request> gen_requests(const RootedTree& tree, std::size_t m, const Rat& horizon,
                                  const Rat& overlap, std::uint64_t seed);

inline constexpr std::uint64_t kJitterDenominator = 1000003;

}  // namespace mlapd
