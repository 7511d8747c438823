#include "mlapd/generators.hpp"

#include <random>
#include <stdexcept>

namespace mlapd {

namespace {

// std::mt19937_64 output is pinned by the standard; distributions are not, so
// bounded draws use plain modulo to keep corpora byte-identical everywhere.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

}  // namespace

std::optional<TreeShape> parse_shape(const std::string& name) {
    if (name == "line") return TreeShape::Line;
    if (name == "caterpillar") return TreeShape::Caterpillar;
    if (name == "lobster") return TreeShape::Lobster;
    if (name == "random") return TreeShape::Random;
    if (name == "perfect-binary") return TreeShape::PerfectBinary;
    return std::nullopt;
}

std::string shape_name(TreeShape shape) {
    switch (shape) {
        case TreeShape::Line: return "line";
        case TreeShape::Caterpillar: return "caterpillar";
        case TreeShape::Lobster: return "lobster";
        case TreeShape::Random: return "random";
        case TreeShape::PerfectBinary: return "perfect-binary";
    }
    return "?";
}

RootedTree gen_tree(TreeShape shape, std::size_t n, std::uint64_t seed, CostRange costs) {
    if (n < 1) throw std::invalid_argument("tree size must be at least 1");
    if (costs.lo > costs.hi) throw std::invalid_argument("empty cost range");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);

    std::vector<std::uint32_t> parent(n, 0);  // parent[0] unused
    switch (shape) {
        case TreeShape::Line:
            for (std::size_t v = 1; v < n; ++v) parent[v] = static_cast<std::uint32_t>(v - 1);
            break;
        case TreeShape::Caterpillar: {
            // spine of ~half the vertices, pendant leaves on random spine vertices
            std::size_t spine = (n + 1) / 2;
            for (std::size_t v = 1; v < spine; ++v) parent[v] = static_cast<std::uint32_t>(v - 1);
            for (std::size_t v = spine; v < n; ++v)
                parent[v] = static_cast<std::uint32_t>(draw_below(rng, spine));
            break;
        }
        case TreeShape::Lobster: {
            // spine of ~a third; pendant paths of length <= 2 hanging off it
            std::size_t spine = (n + 2) / 3;
            for (std::size_t v = 1; v < spine; ++v) parent[v] = static_cast<std::uint32_t>(v - 1);
            std::size_t v = spine;
            while (v < n) {
                std::uint32_t attach = static_cast<std::uint32_t>(draw_below(rng, spine));
                std::size_t len = 1 + draw_below(rng, 2);  // 1 or 2
                for (std::size_t j = 0; j < len && v < n; ++j, ++v) {
                    parent[v] = attach;
                    attach = static_cast<std::uint32_t>(v);
                }
            }
            break;
        }
        case TreeShape::Random:
            for (std::size_t v = 1; v < n; ++v)
                parent[v] = static_cast<std::uint32_t>(draw_below(rng, v));
            break;
        case TreeShape::PerfectBinary:
            for (std::size_t v = 1; v < n; ++v) parent[v] = static_cast<std::uint32_t>((v - 1) / 2);
            break;
    }

    std::vector<VertexSpec> specs;
    specs.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        VertexSpec spec;
        spec.id = static_cast<VertexId>(v);
        if (v > 0) spec.parent = parent[v];
        spec.cost = Rat(costs.lo + draw_below(rng, costs.hi - costs.lo + 1));
        specs.push_back(std::move(spec));
    }
    return RootedTree(std::move(specs));
}

std::vector<Request> gen_requests(const RootedTree& tree, std::size_t m, const Rat& horizon,
                                  const Rat& overlap, std::uint64_t seed) {
    if (horizon < 0 || overlap < 0) throw std::invalid_argument("negative horizon or overlap");
    std::mt19937_64 rng(seed * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL);

    // integer grids for the raw draws; exactness comes from the jitter
    std::uint64_t arrival_grid =
        static_cast<std::uint64_t>(horizon.convert_to<double>()) + 1;
    double window_span = (overlap * horizon).convert_to<double>();
    std::uint64_t window_grid = static_cast<std::uint64_t>(window_span) + 1;

    std::vector<Request> requests;
    requests.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        Request req;
        req.id = static_cast<RequestId>(k + 1);
        req.vertex = tree.id_at(static_cast<std::uint32_t>(draw_below(rng, tree.size())));
        std::uint64_t base = draw_below(rng, arrival_grid);
        std::uint64_t window = draw_below(rng, window_grid);
        Rat jitter_a(2 * k + 1, kJitterDenominator);
        Rat jitter_d(2 * k + 2, kJitterDenominator);
        req.arrival = Rat(base) + jitter_a;
        req.deadline = Rat(base + window) + jitter_d;
        requests.push_back(std::move(req));
    }
    return requests;
}

}  // namespace mlapd
