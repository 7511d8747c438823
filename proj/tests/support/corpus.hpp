#pragma once

// Seeded corpora shared by the property tests and the acceptance suite.

#include <vector>

#include "mlapd/generators.hpp"
#include "mlapd/instance.hpp"

namespace mlapd::testing {

struct CorpusSpec {
    TreeShape shape;
    std::size_t n;
    std::size_t m;
    Rat horizon;
    Rat overlap;
    std::uint64_t seed;
};

inline Instance make_instance(const CorpusSpec& spec) {
    RootedTree tree = gen_tree(spec.shape, spec.n, spec.seed);
    std::vector<Request> requests =
        gen_requests(tree, spec.m, spec.horizon, spec.overlap, spec.seed + 1);
    return Instance{std::move(tree), std::move(requests)};
}

inline const TreeShape kShapeCycle[5] = {TreeShape::Line, TreeShape::Caterpillar,
                                         TreeShape::Lobster, TreeShape::Random,
                                         TreeShape::PerfectBinary};

// 1000 mixed instances with |V| <= 40 and m <= 30
inline std::vector<CorpusSpec> big_corpus() {
    std::vector<CorpusSpec> specs;
    const Rat overlaps[4] = {Rat(1, 4), Rat(1, 2), Rat(1), Rat(2)};
    for (std::size_t k = 0; k < 1000; ++k) {
        CorpusSpec spec;
        spec.shape = kShapeCycle[k % 5];
        spec.n = 1 + (k * 7 + 3) % 40;          // 1..40
        spec.m = k % 31;                        // 0..30
        spec.horizon = Rat(spec.m == 0 ? 1 : spec.m);
        spec.overlap = overlaps[k % 4];
        spec.seed = 1000 + k;
        specs.push_back(std::move(spec));
    }
    return specs;
}

// 300 small instances with |V| <= 12 and m <= 8, within the exact-opt caps
inline std::vector<CorpusSpec> small_corpus() {
    std::vector<CorpusSpec> specs;
    const Rat overlaps[4] = {Rat(1, 4), Rat(1, 2), Rat(1), Rat(2)};
    for (std::size_t k = 0; k < 300; ++k) {
        CorpusSpec spec;
        spec.shape = kShapeCycle[k % 5];
        spec.n = 1 + (k * 5 + 2) % 12;          // 1..12
        spec.m = 1 + k % 8;                     // 1..8
        spec.horizon = Rat(spec.m);
        spec.overlap = overlaps[k % 4];
        spec.seed = 50000 + k;
        specs.push_back(std::move(spec));
    }
    return specs;
}

// tiny instances for cross-checking the canonical-times reduction
inline std::vector<CorpusSpec> tiny_corpus() {
    std::vector<CorpusSpec> specs;
    const Rat overlaps[3] = {Rat(1, 2), Rat(1), Rat(3)};
    for (std::size_t k = 0; k < 60; ++k) {
        CorpusSpec spec;
        spec.shape = kShapeCycle[k % 5];
        spec.n = 1 + (k * 3 + 1) % 6;           // 1..6
        spec.m = 1 + k % 4;                     // 1..4
        spec.horizon = Rat(4);
        spec.overlap = overlaps[k % 3];
        spec.seed = 90000 + k;
        specs.push_back(std::move(spec));
    }
    return specs;
}

}  // namespace mlapd::testing
