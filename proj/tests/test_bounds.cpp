#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mlapd/alg_caterpillar.hpp"
#include "mlapd/alg_depth.hpp"
#include "support/oracles.hpp"

using namespace mlapd;
using mlapd::testing::kEulerLower;

TEST_CASE("depth bound values") {
    CHECK(depth_bound(3, Rat(3)) == Rat(256, 27));
    CHECK(depth_bound(1, Rat(1)) == Rat(4));
    CHECK(depth_bound(0, Rat(1)) == Rat(2));
    CHECK_THROWS_AS(depth_bound(2, Rat(0)), std::invalid_argument);
}

TEST_CASE("optimal depth parameter stays below e(D+1)") {
    // (1 + 1/D)^D < e, checked against a 50-digit truncation of e
    for (unsigned d = 1; d <= 100; ++d) {
        Rat value = pow_rational(1 + Rat(1, d), d);
        CHECK(value <= kEulerLower);
        CHECK(depth_bound(d, Rat(d)) <= kEulerLower * (d + 1));
    }
}

TEST_CASE("caterpillar parameter pair stays below e") {
    for (unsigned h = 1; h <= 100; ++h) {
        Rat value = pow_rational(1 + Rat(1, 2 * h + 1), h + 1) * pow_rational(1 + Rat(1, 2 * h), h);
        CHECK(value <= kEulerLower);
        CHECK(caterpillar_bound(h, Rat(2 * h + 1), Rat(2 * h)) <=
              kEulerLower * (4 * h + 2));
    }
}

TEST_CASE("theta = D minimizes the depth bound on a grid") {
    for (unsigned d = 1; d <= 20; ++d) {
        Rat best = depth_bound(d, Rat(d));
        for (Rat theta : {Rat(1), Rat(d, 2), Rat(3 * d, 4), Rat(3 * d, 2), Rat(2 * d),
                          Rat(d) + 1, Rat(d * d + 1, d)}) {
            if (theta <= 0) continue;
            CHECK(best <= depth_bound(d, theta));
        }
        if (d > 1) CHECK(best <= depth_bound(d, Rat(d - 1)));
    }
}

TEST_CASE("(2H+1, 2H) minimizes the caterpillar bound on a grid") {
    for (unsigned h = 1; h <= 10; ++h) {
        Rat best = caterpillar_bound(h, Rat(2 * h + 1), Rat(2 * h));
        std::vector<Rat> t1_grid = {Rat(h), Rat(2 * h), Rat(2 * h + 1), Rat(2 * h + 2),
                                    Rat(4 * h), Rat(4 * h + 2), Rat(2 * h + 1) + Rat(1, 2),
                                    Rat(2 * h + 1) - Rat(1, 2)};
        std::vector<Rat> t2_grid = {Rat(h), Rat(2 * h - 1), Rat(2 * h), Rat(2 * h + 1),
                                    Rat(4 * h), Rat(2 * h) + Rat(1, 2), Rat(2 * h) - Rat(1, 2)};
        for (const Rat& t1 : t1_grid) {
            for (const Rat& t2 : t2_grid) {
                if (t1 <= 0 || t2 <= 0) continue;
                CHECK(best <= caterpillar_bound(h, t1, t2));
            }
        }
    }
}
