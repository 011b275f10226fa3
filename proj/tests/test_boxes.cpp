#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "juntalab/boxes.hpp"
#include "juntalab/hamming.hpp"

using namespace juntalab;
using testutil::near;

namespace {

BoxSet half_space(int dim, int coord, double lo, double hi) {
    std::vector<Interval> box(dim, Interval{0.0, 1.0});
    box[coord] = {lo, hi};
    return BoxSet(dim, {box});
}

BoxSet random_boxes(int dim, int count, std::uint64_t seed) {
    std::vector<std::vector<Interval>> boxes;
    for (int b = 0; b < count; ++b) {
        std::vector<Interval> box(dim);
        for (int j = 0; j < dim; ++j) {
            double a = uniform01(seed, b * dim * 2 + 2 * j);
            double w = 0.05 + 0.4 * uniform01(seed, b * dim * 2 + 2 * j + 1);
            box[j] = {std::min(a, 1.0 - w), std::min(a, 1.0 - w) + w};
        }
        boxes.push_back(std::move(box));
    }
    return BoxSet(dim, std::move(boxes));
}

}  // namespace

TEST_CASE("linf_distance: identical sets, axis-aligned gap, symmetry") {
    BoxSet A = half_space(3, 0, 0.0, 0.3);
    CHECK(linf_distance(A, A) == 0.0);

    BoxSet B = half_space(3, 0, 0.7, 1.0);
    CHECK(near(linf_distance(A, B), 0.4, 1e-15));
    CHECK(near(linf_distance(B, A), 0.4, 1e-15));

    CHECK_THROWS_AS(linf_distance(A, half_space(2, 0, 0.5, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(BoxSet(2, {{{0.2, 0.1}, {0.0, 1.0}}}), std::invalid_argument);
    CHECK_THROWS_AS(BoxSet(2, {{{0.0, 1.2}, {0.0, 1.0}}}), std::invalid_argument);

    // distance 0 iff some box pair intersects (random pairs)
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        BoxSet X = random_boxes(2, 2, seed);
        BoxSet Y = random_boxes(2, 2, seed + 1000);
        const double d = linf_distance(X, Y);
        CHECK(near(d, linf_distance(Y, X), 1e-15));
        bool touch = false;
        for (const auto& bx : X.boxes())
            for (const auto& by : Y.boxes()) {
                bool all = true;
                for (int j = 0; j < 2; ++j)
                    all = all && bx[j].lo <= by[j].hi && by[j].lo <= bx[j].hi;
                touch = touch || all;
            }
        CHECK((d == 0.0) == touch);
    }
}

TEST_CASE("clipped distance function: boundary values and 1-Lipschitz property") {
    BoxSet A = half_space(2, 0, 0.0, 0.3);
    BoxSet B = half_space(2, 0, 0.7, 1.0);
    const double delta = 0.4;
    FnHandle f = clipped_distance_fn(A, delta);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto x = testutil::random_point(2, 3, seed);
        if (A.contains(x)) CHECK(f(x) == 0.0);
        if (B.contains(x)) CHECK(f(x) == delta);
        auto y = testutil::random_point(2, 4, seed);
        const double dist = linf_point_distance(x, y);
        CHECK(std::abs(f(x) - f(y)) <= dist + 1e-12);
    }
}

TEST_CASE("separated_junta_sets: the axis pair reduces to a 1-junta") {
    BoxSet A = half_space(3, 0, 0.0, 0.3);
    BoxSet B = half_space(3, 0, 0.7, 1.0);
    EngineConfig cfg = EngineConfig::defaults(3, 5);
    SeparatedSetsResult res = separated_junta_sets(A, B, 0.4, 0.1, cfg, 5);

    REQUIRE(res.S.size() == 1);
    CHECK(res.S.contains(0));
    CHECK(res.extraction_error.value <= 1e-9);
    CHECK(res.loss_a.value <= res.loss_a.half_width + 1e-12);
    CHECK(res.loss_b.value <= res.loss_b.half_width + 1e-12);
    CHECK(res.measured_separation >= 0.4 - 0.1);
    CHECK(res.pairs_a > 0);
    CHECK(res.pairs_b > 0);

    // A is inside A' and B inside B' (f|A = 0 and f|B = delta exactly)
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto x = testutil::random_point(3, 9, seed);
        if (A.contains(x)) CHECK(res.in_a_prime(x));
        if (B.contains(x)) CHECK(res.in_b_prime(x));
    }
}

TEST_CASE("degenerate (measure-zero) boxes still measure distances exactly") {
    BoxSet point(2, {{{0.25, 0.25}, {0.5, 0.5}}});
    BoxSet slab = half_space(2, 0, 0.75, 1.0);
    CHECK(near(linf_distance(point, slab), 0.5, 1e-15));
    CHECK(near(point.distance_to(std::vector<double>{0.25, 0.9}), 0.4, 1e-15));
    CHECK(point.contains(std::vector<double>{0.25, 0.5}));
}

TEST_CASE("separated_junta_sets: preconditions") {
    BoxSet A = half_space(2, 0, 0.0, 0.45);
    BoxSet B = half_space(2, 0, 0.55, 1.0);
    EngineConfig cfg = EngineConfig::defaults(2, 6);
    CHECK_THROWS_AS(separated_junta_sets(A, B, 0.4, 0.1, cfg), std::invalid_argument);
    CHECK_THROWS_AS(separated_junta_sets(A, B, 0.1, 0.0, cfg), std::invalid_argument);
    // grid too coarse for a tiny epsilon
    EngineConfig coarse = cfg;
    coarse.cond_exp_points = 8;
    CHECK_THROWS_AS(separated_junta_sets(A, B, 0.1, 0.05, coarse), std::invalid_argument);
}

TEST_CASE("separated_junta_sets: two-box instance keeps losses small") {
    // A: two boxes on the low side of x2, B: slab on the high side
    BoxSet A(2, {{{0.0, 0.4}, {0.0, 0.25}}, {{0.5, 0.9}, {0.0, 0.2}}});
    BoxSet B(2, {{{0.0, 1.0}, {0.65, 1.0}}});
    const double delta = linf_distance(A, B);
    REQUIRE(delta >= 0.3);
    EngineConfig cfg = EngineConfig::defaults(2, 8);
    SeparatedSetsResult res = separated_junta_sets(A, B, delta, 0.1, cfg, 8);
    CHECK(res.loss_a.value < 0.1);
    CHECK(res.loss_b.value < 0.1);
    CHECK(res.measured_separation >= delta - 0.1);
}
