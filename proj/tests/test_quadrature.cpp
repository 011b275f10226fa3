#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "juntalab/quadrature.hpp"

using namespace juntalab;
using testutil::near;
using testutil::random_poly;

namespace {
constexpr double kPi = std::numbers::pi;

FnHandle cube_fn(int dim, FnHandle::Eval f) {
    return FnHandle(dim, Domain::Cube, std::move(f));
}
}  // namespace

TEST_CASE("lp_norm_est: constants are exact with zero half-width") {
    FnHandle c = cube_fn(2, [](std::span<const double>) { return -2.5; });
    for (auto quad : {QuadratureSpec::tensor_grid(16), QuadratureSpec::monte_carlo(512, 3)}) {
        Estimate e = lp_norm_est(c, 1.0, quad);
        CHECK(e.value == 2.5);
        CHECK(e.half_width == 0.0);
    }
    CHECK_THROWS_AS(lp_norm_est(c, 0.5, QuadratureSpec::tensor_grid(8)), std::invalid_argument);
}

TEST_CASE("single-node grids are legal and report zero half-width") {
    FnHandle h = cube_fn(2, [](std::span<const double> x) { return x[0] + x[1]; });
    Estimate e = integrate_scalar(QuadratureSpec::tensor_grid(1), 2,
                                  [&h](std::span<const double> x) { return h(x); });
    CHECK(e.value == 1.0);  // the single midpoint node (0.5, 0.5)
    CHECK(e.half_width == 0.0);
}

TEST_CASE("lp_norm_est: ||cos||_1 = 2/pi within the reported half-width") {
    TrigPoly f = TrigPoly::cosine(1, {1});
    const double exact = 2.0 / kPi;

    Estimate grid = lp_norm_est(f, 1.0, QuadratureSpec::tensor_grid(64));
    CHECK(std::abs(grid.value - exact) <= grid.half_width + 1e-9);

    Estimate mc = lp_norm_est(f, 1.0, QuadratureSpec::monte_carlo(1 << 14, 11));
    CHECK(std::abs(mc.value - exact) <= mc.half_width + 1e-9);
}

TEST_CASE("l2 norm: Parseval agrees with the quadrature oracle") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        TrigPoly f = random_poly(2, 2, seed);
        const double exact = l2_norm(f);
        TrigPolyEvaluator ev(f);
        Estimate q = integrate_scalar(QuadratureSpec::tensor_grid(64), 2,
                                      [&ev](std::span<const double> x) {
                                          const double v = ev.eval(x);
                                          return v * v;
                                      });
        CHECK(near(std::sqrt(q.value), exact, 1e-9 + q.half_width));
    }
}

TEST_CASE("grid refinement: error decreases monotonically for a smooth integrand") {
    TrigPoly f = TrigPoly::cosine(1, {1});
    const double exact = 2.0 / kPi;
    double prev = 1e9;
    for (int m : {8, 16, 32, 64, 128}) {
        Estimate e = lp_norm_est(f, 1.0, QuadratureSpec::tensor_grid(m));
        const double err = std::abs(e.value - exact);
        CHECK(err <= prev + 1e-15);
        prev = err;
    }
}

TEST_CASE("Monte-Carlo: deterministic given the seed, half-widths shrink like 1/sqrt(n)") {
    TrigPoly f = random_poly(3, 2, 42);
    auto a = lp_norm_est(f, 1.0, QuadratureSpec::monte_carlo(4096, 7));
    auto b = lp_norm_est(f, 1.0, QuadratureSpec::monte_carlo(4096, 7));
    CHECK(a.value == b.value);
    CHECK(a.half_width == b.half_width);

    auto c = lp_norm_est(f, 1.0, QuadratureSpec::monte_carlo(4 * 4096, 7));
    // quadrupling the sample count should halve the half-width, within 2x
    const double ratio = c.half_width / a.half_width;
    CHECK(ratio > 0.25);
    CHECK(ratio < 1.0);
}

TEST_CASE("grad_norm: closed forms and the lp monotonicity bound") {
    TrigPoly f = TrigPoly::cosine(2, {1, 0});
    Estimate g1 = grad_norm(f, 1, QuadratureSpec::tensor_grid(64));
    CHECK(std::abs(g1.value - 4.0) <= g1.half_width + 1e-9);

    Estimate g2 = grad_norm(f, 2, QuadratureSpec::tensor_grid(8));
    CHECK(near(g2.value, 2.0 * kPi / std::sqrt(2.0), 1e-12));
    CHECK(g2.half_width == 0.0);

    TrigPoly c = TrigPoly::constant(2, 3.0);
    CHECK(grad_norm(c, 1, QuadratureSpec::tensor_grid(8)).value == 0.0);
    CHECK(grad_norm(c, 2, QuadratureSpec::tensor_grid(8)).value == 0.0);
    CHECK_THROWS_AS(grad_norm(f, 3, QuadratureSpec::tensor_grid(8)), std::invalid_argument);

    for (std::uint64_t seed = 60; seed < 68; ++seed) {
        TrigPoly r = random_poly(2, 2, seed);
        const auto quad = QuadratureSpec::tensor_grid(64);
        CHECK(grad_norm(r, 2, quad).value <= lipschitz_constant(r, quad) + 1e-9);
    }
}

TEST_CASE("lipschitz_constant: node supremum approaches the true Lipschitz constant") {
    const auto quad = QuadratureSpec::tensor_grid(64);
    CHECK(lipschitz_constant(TrigPoly::constant(1, 9.0), quad) == 0.0);

    const double one = lipschitz_constant(TrigPoly::cosine(1, {1}), quad);
    CHECK(one <= 2.0 * kPi + 1e-12);  // node sup is a lower bound
    CHECK(one >= 2.0 * kPi * (1.0 - 2e-3));

    TrigPoly two = TrigPoly::cosine(2, {1, 0}) + TrigPoly::cosine(2, {0, 1});
    const double l2 = lipschitz_constant(two, quad);
    CHECK(l2 <= 4.0 * kPi + 1e-12);
    CHECK(l2 >= 4.0 * kPi * (1.0 - 2e-3));
}

TEST_CASE("influences: profile sums to grad_norm(.,1) and finds closed forms") {
    TrigPoly f = TrigPoly::cosine(2, {1, 0});
    const auto quad = QuadratureSpec::tensor_grid(64);
    InfluenceProfile prof = influences(f, quad);
    REQUIRE(prof.dim() == 2);
    CHECK(std::abs(prof.l1[0].value - 4.0) <= prof.l1[0].half_width + 1e-9);
    CHECK(prof.l1[1].value == 0.0);
    CHECK(near(prof.l2[0], 2.0 * kPi / std::sqrt(2.0), 1e-12));

    for (std::uint64_t seed = 80; seed < 86; ++seed) {
        TrigPoly r = random_poly(3, 2, seed);
        InfluenceProfile p = influences(r, quad);
        Estimate g = grad_norm(r, 1, quad);
        CHECK(near(p.total_l1(), g.value, 1e-9 + p.total_l1_half_width() + g.half_width));
    }
}

TEST_CASE("finite_diff_influences: central differences recover the analytic profile") {
    // black-box path: no gradient attached
    FnHandle h(2, Domain::Torus, [](std::span<const double> x) {
        return std::cos(2.0 * kPi * x[0]);
    });
    InfluenceProfile prof = finite_diff_influences(h, 1e-4, QuadratureSpec::tensor_grid(64));
    CHECK(std::abs(prof.l1[0].value - 4.0) <= prof.l1[0].half_width + 1e-6);
    CHECK(std::abs(prof.l1[1].value) < 1e-9);

    // analytic path via a poly-backed handle gives the same numbers
    InfluenceProfile exact = finite_diff_influences(FnHandle::from_poly(TrigPoly::cosine(2, {1, 0})),
                                                    1e-4, QuadratureSpec::tensor_grid(64));
    CHECK(near(exact.l1[0].value, prof.l1[0].value, 1e-6));

    // cross-module: the black-box total equals grad_norm(.,1) on wrapped polys
    for (std::uint64_t seed = 200; seed < 204; ++seed) {
        TrigPoly f = testutil::random_poly(3, 2, seed);
        const auto quad = QuadratureSpec::tensor_grid(32);
        InfluenceProfile fd = finite_diff_influences(FnHandle::from_poly(f), 1e-4, quad);
        Estimate g = grad_norm(f, 1, quad);
        CHECK(near(fd.total_l1(), g.value,
                   fd.total_l1_half_width() + g.half_width + 1e-6));
    }

    CHECK_THROWS_AS(finite_diff_influences(h, 0.0, QuadratureSpec::tensor_grid(8)),
                    std::invalid_argument);
}

TEST_CASE("grid_cond_exp: exact averages on the grid") {
    const auto quad = QuadratureSpec::tensor_grid(64);

    // full S reproduces the function at grid nodes
    FnHandle h = cube_fn(2, [](std::span<const double> x) { return x[0] * x[0] + x[1]; });
    FnHandle full = grid_cond_exp(h, CoordSet::full(2), quad);
    const std::vector<double> node{(7 + 0.5) / 64, (20 + 0.5) / 64};
    CHECK(near(full(node), h(node), 1e-15));

    // E_{x2}(x1 + x2) = x1 + 1/2 exactly at nodes (midpoint grid symmetry)
    FnHandle sum = cube_fn(2, [](std::span<const double> x) { return x[0] + x[1]; });
    FnHandle proj = grid_cond_exp(sum, CoordSet({0}, 2), quad);
    CHECK(near(proj(node), node[0] + 0.5, 1e-12));

    // E_{x2} max(x1,x2) = (1 + x1^2)/2 within grid tolerance
    FnHandle mx = cube_fn(2, [](std::span<const double> x) { return std::max(x[0], x[1]); });
    FnHandle mproj = grid_cond_exp(mx, CoordSet({0}, 2), quad);
    for (int i : {3, 31, 60}) {
        const double x1 = (i + 0.5) / 64;
        CHECK(near(mproj(std::vector<double>{x1, 0.1}), (1.0 + x1 * x1) / 2.0, 1e-4));
    }

    CHECK_THROWS_AS(grid_cond_exp(h, CoordSet({0}, 2), QuadratureSpec::monte_carlo(128, 0)),
                    std::invalid_argument);
}

TEST_CASE("grid_cond_exp: idempotent and order-independent") {
    FnHandle h = cube_fn(3, [](std::span<const double> x) {
        return std::max({x[0], x[1], x[2]}) + 0.3 * x[1];
    });
    const auto quad = QuadratureSpec::tensor_grid(16);
    CoordSet S({1}, 3);
    FnHandle once = grid_cond_exp(h, S, quad);
    FnHandle twice = grid_cond_exp(once, S, quad);
    // averaging out the two excluded coordinates in either order
    FnHandle ab = grid_cond_exp(grid_cond_exp(h, CoordSet({0, 1}, 3), quad), S, quad);
    FnHandle ba = grid_cond_exp(grid_cond_exp(h, CoordSet({1, 2}, 3), quad), S, quad);
    for (int rep = 0; rep < 8; ++rep) {
        auto x = testutil::random_point(3, 5, rep);
        CHECK(near(once(x), twice(x), 1e-12));
        CHECK(near(ab(x), ba(x), 1e-12));
        CHECK(near(ab(x), once(x), 1e-12));
    }
}

TEST_CASE("tent map: values, pushforward moments, norm preservation") {
    CHECK(tent_map(0.25) == 0.5);
    CHECK(tent_map(0.75) == 0.5);
    CHECK(tent_map(0.0) == 0.0);
    CHECK(tent_map(0.5) == 1.0);

    // moments of F(U), U uniform on T: mean 1/2 and second moment 1/3
    FnHandle first(1, Domain::Torus,
                   [](std::span<const double> x) { return tent_map(x[0]); });
    FnHandle second(1, Domain::Torus, [](std::span<const double> x) {
        const double v = tent_map(x[0]);
        return v * v;
    });
    auto quad = QuadratureSpec::monte_carlo(1 << 14, 17);
    Estimate m1 = integrate_scalar(quad, 1, [&](std::span<const double> x) { return first(x); });
    Estimate m2 = integrate_scalar(quad, 1, [&](std::span<const double> x) { return second(x); });
    CHECK(std::abs(m1.value - 0.5) <= m1.half_width);
    CHECK(std::abs(m2.value - 1.0 / 3.0) <= m2.half_width);

    // measure preservation: lp norms agree before and after the transfer
    FnHandle h = cube_fn(2, [](std::span<const double> x) { return x[0] * x[0] + 0.2 * x[1]; });
    FnHandle th = tent_transfer(h);
    for (double p : {1.0, 2.0}) {
        Estimate before = lp_norm_est(h, p, QuadratureSpec::tensor_grid(64));
        Estimate after = lp_norm_est(th, p, QuadratureSpec::tensor_grid(128));
        CHECK(near(before.value, after.value,
                   before.half_width + after.half_width + 1e-6));
    }
    CHECK_THROWS_AS(tent_transfer(th), std::invalid_argument);
}

TEST_CASE("tent transfer: conditional expectations commute at matched grid nodes") {
    FnHandle h = cube_fn(2, [](std::span<const double> x) {
        return std::max(x[0], x[1]) + 0.1 * x[0];
    });
    const int p = 16;
    CoordSet S({0}, 2);
    FnHandle cube_proj = grid_cond_exp(h, S, QuadratureSpec::tensor_grid(p));
    FnHandle torus_proj = grid_cond_exp(tent_transfer(h), S, QuadratureSpec::tensor_grid(2 * p));
    // torus node theta = (j+1/2)/(2p), j < p maps onto cube node (2j+1)/(2p)
    for (int j = 0; j < p; ++j) {
        const double theta = (j + 0.5) / (2 * p);
        const std::vector<double> torus_pt{theta, 0.2};
        const std::vector<double> cube_pt{tent_map(theta), 0.2};
        CHECK(near(torus_proj(torus_pt), cube_proj(cube_pt), 1e-12));
    }
}

TEST_CASE("tent transfer: influences are at most doubled (and the bound is tight)") {
    FnHandle h = cube_fn(2, [](std::span<const double> x) {
        return 0.5 * x[0] * x[0] + 0.25 * x[1];
    });
    auto quad = QuadratureSpec::tensor_grid(64);
    InfluenceProfile base = finite_diff_influences(h, 1e-4, quad);
    InfluenceProfile lifted = finite_diff_influences(tent_transfer(h), 1e-4, quad);
    for (int j = 0; j < 2; ++j) {
        const double tol = 2.0 * base.l1[j].half_width + lifted.l1[j].half_width + 1e-3;
        CHECK(lifted.l1[j].value <= 2.0 * base.l1[j].value + tol);
        CHECK(lifted.l1[j].value >= 2.0 * base.l1[j].value - tol);
    }
}
