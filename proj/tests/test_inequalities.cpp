#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "juntalab/inequalities.hpp"

using namespace juntalab;
using testutil::near;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("random_trigpoly: determinism, degenerate scale, degree box") {
    RandomPolySpec spec{3, 2, 0.5, 12345, 0, false};
    TrigPoly a = random_trigpoly(spec);
    TrigPoly b = random_trigpoly(spec);
    REQUIRE(a.term_count() == b.term_count());
    for (const auto& [k, c] : a.terms()) {
        CHECK(c.real() == b.coefficient(k).real());
        CHECK(c.imag() == b.coefficient(k).imag());
    }
    for (int d : a.axis_degrees()) CHECK(d <= 2);

    RandomPolySpec zero{2, 2, 0.0, 7, 0, false};
    CHECK(random_trigpoly(zero).is_zero());

    RandomPolySpec sparse{5, 3, 0.5, 99, 12, false};
    TrigPoly s = random_trigpoly(sparse);
    CHECK(s.term_count() <= 13);  // 12 modes + mean
    for (int d : s.axis_degrees()) CHECK(d <= 3);
}

TEST_CASE("random_trigpoly: normalization certifies both hypotheses") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        RandomPolySpec spec{1 + static_cast<int>(seed % 4), 3, 2.0, seed, 0, true};
        TrigPoly f = random_trigpoly(spec);
        const auto quad = QuadratureSpec::default_for(f.dim(), seed);
        CHECK(grad_norm(f, 1, quad).value <= 1.0 + 1e-9);
        TrigPoly centered = f - TrigPoly::constant(f.dim(), f.mean());
        CHECK(l2_norm(centered) <= 1.0 + 1e-12);
    }
}

TEST_CASE("verify_heat_l1: constants and the single-mode closed form") {
    const auto quad = QuadratureSpec::tensor_grid(64);
    InequalityReport cr = verify_heat_l1(TrigPoly::constant(2, 3.0), 0.1, quad);
    CHECK(cr.pass);
    CHECK(cr.lhs == 0.0);
    CHECK(cr.rhs == 0.0);
    CHECK(!cr.convention.empty());

    // f = cos(2 pi x), t = 0.01: lhs = (1-e^{-4 pi^2 0.01}) 2/pi,
    // rhs = sqrt(0.02) * 4
    InequalityReport r = verify_heat_l1(TrigPoly::cosine(1, {1}), 0.01, quad);
    CHECK(near(r.lhs, 0.20764916698914333, r.lhs_half_width + 1e-6));
    CHECK(near(r.rhs, std::sqrt(0.02) * 4.0, r.rhs_half_width + 1e-6));
    CHECK(r.pass);
    CHECK(r.slack > r.lhs_half_width + r.rhs_half_width);
}

TEST_CASE("verify_reverse_poincare: exact closed form") {
    InequalityReport cr = verify_reverse_poincare(TrigPoly::constant(1, 5.0), 0.3);
    CHECK(cr.pass);
    CHECK(cr.lhs == 0.0);

    InequalityReport r = verify_reverse_poincare(TrigPoly::cosine(1, {1}), 0.1);
    CHECK(near(r.lhs, 0.08573121497289205, 1e-12));  // 2 pi e^{-4 pi^2 /10}/sqrt(2)
    CHECK(near(r.rhs, 2.23606797749979, 1e-12));     // (1/sqrt(2))/sqrt(0.1)
    CHECK(r.pass);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        TrigPoly f = testutil::random_poly(3, 3, seed);
        for (double t : {0.01, 0.1, 1.0}) CHECK(verify_reverse_poincare(f, t).pass);
    }
}

TEST_CASE("verify_hypercontractivity: equality for constants, slack otherwise") {
    const auto quad = QuadratureSpec::tensor_grid(64);
    InequalityReport cr = verify_hypercontractivity(TrigPoly::constant(1, 2.0), 0.5, quad);
    CHECK(cr.pass);
    CHECK(near(cr.lhs, 2.0, 1e-12));
    CHECK(near(cr.rhs, 2.0, 1e-6));

    // f = 1 + 0.5 cos(2 pi x), t = 0.5, p = 1 + 1/e
    TrigPoly f = TrigPoly::constant(1, 1.0) + TrigPoly::cosine(1, {1}, 0.5);
    InequalityReport r = verify_hypercontractivity(f, 0.5, quad);
    CHECK(near(r.p, 1.0 + std::exp(-1.0), 1e-15));
    CHECK(near(r.lhs, 1.0, 1e-12));  // sqrt(1 + 0.125 e^{-8 pi^2 0.5}) ~ 1
    CHECK(near(r.rhs, 1.0232912970328626, r.rhs_half_width + 1e-5));
    CHECK(r.pass);
    CHECK(r.slack > r.rhs_half_width);

    for (std::uint64_t seed = 40; seed < 55; ++seed) {
        TrigPoly g = testutil::random_poly(2, 2, seed, 0.5, true);
        for (double t : {0.1, 0.5, 1.0}) CHECK(verify_hypercontractivity(g, t, quad).pass);
    }
}

TEST_CASE("verify_poincare_junta: product-mode closed form") {
    InequalityReport full = verify_poincare_junta(testutil::random_poly(3, 2, 3), CoordSet::full(3));
    CHECK(full.pass);
    CHECK(near(full.lhs, 0.0, 1e-15));
    CHECK(full.rhs == 0.0);

    // f = cos(2 pi x1) cos(2 pi x2), S = {1}: lhs = 1/4, rhs = (2 pi)^2/4
    TrigPoly prod = TrigPoly::cosine(2, {1, 1}, 0.5) + TrigPoly::cosine(2, {1, -1}, 0.5);
    InequalityReport r = verify_poincare_junta(prod, CoordSet({0}, 2));
    CHECK(near(r.lhs, 0.25, 1e-12));
    CHECK(near(r.rhs, kPi * kPi * 4.0 / 4.0, 1e-10));  // ~9.8696
    CHECK(r.pass);

    for (std::uint64_t seed = 60; seed < 80; ++seed) {
        TrigPoly f = testutil::random_poly(4, 2, seed);
        std::vector<int> members;
        for (int n = 0; n < 4; ++n)
            if (uniform01(seed, 7 + n) < 0.5) members.push_back(n);
        CHECK(verify_poincare_junta(f, CoordSet(members, 4)).pass);
    }
}

TEST_CASE("verify_smoothed_junta: empty-S example with frozen closed forms") {
    const auto quad = QuadratureSpec::tensor_grid(64);
    InequalityReport cr = verify_smoothed_junta(TrigPoly::constant(2, 0.4), 0.1, 0.5, quad);
    CHECK(cr.pass);
    CHECK(cr.lhs == 0.0);

    // f = 0.1 cos(2 pi x1) on T^3, t = 0.1, eta = 0.5: influence 0.4 < 0.5
    // so S is empty; lhs = 0.1 e^{-8 pi^2 0.1}/sqrt(2)
    TrigPoly f = TrigPoly::cosine(3, {1, 0, 0}, 0.1);
    InequalityReport r = verify_smoothed_junta(f, 0.1, 0.5, quad);
    CHECK(near(r.lhs, 2.6328930505298222e-05, 1e-12));
    CHECK(near(r.rhs, 2.723732636560755, 1e-9));
    CHECK(r.pass);
    CHECK(r.convention.find("|S| = 0") != std::string::npos);

    for (std::uint64_t seed = 90; seed < 105; ++seed) {
        TrigPoly g = testutil::random_poly(3, 2, seed, 0.5, true);
        for (double t : {0.05, 0.2})
            for (double eta : {0.1, 0.4}) CHECK(verify_smoothed_junta(g, t, eta, quad).pass);
    }
}

TEST_CASE("verify_junta_triangle: the measured composite bound holds") {
    const auto quad = QuadratureSpec::tensor_grid(64);
    for (std::uint64_t seed = 120; seed < 140; ++seed) {
        TrigPoly f = testutil::random_poly(3, 2, seed, 0.5, true);
        InequalityReport r = verify_junta_triangle(f, 0.05, 0.2, quad);
        CHECK(r.pass);
    }
}

TEST_CASE("run_suite: wiring, determinism, failure on unknown checks") {
    SuiteSpec suite;
    suite.count = 10;
    suite.dim_max = 3;
    suite.degree = 2;
    suite.scale = 0.5;
    suite.max_modes = 8;
    suite.seed = 424242;
    suite.checks = {
        {"heat_l1", {0.01, 0.1}, {}},
        {"reverse_poincare", {0.01, 0.1, 1.0}, {}},
        {"hypercontractivity", {0.1, 0.5, 1.0}, {}},
        {"poincare_junta", {}, {}},
        {"smoothed_junta", {0.1}, {0.25}},
    };
    std::vector<InequalityReport> reports = run_suite(suite);
    CHECK(reports.size() == 10 * (2 + 3 + 3 + 1 + 1));
    for (const auto& r : reports) {
        CHECK(r.pass);
        CHECK(std::isfinite(r.lhs));
        CHECK(std::isfinite(r.rhs));
        if (r.name == "heat_l1") CHECK(!r.convention.empty());
    }
    std::vector<InequalityReport> again = run_suite(suite);
    REQUIRE(again.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].lhs == again[i].lhs);
        CHECK(reports[i].rhs == again[i].rhs);
    }

    SuiteSpec bad = suite;
    bad.checks = {{"no_such_check", {}, {}}};
    CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
}
