#include <doctest.h>

#include <cmath>

#include "rogue/complex.hpp"
#include "rogue/errors.hpp"
#include "rogue/suites.hpp"
#include "rogue/verification.hpp"

using rogue::Complex;

TEST_CASE("plane wave exp(2it) has zero residual to stencil accuracy") {
    auto f = [](double, double t) { return Complex<double>(std::cos(2 * t), std::sin(2 * t)); };
    for (int order : {2, 4}) {
        auto r = rogue::nls_residual_point<double>(f, 0.3, 0.7, 1e-3, order);
        CHECK(rogue::to_double(abs(r)) < (order == 2 ? 1e-5 : 1e-8));
    }
}

TEST_CASE("a non-solution is caught") {
    auto f = [](double x, double) { return Complex<double>(std::exp(-x * x)); };
    auto r = rogue::nls_residual_point<double>(f, 1.0, 0.0, 1e-3, 4);
    CHECK(rogue::to_double(abs(r)) > 0.1);
}

TEST_CASE("order-1 residual and fourth-order convergence") {
    rogue::SolutionConfig c = rogue::SolutionConfig::peregrine(1);
    c.precision = 256;
    rogue::GridAxis g{-2.0, 2.0, 9};
    auto a = rogue::nls_residual(c, g, g, 1e-3, 4);
    auto b = rogue::nls_residual(c, g, g, 5e-4, 4);
    CHECK(a.flagged == 0);
    CHECK(a.max_relative_residual <= 1e-5);
    CHECK(a.max_relative_residual / b.max_relative_residual == doctest::Approx(16.0).epsilon(0.05));
    CHECK_THROWS_AS(rogue::nls_residual(c, g, g, 0.0, 4), rogue::DomainError);
    CHECK_THROWS_AS(rogue::nls_residual(c, g, g, 1e-3, 3), rogue::DomainError);
}

TEST_CASE("declared degrees") {
    CHECK(rogue::declared_degree(2, 3, 1) < 0);   // n_{3,1} vanishes
    CHECK(rogue::declared_degree(2, 2, 1) == 0);  // 2k - j
    CHECK(rogue::declared_degree(2, 1, 2) == 3);
    CHECK(rogue::declared_degree(2, 1, 3) == 6 + 1 - 9);
}

TEST_CASE("degree fit recovers N(N+1) on both rays") {
    for (int n : {1, 2}) {
        rogue::SolutionConfig c = rogue::SolutionConfig::peregrine(n);
        c.precision = 256;
        auto radii = rogue::log_spaced(1e2, 1e4, 6);
        for (auto ray : {std::array<double, 2>{1, 0}, std::array<double, 2>{0, 1}}) {
            auto fit = rogue::degree_fit(c, ray, radii);
            CHECK(fit.target == n * (n + 1));
            CHECK(fit.slope_d == doctest::Approx(n * (n + 1)).epsilon(0.02));
            CHECK(fit.slope_n == doctest::Approx(n * (n + 1)).epsilon(0.02));
        }
    }
    rogue::SolutionConfig c = rogue::SolutionConfig::peregrine(1);
    CHECK_THROWS_AS(rogue::degree_fit(c, {1, 0}, {1.0, 2.0, 3.0}), rogue::DomainError);
    CHECK_THROWS_AS(rogue::degree_fit(c, {1, 0}, {1.0, 3.0, 2.0, 4.0}), rogue::DomainError);
    CHECK_THROWS_AS(rogue::log_spaced(0.0, 1.0, 3), rogue::DomainError);
}

TEST_CASE("structural zeros and entry growth at order 2") {
    rogue::SolutionConfig c = rogue::SolutionConfig::peregrine(2);
    c.precision = 256;
    auto a = rogue::structural_zero_audit(c, 5);
    CHECK(a.declared_zero_count > 0);
    CHECK(a.worst_zero_ratio <= 1e-20);
    CHECK(a.worst_degree_gap < 0.05);
}

TEST_CASE("oracle equivalence at order 2") {
    auto pts = rogue::random_points(3, 1, 2.0);
    auto rep = rogue::oracle_equivalence(2, {0.02, 0.01, 0.005}, pts, rogue::DeformationParams::zero(2));
    CHECK(rep.worst_theta_vs_c < 1e-9);
    CHECK(rep.worst_c_vs_d < 1e-9);
    CHECK(rep.worst_d_vs_kw < 1e-9);
    CHECK(rep.worst_limit_vs_degenerate < 1e-6);
}

TEST_CASE("seeded sampling is reproducible") {
    CHECK(rogue::random_points(4, 5, 2.0) == rogue::random_points(4, 5, 2.0));
    CHECK(rogue::random_points(4, 5, 2.0) != rogue::random_points(4, 6, 2.0));
    auto p = rogue::random_params(3, 9);
    CHECK(p.a_tilde.size() == 2);
    for (double v : p.a_tilde) CHECK(std::abs(v) <= 10.0);
}

TEST_CASE("report is sorted by name and carries a schema version") {
    rogue::CheckRecord a{"zeta", true, 0.0, 1.0, 0.0, {}};
    rogue::CheckRecord b{"alpha", false, 2.0, 1.0, 0.0, {}};
    auto j = rogue::report_json({a, b});
    CHECK(j["schema_version"] == 1);
    CHECK(j["checks"][0]["name"] == "alpha");
    CHECK(j["status"] == "fail");
    CHECK_THROWS_AS(rogue::run_suite("nope", {}), rogue::DomainError);
}

TEST_CASE("amplitude suite") {
    rogue::SuiteOptions o;
    o.orders = {1, 2, 3};
    auto recs = rogue::run_suite("amplitude", o);
    REQUIRE(recs.size() == 3);
    for (const auto& r : recs) CHECK(r.passed);
}
