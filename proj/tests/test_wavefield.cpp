#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rogue/degenerate.hpp"
#include "rogue/errors.hpp"
#include "rogue/wavefield.hpp"

using rogue::GridAxis;
using rogue::WaveField;

namespace {

template <class F>
WaveField synthetic(GridAxis x, GridAxis t, F f) {
    WaveField w(x, t);
    for (int it = 0; it < t.count; ++it) {
        for (int ix = 0; ix < x.count; ++ix) w.set(ix, it, f(x.at(ix), t.at(it)));
    }
    return w;
}

// Unit background with Gaussian bumps of height 3 at the given centres.
WaveField bumps(const std::vector<std::pair<double, double>>& centres, double extent, int count = 301) {
    GridAxis x{-extent, extent, count};
    GridAxis t{-extent / 2, extent / 2, count};
    return synthetic(x, t, [&](double xv, double tv) {
        double m = 1.0;
        for (auto [cx, ct] : centres) m += 2.0 * std::exp(-((xv - cx) * (xv - cx) + 4 * (tv - ct) * (tv - ct)));
        return std::complex<double>(m, 0.0);
    });
}

}  // namespace

TEST_CASE("grid axis grammar") {
    auto g = GridAxis::parse("-3:3:121");
    CHECK(g.lo == -3.0);
    CHECK(g.hi == 3.0);
    CHECK(g.count == 121);
    CHECK(g.step() == doctest::Approx(0.05));
    CHECK(g.at(120) == 3.0);
    CHECK(GridAxis::parse(g.to_string()).lo == g.lo);
    CHECK(GridAxis::parse("0:0:1").count == 1);
    CHECK_THROWS_AS(GridAxis::parse("1:2"), rogue::InputError);
    CHECK_THROWS_AS(GridAxis::parse("2:1:5"), rogue::InputError);
    CHECK_THROWS_AS(GridAxis::parse("a:1:5"), rogue::InputError);
    CHECK_THROWS_AS(GridAxis::parse("0:1:0"), rogue::InputError);
}

TEST_CASE("constant background has no peaks") {
    auto w = synthetic({-1, 1, 11}, {-1, 1, 11}, [](double, double) { return std::complex<double>(0.0, 1.0); });
    CHECK(rogue::find_peaks(w).peaks.empty());
    CHECK_THROWS_AS(rogue::find_peaks(w, 0.0), rogue::InputError);
}

TEST_CASE("sub-grid refinement locates an off-grid maximum") {
    auto w = bumps({{0.123, -0.071}}, 2.0, 41);
    auto ps = rogue::find_peaks(w);
    REQUIRE(ps.peaks.size() == 1);
    CHECK(ps.peaks[0].x == doctest::Approx(0.123).epsilon(0.1));
    CHECK(ps.peaks[0].t == doctest::Approx(-0.071).epsilon(0.1));
}

TEST_CASE("order-1 field on [-3,3]^2 has one central peak of height 3") {
    auto c = rogue::SolutionConfig::peregrine(1);
    auto f = rogue::evaluate_grid(c, {-3, 3, 121}, {-3, 3, 121});
    auto ps = rogue::find_peaks(f);
    REQUIRE(ps.peaks.size() == 1);
    CHECK(ps.peaks[0].x == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(ps.peaks[0].height == doctest::Approx(3.0));
    CHECK(rogue::classify_pattern(ps, c).tag == rogue::PatternClass::Central);
    CHECK(f.max_modulus() <= 3.0 + 1e-6);
}

TEST_CASE("synthetic ring with centre") {
    auto c = rogue::SolutionConfig::peregrine(3);
    c.params.a_tilde = {0.0, 1e6};
    std::vector<std::pair<double, double>> pts{{0.0, 0.0}};
    for (int k = 0; k < 5; ++k) {
        double a = 2 * std::numbers::pi * k / 5 + 0.3;
        pts.emplace_back(8 * std::cos(a), 4 * std::sin(a));  // circle in (x, 2t)
    }
    auto ps = rogue::find_peaks(bumps(pts, 12.0));
    REQUIRE(ps.peaks.size() == 6);
    auto cl = rogue::classify_pattern(ps, c);
    CHECK(cl.tag == rogue::PatternClass::Ring);
    CHECK(cl.has_center);
    CHECK(cl.ring_count == 5);
    CHECK(cl.ring_radius == doctest::Approx(8.0).epsilon(0.05));
}

TEST_CASE("synthetic triangle of six") {
    auto c = rogue::SolutionConfig::peregrine(3);
    c.params.a_tilde = {1e6, 0.0};
    // corners and edge midpoints of an equilateral triangle, given in (x, 2t)
    auto to_xt = [](std::vector<std::pair<double, double>> v) {
        for (auto& p : v) p.second /= 2;
        return v;
    };
    const double h = 10 * std::sqrt(3.0);
    auto tri = to_xt({{-10, -h / 3}, {10, -h / 3}, {0, 2 * h / 3}, {0, -h / 3}, {-5, h / 6}, {5, h / 6}});
    auto ps = rogue::find_peaks(bumps(tri, 16.0, 401));
    REQUIRE(ps.peaks.size() == 6);
    CHECK(rogue::classify_pattern(ps, c).tag == rogue::PatternClass::Triangular);
    // six scattered points are not triangular
    auto off = to_xt({{-10, 0}, {10, 0}, {0, 12}, {3, -8}, {-7, 9}, {8, 10}});
    CHECK(rogue::classify_pattern(rogue::find_peaks(bumps(off, 16.0, 401)), c).tag != rogue::PatternClass::Triangular);
}

TEST_CASE("a maximum midway between samples is found once") {
    // even sample count puts x = 0 exactly between two columns
    auto w = bumps({{0.0, 0.0}}, 2.0, 40);
    auto ps = rogue::find_peaks(w);
    REQUIRE(ps.peaks.size() == 1);
    CHECK(std::abs(ps.peaks[0].x) < 0.02);
}

TEST_CASE("peak set JSON") {
    auto ps = rogue::find_peaks(bumps({{0, 0}}, 2.0, 41));
    auto j = rogue::to_json(ps);
    CHECK(j["schema_version"] == 1);
    CHECK(j["count"] == 1);
    CHECK(j["threshold"] == 0.5);
}

TEST_CASE("a-b swap keeps the pattern class") {
    auto a = rogue::SolutionConfig::peregrine(2);
    a.params.a_tilde = {1e3};
    auto b = rogue::SolutionConfig::peregrine(2);
    b.params.b_tilde = {1e3};
    rogue::GridAxis x{-30, 30, 241};
    rogue::GridAxis t{-15, 15, 121};
    auto pa = rogue::find_peaks(rogue::evaluate_grid(a, x, t));
    auto pb = rogue::find_peaks(rogue::evaluate_grid(b, x, t));
    CHECK(pa.peaks.size() == 3);
    CHECK(pb.peaks.size() == 3);
    CHECK(rogue::classify_pattern(pa, a).tag == rogue::classify_pattern(pb, b).tag);
}
