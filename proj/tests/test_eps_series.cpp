#include <doctest.h>

#include <cmath>
#include <random>

#include "rogue/eps_series.hpp"
#include "rogue/errors.hpp"
#include "rogue/mp_real.hpp"
#include "support/oracles.hpp"
#include "support/series_checks.hpp"

using rogue::Complex;
using rogue::EpsSeries;
using rogue::Real;

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TEST_CASE("series constructors and accessors") {
    auto z = EpsSeries<double>::zero(5);
    CHECK(z.is_zero());
    CHECK(z.order() == 5);
    auto m = EpsSeries<double>::monomial(Complex<double>(3.0), 2, 6);
    CHECK(m.valuation() == 2);
    CHECK(m.coeff(2).re == 3.0);
    CHECK(m.coeff(0).re == 0.0);
    CHECK_THROWS_AS(m.coeff(6), rogue::DomainError);
    auto s = m.shifted(-3);
    CHECK(s.valuation() == -1);
    CHECK(s.order() == 3);
    auto c = EpsSeries<double>::from_coefficients(0, {Complex<double>(0.0), Complex<double>(0.0), Complex<double>(1.0)});
    CHECK(c.valuation() == 2);  // exact leading zeros are stripped
    CHECK(c.evaluate(0.5).re == doctest::Approx(0.25));
}

TEST_CASE("elementary functions of eps reproduce known Taylor coefficients") {
    const int w = 10;
    auto e = EpsSeries<double>::variable(w);
    auto ex = exp(e);
    auto sn = sin(e);
    auto cs = cos(e);
    for (int k = 0; k < w; ++k) {
        CHECK(ex.coeff(k).re == doctest::Approx(1.0 / factorial(k)));
        double sk = (k % 2 == 1) ? ((k / 2) % 2 == 0 ? 1.0 : -1.0) / factorial(k) : 0.0;
        double ck = (k % 2 == 0) ? ((k / 2) % 2 == 0 ? 1.0 : -1.0) / factorial(k) : 0.0;
        CHECK(sn.coeff(k).re == doctest::Approx(sk));
        CHECK(cs.coeff(k).re == doctest::Approx(ck));
    }
    auto one = EpsSeries<double>::constant(Complex<double>(1.0), w);
    auto l = ln(one + e);
    for (int k = 1; k < w; ++k) CHECK(l.coeff(k).re == doctest::Approx((k % 2 == 1 ? 1.0 : -1.0) / k));
    auto r = sqrt(one + e);  // binomial(1/2, k)
    double b = 1.0;
    for (int k = 0; k < w; ++k) {
        CHECK(r.coeff(k).re == doctest::Approx(b));
        b *= (0.5 - k) / (k + 1);
    }
}

TEST_CASE("division and powers") {
    const int w = 8;
    auto e = EpsSeries<double>::variable(w);
    auto one = EpsSeries<double>::constant(Complex<double>(1.0), w);
    auto g = one / (one - e);  // geometric series
    for (int k = 0; k < w; ++k) CHECK(g.coeff(k).re == doctest::Approx(1.0));
    auto inv = one / e;  // pole of order 1
    CHECK(inv.valuation() == -1);
    CHECK(rogue::powi(one + e, 3).coeff(2).re == doctest::Approx(3.0));
    CHECK_THROWS_AS(one / EpsSeries<double>::zero(w), rogue::ArithmeticError);
    CHECK_THROWS_AS(ln(e), rogue::DomainError);
    CHECK_THROWS_AS(rogue::derivative_at_zero(inv, 0), rogue::DomainError);
    CHECK(rogue::derivative_at_zero(exp(e), 4).re == doctest::Approx(1.0));
}

TEST_CASE("ring laws hold in double and at 256 bits") {
    CHECK(checks::ring_law_gap<double>(11, 20) < 1e-12);
    rogue::PrecisionScope scope(256);
    CHECK(checks::ring_law_gap<Real>(11, 20) < 1e-60);
}

TEST_CASE("sin^2 + cos^2, exp of ln and squared sqrt are identities") {
    CHECK(checks::trig_identity_gap<double>(5, 20) < 1e-11);
    rogue::PrecisionScope scope(256);
    CHECK(checks::trig_identity_gap<Real>(5, 20) < 1e-60);
}

TEST_CASE("jet derivatives agree with finite differences of the composed functions") {
    CHECK(checks::elementary_fd_gap(7) < 1e-8);
}

TEST_CASE("finite-difference weights reproduce the classic stencils") {
    auto w = oracle::fd_weights(0.0, {-1.0, 0.0, 1.0}, 2);
    CHECK(w[0] == doctest::Approx(1.0));
    CHECK(w[1] == doctest::Approx(-2.0));
    CHECK(w[2] == doctest::Approx(1.0));
    auto d = oracle::fd_weights(0.0, {-0.5, 0.5}, 1);
    CHECK(d[0] == doctest::Approx(-1.0));
    CHECK(d[1] == doctest::Approx(1.0));
}
