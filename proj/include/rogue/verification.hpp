#ifndef ROGUE_VERIFICATION_HPP
#define ROGUE_VERIFICATION_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rogue/complex.hpp"
#include "rogue/spectral_scheme.hpp"
#include "rogue/wavefield.hpp"

namespace rogue {

/// i v_t + v_xx + 2|v|^2 v at one point from central differences of f(x, t).
/// stencil_order is 2 or 4.
template <class R, class F>
Complex<R> nls_residual_point(F&& f, const R& x, const R& t, const R& h, int stencil_order, Complex<R>* value = nullptr) {
    const Complex<R> f0 = f(x, t);
    Complex<R> vt, vxx;
    if (stencil_order == 2) {
        vt = (f(x, t + h) - f(x, t - h)) / (R(2) * h);
        vxx = (f(x + h, t) - f0 * R(2) + f(x - h, t)) / (h * h);
    } else {
        const R two_h = R(2) * h;
        vt = (-f(x, t + two_h) + f(x, t + h) * R(8) - f(x, t - h) * R(8) + f(x, t - two_h)) / (R(12) * h);
        vxx = (-f(x + two_h, t) + f(x + h, t) * R(16) - f0 * R(30) + f(x - h, t) * R(16) - f(x - two_h, t)) /
              (R(12) * h * h);
    }
    if (value) *value = f0;
    return Complex<R>::i() * vt + vxx + f0 * (R(2) * norm(f0));
}

struct ResidualReport {
    GridAxis x;
    GridAxis t;
    double h = 1e-3;
    int stencil_order = 4;
    double max_abs_residual = 0.0;
    /// residual / max(1, |v|^3)
    double max_relative_residual = 0.0;
    double worst_x = 0.0;
    double worst_t = 0.0;
    int flagged = 0;
};

ResidualReport nls_residual(const SolutionConfig& config, const GridAxis& x, const GridAxis& t, double h = 1e-3,
                            int stencil_order = 4);

/// |v(0, 0)| at zero parameters.
double peak_amplitude_check(int order, int precision = 256);

struct DegreeFit {
    std::array<double, 2> ray{1.0, 0.0};
    std::vector<double> radii;
    std::vector<double> log_abs_det_d;
    std::vector<double> log_abs_det_n;
    double slope_d = 0.0;
    double slope_n = 0.0;
    int target = 0;
    /// Largest radius evaluated before precision ran out.
    double largest_usable_radius = 0.0;
    std::string note;
};

/// Least-squares slope of log|det d| (and log|det n|) against log r along the ray.
DegreeFit degree_fit(const SolutionConfig& config, std::array<double, 2> ray, const std::vector<double>& radii);

/// Radii log-spaced over [lo, hi].
std::vector<double> log_spaced(double lo, double hi, int count);

/// Polynomial degree declared for entry (j, k) (one-based) of the limit
/// matrices; negative means the entry vanishes identically.
int declared_degree(int order, int j, int k);

struct ZeroAudit {
    int order = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    /// Worst |entry| / max|entry| over declared zeros, for n and d together.
    double worst_zero_ratio = 0.0;
    int declared_zero_count = 0;
    /// Growth exponent of every nonzero entry of n along the ray (row-major).
    std::vector<double> fitted_degrees;
    std::vector<int> declared_degrees;
    double worst_degree_gap = 0.0;
};

/// Samples (x, t) uniformly in [-box, box]^2 with the given seed.
ZeroAudit structural_zero_audit(const SolutionConfig& config, int samples, std::uint64_t seed = 20240601,
                                double box = 5.0);

struct OracleReport {
    int order = 0;
    std::vector<double> eps;
    int points = 0;
    double worst_theta_vs_c = 0.0;
    double worst_c_vs_d = 0.0;
    double worst_d_vs_kw = 0.0;
    double worst_limit_vs_degenerate = 0.0;
};

/// Identity chain at each eps and both r, then the eps -> 0 limit against the
/// degenerate evaluation, at 256 bits.
OracleReport oracle_equivalence(int order, const std::vector<double>& eps, const std::vector<std::pair<double, double>>& points,
                                const DeformationParams& params);

/// Seeded uniform points in [-box, box]^2.
std::vector<std::pair<double, double>> random_points(int count, std::uint64_t seed, double box);

/// One record of the machine-readable report.
struct CheckRecord {
    std::string name;
    bool passed = false;
    double worst_error = 0.0;
    double tolerance = 0.0;
    double runtime_s = 0.0;
    nlohmann::json details = nlohmann::json::object();
};

/// Sorted by check name, wrapped with schema_version.
nlohmann::json report_json(std::vector<CheckRecord> records);

}  // namespace rogue

#endif  // ROGUE_VERIFICATION_HPP
