#include "rogue/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "rogue/degenerate.hpp"
#include "rogue/dispatch.hpp"
#include "rogue/errors.hpp"
#include "rogue/finite_eps_oracle.hpp"

namespace rogue {

ResidualReport nls_residual(const SolutionConfig& config, const GridAxis& x, const GridAxis& t, double h,
                            int stencil_order) {
    config.validate();
    x.validate();
    t.validate();
    if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
    if (stencil_order != 2 && stencil_order != 4) throw DomainError("stencil order must be 2 or 4");
    ResidualReport rep;
    rep.x = x;
    rep.t = t;
    rep.h = h;
    rep.stencil_order = stencil_order;
    with_precision(config.effective_precision(), [&]<class R>() {
        DegenerateEngine<R> engine(config);
        auto f = [&](const R& xv, const R& tv) { return engine.evaluate(xv, tv); };
        const R hr(h);
        for (int it = 0; it < t.count; ++it) {
            for (int ix = 0; ix < x.count; ++ix) {
                try {
                    Complex<R> v;
                    Complex<R> res = nls_residual_point(f, R(x.at(ix)), R(t.at(it)), hr, stencil_order, &v);
                    double a = to_double(abs(res));
                    double mag = to_double(abs(v));
                    double rel = a / std::max(1.0, mag * mag * mag);
                    rep.max_abs_residual = std::max(rep.max_abs_residual, a);
                    if (rel > rep.max_relative_residual) {
                        rep.max_relative_residual = rel;
                        rep.worst_x = x.at(ix);
                        rep.worst_t = t.at(it);
                    }
                } catch (const Error&) {
                    ++rep.flagged;
                }
            }
        }
        return 0;
    });
    return rep;
}

double peak_amplitude_check(int order, int precision) {
    SolutionConfig c = SolutionConfig::peregrine(order);
    c.precision = precision;
    return std::abs(evaluate(c, 0.0, 0.0));
}

namespace {

double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxx > 0.0 ? sxy / sxx : 0.0;
}

}  // namespace

std::vector<double> log_spaced(double lo, double hi, int count) {
    if (count < 2 || !(lo > 0.0) || !(hi > lo)) throw DomainError("log_spaced needs 0 < lo < hi and count >= 2");
    std::vector<double> r;
    for (int i = 0; i < count; ++i) {
        r.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
    }
    return r;
}

DegreeFit degree_fit(const SolutionConfig& config, std::array<double, 2> ray, const std::vector<double>& radii) {
    config.validate();
    if (radii.size() < 4) throw DomainError("degree fit needs at least 4 radii");
    for (size_t i = 1; i < radii.size(); ++i) {
        if (!(radii[i] > radii[i - 1]) || !(radii[0] > 0.0)) throw DomainError("radii must be positive and increasing");
    }
    double len = std::hypot(ray[0], ray[1]);
    if (!(len > 0.0)) throw DomainError("ray direction must be nonzero");
    DegreeFit fit;
    fit.ray = {ray[0] / len, ray[1] / len};
    fit.target = config.order * (config.order + 1);
    with_precision(config.effective_precision(), [&]<class R>() {
        DegenerateEngine<R> engine(config);
        for (double r : radii) {
            try {
                auto [ln_n, ln_d] = engine.log_determinants(R(r * fit.ray[0]), R(r * fit.ray[1]));
                fit.radii.push_back(r);
                fit.log_abs_det_d.push_back(to_double(ln_d.log_mag));
                fit.log_abs_det_n.push_back(to_double(ln_n.log_mag));
                fit.largest_usable_radius = r;
            } catch (const PrecisionError& e) {
                fit.note = std::string("stopped at radius ") + std::to_string(r) + ": " + e.what();
                break;
            }
        }
        return 0;
    });
    if (fit.radii.size() < 4) {
        throw PrecisionError("degree fit: fewer than 4 usable radii; " + fit.note, 0.0, fit.largest_usable_radius);
    }
    std::vector<double> lr;
    for (double r : fit.radii) lr.push_back(std::log(r));
    fit.slope_d = ls_slope(lr, fit.log_abs_det_d);
    fit.slope_n = ls_slope(lr, fit.log_abs_det_n);
    return fit;
}

int declared_degree(int order, int j, int k) {
    if (k <= order) return 2 * k - j;
    return 2 * k + j - 4 * order - 1;
}

std::vector<std::pair<double, double>> random_points(int count, std::uint64_t seed, double box) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-box, box);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < count; ++i) {
        double x = u(gen);
        double t = u(gen);
        pts.emplace_back(x, t);
    }
    return pts;
}

ZeroAudit structural_zero_audit(const SolutionConfig& config, int samples, std::uint64_t seed, double box) {
    config.validate();
    if (samples < 1) throw DomainError("sample count must be at least 1");
    ZeroAudit audit;
    audit.order = config.order;
    audit.samples = samples;
    audit.seed = seed;
    const int n = config.order;
    const int dim = 2 * n;
    for (int j = 1; j <= dim; ++j) {
        for (int k = 1; k <= dim; ++k) {
            if (declared_degree(n, j, k) < 0) ++audit.declared_zero_count;
        }
    }
    auto pts = random_points(samples, seed, box);
    with_precision(config.effective_precision(), [&]<class R>() {
        using std::log;
        DegenerateEngine<R> engine(config);
        for (auto [x, t] : pts) {
            auto m = engine.matrices(R(x), R(t));
            for (const ComplexMatrix<R>* mat : {&m.n, &m.d}) {
                R big = mat->max_abs();
                for (int j = 1; j <= dim; ++j) {
                    for (int k = 1; k <= dim; ++k) {
                        if (declared_degree(n, j, k) >= 0) continue;
                        double ratio = to_double(abs((*mat)(static_cast<size_t>(j - 1), static_cast<size_t>(k - 1))) / big);
                        audit.worst_zero_ratio = std::max(audit.worst_zero_ratio, ratio);
                    }
                }
            }
        }
        // growth exponents of n along a generic ray
        const double rx = 1.0 / std::hypot(1.0, 0.7);
        const double rt = 0.7 / std::hypot(1.0, 0.7);
        auto radii = log_spaced(1e3, 1e5, 5);
        std::vector<double> lr;
        std::vector<std::vector<double>> logs(static_cast<size_t>(dim * dim));
        for (double r : radii) {
            auto m = engine.matrices(R(r * rx), R(r * rt));
            lr.push_back(std::log(r));
            for (int j = 0; j < dim; ++j) {
                for (int k = 0; k < dim; ++k) {
                    logs[static_cast<size_t>(j * dim + k)].push_back(
                        to_double(log(abs(m.n(static_cast<size_t>(j), static_cast<size_t>(k))))));
                }
            }
        }
        for (int j = 1; j <= dim; ++j) {
            for (int k = 1; k <= dim; ++k) {
                int deg = declared_degree(n, j, k);
                if (deg < 0) continue;
                double s = ls_slope(lr, logs[static_cast<size_t>((j - 1) * dim + (k - 1))]);
                audit.fitted_degrees.push_back(s);
                audit.declared_degrees.push_back(deg);
                audit.worst_degree_gap = std::max(audit.worst_degree_gap, std::abs(s - deg));
            }
        }
        return 0;
    });
    return audit;
}

namespace {

template <class R>
double rel_err(const Complex<R>& a, const Complex<R>& b) {
    return to_double(abs(a - b) / abs(b));
}

}  // namespace

OracleReport oracle_equivalence(int order, const std::vector<double>& eps,
                                const std::vector<std::pair<double, double>>& points, const DeformationParams& params) {
    OracleReport rep;
    rep.order = order;
    rep.eps = eps;
    rep.points = static_cast<int>(points.size());
    SolutionConfig cfg = SolutionConfig::peregrine(order);
    cfg.params = params;
    cfg.precision = 256;
    cfg.validate();
    PrecisionScope scope(256);
    for (double e : eps) {
        auto scheme = build_spectral<Real>(order, Real(e));
        for (auto [x, t] : points) {
            for (int r : {1, 3}) {
                auto args = ThetaArgumentSet<Real>::make(scheme, params, r, Real(x), Real(t));
                Complex<Real> c = fredholm_det(args, FredholmVariant::C).value();
                Complex<Real> d = fredholm_det(args, FredholmVariant::D).value();
                Complex<Real> kw = (k_prefactor(args) * wronskian_det(args)).value();
                if (order <= kThetaSubsetMaxOrder) {
                    Complex<Real> th = theta_subset_sum(args);
                    rep.worst_theta_vs_c = std::max(rep.worst_theta_vs_c, rel_err(c, th));
                }
                rep.worst_c_vs_d = std::max(rep.worst_c_vs_d, rel_err(d, c));
                rep.worst_d_vs_kw = std::max(rep.worst_d_vs_kw, rel_err(kw, d));
            }
        }
    }
    DegenerateEngine<Real> engine(cfg);
    for (auto [x, t] : points) {
        Complex<Real> lim = oracle_solution<Real>(cfg, eps, Real(x), Real(t));
        Complex<Real> deg = engine.evaluate(Real(x), Real(t));
        rep.worst_limit_vs_degenerate = std::max(rep.worst_limit_vs_degenerate, rel_err(lim, deg));
    }
    return rep;
}

nlohmann::json report_json(std::vector<CheckRecord> records) {
    std::stable_sort(records.begin(), records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    nlohmann::json j;
    j["schema_version"] = 1;
    bool all = true;
    auto arr = nlohmann::json::array();
    for (const auto& r : records) {
        all = all && r.passed;
        arr.push_back({{"name", r.name},
                       {"status", r.passed ? "pass" : "fail"},
                       {"worst_error", r.worst_error},
                       {"tolerance", r.tolerance},
                       {"runtime_s", r.runtime_s},
                       {"details", r.details}});
    }
    j["checks"] = arr;
    j["status"] = all ? "pass" : "fail";
    return j;
}

}  // namespace rogue
