#include "rogue/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "rogue/degenerate.hpp"
#include "rogue/errors.hpp"

namespace rogue {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<int> orders_or(const SuiteOptions& o, std::vector<int> fallback) {
    return o.orders.empty() ? fallback : o.orders;
}

std::string tag(const std::string& suite, int order, const std::string& extra = "") {
    std::string s = suite + "/N=" + std::to_string(order);
    if (!extra.empty()) s += "/" + extra;
    return s;
}

nlohmann::json params_json(const DeformationParams& p) {
    return {{"a_tilde", p.a_tilde}, {"b_tilde", p.b_tilde}};
}

std::vector<CheckRecord> amplitude_suite(const SuiteOptions& o) {
    std::vector<CheckRecord> out;
    for (int n : orders_or(o, {1, 2, 3, 4, 5})) {
        auto start = Clock::now();
        CheckRecord r;
        r.name = tag("amplitude", n);
        r.tolerance = 1e-8;
        try {
            double amp = peak_amplitude_check(n, o.precision);
            r.worst_error = std::abs(amp - (2 * n + 1));
            r.passed = r.worst_error <= r.tolerance;
            r.details = {{"value", amp}, {"expected", 2 * n + 1}, {"precision", o.precision}};
        } catch (const PrecisionError& e) {
            r.worst_error = std::numeric_limits<double>::infinity();
            r.details = {{"error", e.what()}, {"expected", 2 * n + 1}, {"precision", o.precision}};
        }
        r.runtime_s = seconds_since(start);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckRecord> oracle_suite(const SuiteOptions& o) {
    std::vector<CheckRecord> out;
    auto pts = random_points(o.points, o.seed, 2.0);
    for (int n : orders_or(o, {1, 2, 3})) {
        for (bool randomized : {false, true}) {
            auto start = Clock::now();
            DeformationParams p = randomized ? random_params(n, o.seed + static_cast<std::uint64_t>(n))
                                             : DeformationParams::zero(n);
            if (randomized && p.all_zero()) continue;
            OracleReport rep = oracle_equivalence(n, o.eps, pts, p);
            double t = seconds_since(start);
            const std::string which = randomized ? "random" : "zero";
            CheckRecord chain;
            chain.name = tag("oracle", n, which + "/chain");
            chain.tolerance = 1e-9;
            chain.worst_error = std::max({rep.worst_theta_vs_c, rep.worst_c_vs_d, rep.worst_d_vs_kw});
            chain.passed = chain.worst_error <= chain.tolerance;
            chain.details = {{"theta_vs_c", rep.worst_theta_vs_c},
                             {"c_vs_d", rep.worst_c_vs_d},
                             {"d_vs_kw", rep.worst_d_vs_kw},
                             {"eps", o.eps},
                             {"points", rep.points},
                             {"seed", o.seed},
                             {"params", params_json(p)}};
            chain.runtime_s = t;
            CheckRecord lim;
            lim.name = tag("oracle", n, which + "/limit");
            lim.tolerance = 1e-6;
            lim.worst_error = rep.worst_limit_vs_degenerate;
            lim.passed = lim.worst_error <= lim.tolerance;
            lim.details = {{"eps", o.eps}, {"points", rep.points}, {"seed", o.seed}, {"params", params_json(p)}};
            lim.runtime_s = 0.0;
            out.push_back(std::move(chain));
            out.push_back(std::move(lim));
        }
    }
    return out;
}

std::vector<CheckRecord> residual_suite(const SuiteOptions& o) {
    std::vector<CheckRecord> out;
    GridAxis axis{-2.0, 2.0, o.grid};
    for (int n : orders_or(o, {1, 2, 3})) {
        for (bool randomized : {false, true}) {
            if (randomized && n == 1) continue;  // order 1 has no parameters
            auto start = Clock::now();
            SolutionConfig c = SolutionConfig::peregrine(n);
            if (randomized) c.params = random_params(n, o.seed + static_cast<std::uint64_t>(n));
            c.precision = o.precision;
            ResidualReport full = nls_residual(c, axis, axis, o.h, 4);
            ResidualReport half = nls_residual(c, axis, axis, o.h / 2, 4);
            double ratio = half.max_relative_residual > 0.0 ? full.max_relative_residual / half.max_relative_residual
                                                            : std::numeric_limits<double>::infinity();
            CheckRecord r;
            r.name = tag("residual", n, randomized ? "random" : "zero");
            r.tolerance = 1e-5;
            r.worst_error = full.max_relative_residual;
            r.passed = full.flagged == 0 && half.flagged == 0 && r.worst_error <= r.tolerance && ratio >= 8.0;
            r.details = {{"h", o.h},
                         {"max_abs_residual", full.max_abs_residual},
                         {"half_step_residual", half.max_relative_residual},
                         {"halving_ratio", ratio},
                         {"required_ratio", 8.0},
                         {"worst_x", full.worst_x},
                         {"worst_t", full.worst_t},
                         {"flagged", full.flagged + half.flagged},
                         {"grid", axis.to_string()},
                         {"precision", c.effective_precision()},
                         {"params", params_json(c.params)}};
            r.runtime_s = seconds_since(start);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckRecord> degree_suite(const SuiteOptions& o) {
    std::vector<CheckRecord> out;
    auto radii = log_spaced(1e2, 1e4, 8);
    for (int n : orders_or(o, {1, 2, 3})) {
        SolutionConfig c = SolutionConfig::peregrine(n);
        c.precision = o.precision;
        for (auto ray : {std::array<double, 2>{1.0, 0.0}, std::array<double, 2>{0.0, 1.0}}) {
            auto start = Clock::now();
            CheckRecord r;
            r.name = tag("degree", n, ray[0] > 0 ? "ray_x" : "ray_t");
            r.tolerance = 0.02;
            try {
                DegreeFit fit = degree_fit(c, ray, radii);
                r.worst_error = std::abs(fit.slope_d - fit.target) / fit.target;
                r.passed = r.worst_error <= r.tolerance;
                r.details = {{"slope_d", fit.slope_d},
                             {"slope_n", fit.slope_n},
                             {"target", fit.target},
                             {"radii", fit.radii},
                             {"largest_usable_radius", fit.largest_usable_radius}};
                if (!fit.note.empty()) r.details["note"] = fit.note;
            } catch (const PrecisionError& e) {
                r.worst_error = std::numeric_limits<double>::infinity();
                r.details = {{"error", e.what()}};
            }
            r.runtime_s = seconds_since(start);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckRecord> zeros_suite(const SuiteOptions& o) {
    std::vector<CheckRecord> out;
    for (int n : orders_or(o, {2, 3, 4})) {
        auto start = Clock::now();
        SolutionConfig c = SolutionConfig::peregrine(n);
        c.precision = o.precision;
        ZeroAudit a = structural_zero_audit(c, o.samples, o.seed);
        CheckRecord r;
        r.name = tag("zeros", n);
        r.tolerance = 1e-20;
        r.worst_error = a.worst_zero_ratio;
        r.passed = a.worst_zero_ratio <= r.tolerance;
        r.details = {{"samples", a.samples},
                     {"seed", a.seed},
                     {"declared_zero_entries", a.declared_zero_count},
                     {"worst_degree_gap", a.worst_degree_gap},
                     {"fitted_degrees", a.fitted_degrees},
                     {"declared_degrees", a.declared_degrees}};
        r.runtime_s = seconds_since(start);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckRecord> symmetry_suite(const SuiteOptions& o) {
    std::vector<CheckRecord> out;
    GridAxis axis{-2.0, 2.0, o.grid};
    for (int n : orders_or(o, {1, 2, 3, 4})) {
        auto start = Clock::now();
        SolutionConfig c = SolutionConfig::peregrine(n);
        c.precision = o.precision;
        WaveField f = evaluate_grid(c, axis, axis);
        double worst = 0.0;
        const int m = axis.count;
        for (int it = 0; it < m; ++it) {
            for (int ix = 0; ix < m; ++ix) {
                double v = f.modulus(ix, it);
                worst = std::max({worst, std::abs(v - f.modulus(m - 1 - ix, it)), std::abs(v - f.modulus(ix, m - 1 - it))});
            }
        }
        CheckRecord r;
        r.name = tag("symmetry", n);
        r.tolerance = 1e-10;
        r.worst_error = f.flagged_count() > 0 ? std::numeric_limits<double>::infinity() : worst;
        r.passed = r.worst_error <= r.tolerance;
        r.details = {{"grid", axis.to_string()}, {"flagged", f.flagged_count()}, {"precision", c.effective_precision()}};
        r.runtime_s = seconds_since(start);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckRecord> pattern_suite(const SuiteOptions& o) {
    std::vector<CheckRecord> out;
    for (const auto& pc : pattern_cases()) {
        if (!o.orders.empty() && std::find(o.orders.begin(), o.orders.end(), pc.config.order) == o.orders.end()) continue;
        auto start = Clock::now();
        GridOptions g;
        g.fallback_precision = 256;
        WaveField f = evaluate_grid(pc.config, pc.x, pc.t, g);
        PeakSet ps = find_peaks(f);
        ps.classification = classify_pattern(ps, pc.config);
        CheckRecord r;
        r.name = "patterns/" + pc.name;
        r.tolerance = 0.0;
        const int count = static_cast<int>(ps.peaks.size());
        bool class_ok = pc.expected == PatternClass::Unclassified || ps.classification.tag == pc.expected;
        r.passed = count == pc.expected_peaks && class_ok && f.flagged_count() == 0;
        r.worst_error = std::abs(count - pc.expected_peaks);
        r.details = to_json(ps);
        r.details["expected_peaks"] = pc.expected_peaks;
        r.details["expected_class"] = pattern_name(pc.expected);
        r.details["x"] = pc.x.to_string();
        r.details["t"] = pc.t.to_string();
        r.details["flagged"] = f.flagged_count();
        r.details["escalated"] = f.escalated;
        r.runtime_s = seconds_since(start);
        out.push_back(std::move(r));
    }
    return out;
}

using SuiteFn = std::function<std::vector<CheckRecord>(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"amplitude", amplitude_suite}, {"oracle", oracle_suite},     {"residual", residual_suite},
        {"degree", degree_suite},       {"zeros", zeros_suite},       {"symmetry", symmetry_suite},
        {"patterns", pattern_suite},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        v.push_back("all");
        return v;
    }();
    return names;
}

std::vector<CheckRecord> run_suite(const std::string& name, const SuiteOptions& options) {
    std::vector<CheckRecord> out;
    for (const auto& [n, fn] : registry()) {
        if (name == "all" || name == n) {
            auto recs = fn(options);
            out.insert(out.end(), recs.begin(), recs.end());
            if (name != "all") return out;
        }
    }
    if (name != "all") throw DomainError("unknown suite '" + name + "'");
    return out;
}

DeformationParams random_params(int order, std::uint64_t seed) {
    DeformationParams p = DeformationParams::zero(order);
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (auto& a : p.a_tilde) a = u(gen);
    for (auto& b : p.b_tilde) b = u(gen);
    return p;
}

std::vector<PatternCase> pattern_cases() {
    std::vector<PatternCase> cases;
    {
        PatternCase c;
        c.name = "N=3/a1=1e6";
        c.config = SolutionConfig::peregrine(3);
        c.config.params.a_tilde[0] = 1e6;
        c.config.precision = 53;
        c.x = GridAxis{-120.0, 70.0, 761};
        c.t = GridAxis{-60.0, 60.0, 481};
        c.expected_peaks = 6;
        c.expected = PatternClass::Triangular;
        cases.push_back(c);
    }
    {
        PatternCase c;
        c.name = "N=3/a2=1e6";
        c.config = SolutionConfig::peregrine(3);
        c.config.params.a_tilde[1] = 1e6;
        c.config.precision = 53;
        c.x = GridAxis{-25.0, 25.0, 201};
        c.t = GridAxis{-12.5, 12.5, 101};
        c.expected_peaks = 6;  // 5 on the ring plus the order-1 centre
        c.expected = PatternClass::Ring;
        cases.push_back(c);
    }
    {
        PatternCase c;
        c.name = "N=4/a1=1e8";
        c.config = SolutionConfig::peregrine(4);
        c.config.params.a_tilde[0] = 1e8;
        c.config.precision = 53;
        c.x = GridAxis{-700.0, 380.0, 2161};
        c.t = GridAxis{-320.0, 320.0, 1281};
        c.expected_peaks = 10;
        c.expected = PatternClass::Triangular;
        cases.push_back(c);
    }
    return cases;
}

}  // namespace rogue
