#include "rogue/degenerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <memory>
#include <thread>

#include "rogue/dispatch.hpp"
#include "rogue/errors.hpp"
#include "rogue/finite_eps_oracle.hpp"

namespace rogue {

namespace {

template <class R>
using Series = EpsSeries<R>;

template <class R>
Series<R> cst(double v, int window) {
    return Series<R>::constant(Complex<R>(R(v)), window);
}

}  // namespace

template <class R>
DegenerateEngine<R>::DegenerateEngine(const SolutionConfig& config)
    : order_(config.order), window_(2 * config.order + 3), phase_(config.phase) {
    config.validate();
    const int w = window_;
    const Complex<R> I = Complex<R>::i();
    const Complex<R> minus_half_i(R(0), R(-1) / R(2));

    Series<R> eps = Series<R>::variable(w);
    Series<R> lam1 = cst<R>(1, w) - eps * eps * Complex<R>(R(2));
    // gamma_1 = eps sqrt(((1 - lam)/eps^2) / (1 + lam)): the eps^2 is divided out
    // exactly so the square root sees a nonzero constant term.
    Series<R> gamma = sqrt(((cst<R>(1, w) - lam1).shifted(-2)) / (cst<R>(1, w) + lam1)).shifted(1);

    for (int b = 0; b < 2; ++b) {
        Series<R> lam = b == 0 ? lam1 : -lam1;
        Series<R> kappa = sqrt((cst<R>(1, w) - lam * lam).shifted(-2)).shifted(1) * Complex<R>(R(2));
        Series<R> delta = kappa * lam;
        // (gamma_nu - i)/(gamma_nu + i). At the first point it tends to -1; the
        // log is taken of its negative so the constant term is exactly zero, and
        // the dropped +-i pi (either branch) becomes a shift of the trig argument
        // by pi, i.e. a sign flip of the phi rows. For the mirror point
        // gamma_nu = 1/gamma_1 and the ratio is rewritten to stay a Taylor series.
        Series<R> ratio = b == 0 ? (Series<R>::constant(I, w) - gamma) / (gamma + Series<R>::constant(I, w))
                                 : (cst<R>(1, w) - gamma * I) / (cst<R>(1, w) + gamma * I);
        Series<R> x3 = ln(ratio) * Complex<R>(R(2));
        Series<R> e = e_coefficient_series<R>(config.params, b == 0 ? 1 : order_ + 1, w);
        Expansion& ex = exp_[static_cast<size_t>(b)];
        ex.x_coeff = kappa * Complex<R>(R(1) / R(2));
        ex.t_coeff = delta * I;
        ex.phi_shift = (x3 + e) * minus_half_i;
        ex.psi_shift = e * minus_half_i;
        ex.phi_sign = b == 0 ? -1 : 1;
    }

    Series<R> inv = powi(gamma, -1);
    gamma_pow_.push_back(inv);
    Series<R> p = Series<R>::constant(Complex<R>(R(1)), w);
    for (int k = 0; k <= 2 * order_ - 2; ++k) {
        gamma_pow_.push_back(p);
        p = p * gamma;
    }
}

template <class R>
EpsSeries<R> DegenerateEngine<R>::argument(const R& x, const R& t, Family family, Base base) const {
    const Expansion& ex = exp_[base == Base::First ? 0 : 1];
    return ex.x_coeff * Complex<R>(x) + ex.t_coeff * Complex<R>(t) +
           (family == Family::Phi ? ex.phi_shift : ex.psi_shift);
}

template <class R>
std::vector<EpsSeries<R>> DegenerateEngine<R>::rows_from_argument(const EpsSeries<R>& argument, Base base,
                                                                   int sign) const {
    auto [s, c] = sincos(argument);
    if (sign < 0) {
        s = -s;
        c = -c;
    }
    const int n2 = 2 * order_;
    std::vector<EpsSeries<R>> rows;
    rows.reserve(static_cast<size_t>(n2));
    for (int m = 1; m <= n2; ++m) {
        int q = (m - 1) % 4;
        int power = 0;
        Series<R> trig;
        if (base == Base::First) {
            power = m - 2;
            trig = q == 0 ? s : q == 1 ? c : q == 2 ? -s : -c;
        } else {
            power = n2 - 1 - m;
            trig = q == 0 ? c : q == 1 ? -s : q == 2 ? -c : s;
        }
        Series<R> row = gamma_pow_[static_cast<size_t>(power + 1)] * trig;
        if (row.valuation() < 0) {
            throw ConstructionError("row " + std::to_string(m) + " kept a pole of order " +
                                    std::to_string(-row.valuation()));
        }
        if (row.order() < n2 - 1) {
            throw ConstructionError("row " + std::to_string(m) + " series window too short (order " +
                                    std::to_string(row.order()) + ")");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class R>
ColumnFamily<R> DegenerateEngine<R>::column_family(const R& x, const R& t, Family family, Base base) const {
    int sign = family == Family::Phi ? exp_[base == Base::First ? 0 : 1].phi_sign : 1;
    return {family, base, rows_from_argument(argument(x, t, family, base), base, sign)};
}

template <class R>
DegenerateMatrices<R> DegenerateEngine<R>::matrices(const R& x, const R& t) const {
    const int n = order_;
    const auto dim = static_cast<size_t>(2 * n);
    DegenerateMatrices<R> out{ComplexMatrix<R>(dim), ComplexMatrix<R>(dim), x, t};
    for (Family fam : {Family::Phi, Family::Psi}) {
        ComplexMatrix<R>& target = fam == Family::Phi ? out.n : out.d;
        for (Base base : {Base::First, Base::Mirror}) {
            auto rows = column_family(x, t, fam, base).rows;
            size_t offset = base == Base::First ? 0 : static_cast<size_t>(n);
            for (size_t j = 0; j < dim; ++j) {
                for (int k = 1; k <= n; ++k) {
                    target(j, offset + static_cast<size_t>(k - 1)) = derivative_at_zero(rows[j], 2 * k - 2);
                }
            }
        }
    }
    return out;
}

template <class R>
std::pair<LogComplex<R>, LogComplex<R>> DegenerateEngine<R>::log_determinants(const R& x, const R& t) const {
    auto m = matrices(x, t);
    LogComplex<R> dd = logdet(m.d);
    check_precision_floor(dd, m.d, "denominator determinant");
    return {logdet(m.n), dd};
}

template <class R>
Complex<R> DegenerateEngine<R>::evaluate(const R& x, const R& t) const {
    auto [ln_n, ln_d] = log_determinants(x, t);
    // k_3 = (-1)^N k_1 on the principal branch
    Complex<R> carrier = exp(Complex<R>(R(0), R(2) * t - R(phase_)));
    if (order_ % 2 == 1) carrier = -carrier;
    return logratio(ln_n, ln_d) * carrier;
}

template <class R>
ColumnFamily<R> build_column_family(const SolutionConfig& config, const R& x, const R& t, Family family, Base base) {
    return DegenerateEngine<R>(config).column_family(x, t, family, base);
}

template <class R>
DegenerateMatrices<R> build_matrices(const SolutionConfig& config, const R& x, const R& t) {
    return DegenerateEngine<R>(config).matrices(x, t);
}

std::complex<double> evaluate(const SolutionConfig& config, double x, double t) {
    config.validate();
    return with_precision(config.effective_precision(), [&]<class R>() {
        if (config.representation == Representation::Oracle) {
            return to_std(oracle_solution<R>(config, config.oracle_eps, R(x), R(t)));
        }
        return to_std(DegenerateEngine<R>(config).evaluate(R(x), R(t)));
    });
}

namespace {

// Evaluates the listed sample indices at `bits`; returns those that ran out of precision.
std::vector<int> grid_pass(const SolutionConfig& config, WaveField& field, const std::vector<int>& todo, int bits,
                           bool keep_decimals, unsigned threads) {
    const GridAxis& x = field.x_axis();
    const GridAxis& t = field.t_axis();
    std::atomic<size_t> next{0};
    std::vector<std::vector<int>> failed(threads);

    auto worker = [&](unsigned id) {
        with_precision(bits, [&]<class R>() {
            std::unique_ptr<DegenerateEngine<R>> engine;
            if (config.representation == Representation::Degenerate) {
                engine = std::make_unique<DegenerateEngine<R>>(config);
            }
            for (size_t k = next++; k < todo.size(); k = next++) {
                int idx = todo[k];
                int ix = idx % x.count;
                int it = idx / x.count;
                try {
                    R xv(x.at(ix));
                    R tv(t.at(it));
                    Complex<R> v = engine ? engine->evaluate(xv, tv)
                                          : oracle_solution<R>(config, config.oracle_eps, xv, tv);
                    if (keep_decimals) {
                        field.set(ix, it, to_std(v), ScalarTraits<R>::to_string(v.re),
                                  ScalarTraits<R>::to_string(v.im), ScalarTraits<R>::to_string(abs(v)));
                    } else {
                        field.set(ix, it, to_std(v));
                    }
                } catch (const PrecisionError& err) {
                    field.flag(ix, it, err.what());
                    failed[id].push_back(idx);
                } catch (const Error& err) {
                    field.flag(ix, it, err.what());
                }
            }
            return 0;
        });
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
        for (auto& th : pool) th.join();
    }
    std::vector<int> out;
    for (auto& f : failed) out.insert(out.end(), f.begin(), f.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

WaveField evaluate_grid(const SolutionConfig& config, const GridAxis& x, const GridAxis& t, const GridOptions& options) {
    config.validate();
    x.validate();
    t.validate();
    WaveField field(x, t);
    field.order = config.order;
    field.params = config.params;
    field.phase = config.phase;
    field.precision = config.effective_precision();
    field.representation = config.representation == Representation::Oracle ? "oracle" : "degenerate";
    if (options.keep_decimals) field.enable_decimals();

    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    const int total = x.count * t.count;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(total));
    std::vector<int> todo(static_cast<size_t>(total));
    for (int i = 0; i < total; ++i) todo[static_cast<size_t>(i)] = i;

    auto failed = grid_pass(config, field, todo, field.precision, options.keep_decimals, threads);
    if (!failed.empty() && options.fallback_precision > field.precision) {
        field.fallback_precision = options.fallback_precision;
        field.escalated = static_cast<int>(failed.size());
        grid_pass(config, field, failed, options.fallback_precision, options.keep_decimals,
                  std::min<unsigned>(threads, static_cast<unsigned>(failed.size())));
    }
    return field;
}

#define ROGUE_INSTANTIATE(R)                                                                                   \
    template class DegenerateEngine<R>;                                                                        \
    template ColumnFamily<R> build_column_family<R>(const SolutionConfig&, const R&, const R&, Family, Base);   \
    template DegenerateMatrices<R> build_matrices<R>(const SolutionConfig&, const R&, const R&);

ROGUE_INSTANTIATE(double)
ROGUE_INSTANTIATE(Real)

#undef ROGUE_INSTANTIATE

}  // namespace rogue
