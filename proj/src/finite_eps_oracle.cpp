#include "rogue/finite_eps_oracle.hpp"

#include <cmath>
#include <string>

#include "rogue/errors.hpp"

namespace rogue {

int theta_sign(int order, int nu) {
    int exponent = nu <= order ? nu : order + nu;
    return (exponent % 2 == 0) ? 1 : -1;
}

template <class R>
ThetaArgumentSet<R> ThetaArgumentSet<R>::make(const SpectralScheme<R>& scheme, const DeformationParams& params,
                                              int r, R x, R t) {
    params.validate();
    if (params.order != scheme.order()) throw DomainError("parameters and scheme disagree on the order");
    ThetaArgumentSet a{scheme, {}, r, std::move(x), std::move(t)};
    for (int nu = 1; nu <= scheme.size(); ++nu) a.e.push_back(e_coefficient(params, scheme.epsilon(), nu));
    a.validate();
    return a;
}

template <class R>
void ThetaArgumentSet<R>::validate() const {
    if (r != 1 && r != 3) throw DomainError("theta family r must be 1 or 3");
    if (static_cast<int>(e.size()) != scheme.size()) throw DomainError("need one e coefficient per spectral point");
}

template <class R>
const Complex<R>& ThetaArgumentSet<R>::shift(int nu) const {
    const auto& p = scheme.point(nu);
    return r == 3 ? p.x3 : p.x1;
}

template <class R>
Complex<R> ThetaArgumentSet<R>::exponential(int nu) const {
    const auto& p = scheme.point(nu);
    Complex<R> z(-(R(2) * p.delta * t), p.kappa * x);
    return exp(z + shift(nu) + e[static_cast<size_t>(nu - 1)]);
}

template <class R>
Complex<R> ThetaArgumentSet<R>::theta_argument(int nu) const {
    const auto& p = scheme.point(nu);
    Complex<R> base(p.kappa * x / R(2), p.delta * t);
    Complex<R> half_i(R(0), R(1) / R(2));
    return base - half_i * (shift(nu) + e[static_cast<size_t>(nu - 1)]);
}

template <class R>
Complex<R> theta_subset_sum(const ThetaArgumentSet<R>& args) {
    args.validate();
    const int n = args.scheme.order();
    if (n > kThetaSubsetMaxOrder) {
        throw CapacityError("theta subset sum is capped at order " + std::to_string(kThetaSubsetMaxOrder) +
                            "; use fredholm_det for order " + std::to_string(n));
    }
    const int m = 2 * n;
    std::vector<Complex<R>> w(static_cast<size_t>(m));
    std::vector<R> cross(static_cast<size_t>(m * m));
    for (int v = 0; v < m; ++v) {
        w[static_cast<size_t>(v)] = args.exponential(v + 1) * R(theta_sign(n, v + 1));
        const R& gv = args.scheme.point(v + 1).gamma;
        for (int u = 0; u < m; ++u) {
            if (u == v) continue;
            const R& gu = args.scheme.point(u + 1).gamma;
            using std::abs;
            cross[static_cast<size_t>(v * m + u)] = abs((gv + gu) / (gv - gu));
        }
    }
    Complex<R> total(R(0));
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        Complex<R> term(R(1));
        for (int v = 0; v < m; ++v) {
            if (!(mask & (1UL << v))) continue;
            term = term * w[static_cast<size_t>(v)];
            for (int u = 0; u < m; ++u) {
                if (mask & (1UL << u)) continue;
                term *= cross[static_cast<size_t>(v * m + u)];
            }
        }
        total += term;
    }
    return total;
}

template <class R>
ComplexMatrix<R> fredholm_matrix(const ThetaArgumentSet<R>& args, FredholmVariant variant) {
    using std::abs;
    args.validate();
    const int n = args.scheme.order();
    const int m = 2 * n;
    std::vector<R> g;
    for (int v = 1; v <= m; ++v) g.push_back(args.scheme.point(v).gamma);
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if (g[static_cast<size_t>(a)] == g[static_cast<size_t>(b)]) {
                throw SingularConfigurationError("coincident gamma values make the Fredholm matrix undefined");
            }
        }
    }
    auto G = [&](int i) -> const R& { return g[static_cast<size_t>(i)]; };
    ComplexMatrix<R> c(static_cast<size_t>(m));
    for (int v = 0; v < m; ++v) {
        Complex<R> ev = args.exponential(v + 1) * R(theta_sign(n, v + 1));
        R den(1);
        if (variant == FredholmVariant::C) {
            for (int h = 0; h < m; ++h) {
                if (h != v) den *= abs(G(v) - G(h));
            }
        }
        for (int u = 0; u < m; ++u) {
            R f(1);
            if (variant == FredholmVariant::C) {
                for (int h = 0; h < m; ++h) {
                    if (h != u) f *= abs(G(v) + G(h));
                }
                f /= den;
            } else {
                for (int h = 0; h < m; ++h) {
                    if (h != u) f *= abs((G(h) + G(v)) / (G(h) - G(u)));
                }
            }
            c(static_cast<size_t>(v), static_cast<size_t>(u)) = ev * f;
        }
    }
    return c;
}

template <class R>
LogComplex<R> fredholm_det(const ThetaArgumentSet<R>& args, FredholmVariant variant) {
    ComplexMatrix<R> c = fredholm_matrix(args, variant);
    for (size_t i = 0; i < c.dim(); ++i) c(i, i) += Complex<R>(R(1));
    return logdet(std::move(c));
}

template <class R>
ComplexMatrix<R> wronskian_matrix(const ThetaArgumentSet<R>& args) {
    args.validate();
    const int n = args.scheme.order();
    const int m = 2 * n;
    ComplexMatrix<R> w(static_cast<size_t>(m));
    for (int v = 1; v <= m; ++v) {
        Complex<R> th = args.theta_argument(v);
        Complex<R> s = sin(th);
        Complex<R> c = cos(th);
        // d/dy advances the phase by pi/2: sin -> cos -> -sin -> -cos, cos -> -sin -> -cos -> sin
        const Complex<R> cycle_sin[4] = {s, c, -s, -c};
        const Complex<R> cycle_cos[4] = {c, -s, -c, s};
        const Complex<R>* cycle = v <= n ? cycle_sin : cycle_cos;
        R gp(1);
        for (int mu = 0; mu < m; ++mu) {
            w(static_cast<size_t>(v - 1), static_cast<size_t>(mu)) = cycle[mu % 4] * gp;
            gp *= args.scheme.point(v).gamma;
        }
    }
    return w;
}

template <class R>
LogComplex<R> wronskian_det(const ThetaArgumentSet<R>& args) {
    return logdet(wronskian_matrix(args));
}

template <class R>
LogComplex<R> k_prefactor(const ThetaArgumentSet<R>& args) {
    using std::abs;
    using std::log;
    args.validate();
    const int m = args.scheme.size();
    Complex<R> sum(R(0));
    for (int v = 1; v <= m; ++v) sum += args.theta_argument(v);
    // exp(i * sum) = exp(-Im sum) * e^{i Re sum}
    R log_mag = R(static_cast<long>(m)) * log(R(2)) - sum.im;
    R phase = sum.re;
    for (int v = 2; v <= m; ++v) {
        for (int u = 1; u < v; ++u) {
            R diff = args.scheme.point(v).gamma - args.scheme.point(u).gamma;
            if (diff == R(0)) throw SingularConfigurationError("coincident gamma values in the k prefactor");
            log_mag -= log(abs(diff));
            if (diff < R(0)) phase += pi_v<R>();
        }
    }
    return LogComplex<R>::make(log_mag, phase);
}

template <class R>
Complex<R> wronskian_solution(const SpectralScheme<R>& scheme, const DeformationParams& params, double phase,
                              const R& x, const R& t) {
    auto a3 = ThetaArgumentSet<R>::make(scheme, params, 3, x, t);
    auto a1 = ThetaArgumentSet<R>::make(scheme, params, 1, x, t);
    ComplexMatrix<R> w1 = wronskian_matrix(a1);
    LogComplex<R> d1 = logdet(w1);
    check_precision_floor(d1, w1, "Wronskian W_1(0)");
    LogComplex<R> d3 = wronskian_det(a3);
    // k_3 = (-1)^N k_1 on the principal branch
    Complex<R> carrier = exp(Complex<R>(R(0), R(2) * t - R(phase)));
    if (scheme.order() % 2 == 1) carrier = -carrier;
    return logratio(d3, d1) * carrier;
}

template <class R>
Complex<R> extrapolate_to_zero(const std::vector<R>& h, std::vector<Complex<R>> values) {
    if (h.size() != values.size() || h.empty()) throw DomainError("extrapolation needs matching nonempty samples");
    const size_t n = values.size();
    for (size_t k = 1; k < n; ++k) {
        for (size_t i = n - 1; i >= k; --i) {
            R w = h[i] / (h[i - k] - h[i]);
            values[i] = values[i] + (values[i] - values[i - 1]) * w;
        }
    }
    return values[n - 1];
}

template <class R>
Complex<R> oracle_solution(const SolutionConfig& config, const std::vector<double>& eps_ladder, const R& x,
                           const R& t) {
    std::vector<R> h;
    std::vector<Complex<R>> vals;
    for (double e : eps_ladder) {
        R eps(e);
        auto scheme = build_spectral(config.order, eps);
        vals.push_back(wronskian_solution(scheme, config.params, config.phase, x, t));
        h.push_back(eps * eps);
    }
    return extrapolate_to_zero(h, std::move(vals));
}

#define ROGUE_INSTANTIATE(R)                                                                                      \
    template struct ThetaArgumentSet<R>;                                                                          \
    template Complex<R> theta_subset_sum<R>(const ThetaArgumentSet<R>&);                                          \
    template ComplexMatrix<R> fredholm_matrix<R>(const ThetaArgumentSet<R>&, FredholmVariant);                    \
    template LogComplex<R> fredholm_det<R>(const ThetaArgumentSet<R>&, FredholmVariant);                          \
    template ComplexMatrix<R> wronskian_matrix<R>(const ThetaArgumentSet<R>&);                                    \
    template LogComplex<R> wronskian_det<R>(const ThetaArgumentSet<R>&);                                          \
    template LogComplex<R> k_prefactor<R>(const ThetaArgumentSet<R>&);                                            \
    template Complex<R> wronskian_solution<R>(const SpectralScheme<R>&, const DeformationParams&, double,         \
                                              const R&, const R&);                                                \
    template Complex<R> extrapolate_to_zero<R>(const std::vector<R>&, std::vector<Complex<R>>);                   \
    template Complex<R> oracle_solution<R>(const SolutionConfig&, const std::vector<double>&, const R&, const R&);

ROGUE_INSTANTIATE(double)
ROGUE_INSTANTIATE(Real)

#undef ROGUE_INSTANTIATE

}  // namespace rogue
