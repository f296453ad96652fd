#include "rogue/spectral_scheme.hpp"

#include <cmath>
#include <sstream>

#include "rogue/errors.hpp"

namespace rogue {

DeformationParams DeformationParams::zero(int order) {
    if (order < 1) throw DomainError("order must be at least 1");
    DeformationParams p;
    p.order = order;
    p.a_tilde.assign(static_cast<size_t>(order - 1), 0.0);
    p.b_tilde.assign(static_cast<size_t>(order - 1), 0.0);
    return p;
}

void DeformationParams::validate() const {
    if (order < 1) throw DomainError("order must be at least 1");
    auto expect = static_cast<size_t>(order - 1);
    if (a_tilde.size() != expect || b_tilde.size() != expect) {
        std::ostringstream os;
        os << "order " << order << " takes exactly " << expect << " a and " << expect << " b parameters (got "
           << a_tilde.size() << " and " << b_tilde.size() << ")";
        throw DomainError(os.str());
    }
    for (double v : a_tilde) {
        if (!std::isfinite(v)) throw DomainError("deformation parameter is not finite");
    }
    for (double v : b_tilde) {
        if (!std::isfinite(v)) throw DomainError("deformation parameter is not finite");
    }
}

bool DeformationParams::all_zero() const {
    for (double v : a_tilde) {
        if (v != 0.0) return false;
    }
    for (double v : b_tilde) {
        if (v != 0.0) return false;
    }
    return true;
}

SolutionConfig SolutionConfig::peregrine(int order) {
    SolutionConfig c;
    c.order = order;
    c.params = DeformationParams::zero(order);
    return c;
}

int default_precision(int order) { return order <= 2 ? 53 : 256; }

int SolutionConfig::effective_precision() const { return precision == 0 ? default_precision(order) : precision; }

void SolutionConfig::validate() const {
    if (order < 1) throw DomainError("order must be at least 1");
    if (params.order != order) throw DomainError("deformation parameters were built for a different order");
    params.validate();
    if (!std::isfinite(phase)) throw DomainError("phase must be finite");
    if (precision != 0 && precision < 53) throw DomainError("precision must be at least 53 bits");
    if (representation == Representation::Oracle) {
        if (oracle_eps.empty()) throw DomainError("oracle representation needs at least one epsilon");
        for (double e : oracle_eps) {
            if (!(e > 0.0 && e < max_epsilon(order))) throw DomainError("oracle epsilon outside admissible range");
        }
    }
}

double max_epsilon(int order) { return 1.0 / (order * std::sqrt(2.0)); }

template <class R>
SpectralPoint<R> spectral_point(int index, const R& lambda) {
    using std::sqrt;
    if (!(lambda > R(-1) && lambda < R(1))) throw DomainError("lambda must lie strictly inside (-1, 1)");
    SpectralPoint<R> p;
    p.index = index;
    p.lambda = lambda;
    p.kappa = R(2) * sqrt(R(1) - lambda * lambda);
    p.delta = p.kappa * lambda;
    p.gamma = sqrt((R(1) - lambda) / (R(1) + lambda));
    p.x1 = Complex<R>(R(0));
    Complex<R> g(p.gamma);
    p.x3 = log((g - Complex<R>::i()) / (g + Complex<R>::i())) * R(2);
    return p;
}

template <class R>
SpectralScheme<R>::SpectralScheme(int order, R epsilon, std::vector<SpectralPoint<R>> points)
    : order_(order), eps_(std::move(epsilon)), points_(std::move(points)) {
    if (order_ < 1) throw DomainError("order must be at least 1");
    if (static_cast<int>(points_.size()) != 2 * order_) throw ConstructionError("scheme needs exactly 2N points");
}

template <class R>
const SpectralPoint<R>& SpectralScheme<R>::point(int nu) const {
    if (nu < 1 || nu > size()) {
        throw IndexError("spectral index " + std::to_string(nu) + " outside 1.." + std::to_string(size()));
    }
    return points_[static_cast<size_t>(nu - 1)];
}

template <class R>
SpectralScheme<R> build_spectral(int order, const R& eps) {
    if (order < 1) throw DomainError("order must be at least 1");
    double lim = max_epsilon(order);
    if (!(eps > R(0) && eps < R(lim))) {
        std::ostringstream os;
        os << "epsilon " << to_double(eps) << " outside the admissible interval (0, " << lim << ") for order "
           << order;
        throw DomainError(os.str());
    }
    std::vector<SpectralPoint<R>> pts;
    pts.reserve(static_cast<size_t>(2 * order));
    for (int j = 1; j <= order; ++j) {
        R jj(static_cast<long>(j) * j);
        pts.push_back(spectral_point(j, R(1) - R(2) * jj * eps * eps));
    }
    for (int j = 1; j <= order; ++j) {
        pts.push_back(spectral_point(order + j, -pts[static_cast<size_t>(j - 1)].lambda));
    }
    for (size_t a = 0; a < pts.size(); ++a) {
        for (size_t b = a + 1; b < pts.size(); ++b) {
            if (pts[a].gamma == pts[b].gamma) throw SingularConfigurationError("coincident gamma values");
        }
    }
    return SpectralScheme<R>(order, eps, std::move(pts));
}

namespace {

void check_index(const DeformationParams& params, int nu) {
    if (nu < 1 || nu > 2 * params.order) {
        throw IndexError("spectral index " + std::to_string(nu) + " outside 1.." + std::to_string(2 * params.order));
    }
}

}  // namespace

template <class R>
Complex<R> e_coefficient(const DeformationParams& params, const R& eps, int nu) {
    using std::pow;
    check_index(params, nu);
    int n = params.order;
    int j = nu <= n ? nu : nu - n;
    R je = R(static_cast<long>(j)) * eps;
    R a(0), b(0);
    for (int k = 1; k <= n - 1; ++k) {
        R p = pow(je, static_cast<long>(2 * k + 1));
        a += R(params.a_tilde[static_cast<size_t>(k - 1)]) * p;
        b += R(params.b_tilde[static_cast<size_t>(k - 1)]) * p;
    }
    return nu <= n ? Complex<R>(-b, a) : Complex<R>(b, a);
}

template <class R>
EpsSeries<R> e_coefficient_series(const DeformationParams& params, int nu, int order) {
    using std::pow;
    check_index(params, nu);
    int n = params.order;
    int j = nu <= n ? nu : nu - n;
    std::vector<Complex<R>> c(static_cast<size_t>(std::max(order, 0)), Complex<R>(R(0)));
    for (int k = 1; k <= n - 1; ++k) {
        int p = 2 * k + 1;
        if (p >= order) break;
        R scale = pow(R(static_cast<long>(j)), static_cast<long>(p));
        R a = R(params.a_tilde[static_cast<size_t>(k - 1)]) * scale;
        R b = R(params.b_tilde[static_cast<size_t>(k - 1)]) * scale;
        c[static_cast<size_t>(p)] = nu <= n ? Complex<R>(-b, a) : Complex<R>(b, a);
    }
    return EpsSeries<R>::from_coefficients(0, std::move(c));
}

#define ROGUE_INSTANTIATE(R)                                                                      \
    template SpectralPoint<R> spectral_point<R>(int, const R&);                                   \
    template class SpectralScheme<R>;                                                             \
    template SpectralScheme<R> build_spectral<R>(int, const R&);                                  \
    template Complex<R> e_coefficient<R>(const DeformationParams&, const R&, int);                \
    template EpsSeries<R> e_coefficient_series<R>(const DeformationParams&, int, int);

ROGUE_INSTANTIATE(double)
ROGUE_INSTANTIATE(Real)

#undef ROGUE_INSTANTIATE

}  // namespace rogue
