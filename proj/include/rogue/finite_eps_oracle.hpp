#ifndef ROGUE_FINITE_EPS_ORACLE_HPP
#define ROGUE_FINITE_EPS_ORACLE_HPP

#include <vector>

#include "rogue/complex_linalg.hpp"
#include "rogue/spectral_scheme.hpp"

namespace rogue {

/// Inputs of the theta sums at one (x, t): scheme, e_nu, and which shift
/// family (r = 1 uses x_1 = 0, r = 3 uses x_3).
template <class R>
struct ThetaArgumentSet {
    SpectralScheme<R> scheme;
    std::vector<Complex<R>> e;
    int r = 1;
    R x;
    R t;

    static ThetaArgumentSet make(const SpectralScheme<R>& scheme, const DeformationParams& params, int r, R x, R t);
    void validate() const;
    const Complex<R>& shift(int nu) const;
    /// exp(i kappa x - 2 delta t + x_r + e) for point nu.
    Complex<R> exponential(int nu) const;
    /// Wronskian argument kappa x/2 + i delta t - i x_r/2 - i e/2.
    Complex<R> theta_argument(int nu) const;
};

/// Subset enumeration cap (2^(2N) terms).
inline constexpr int kThetaSubsetMaxOrder = 6;

/// (-1)^(nu) for nu <= N and (-1)^(N+nu) above.
int theta_sign(int order, int nu);

template <class R>
Complex<R> theta_subset_sum(const ThetaArgumentSet<R>& args);

enum class FredholmVariant { C, D };

/// The 2N x 2N matrix C_r or D_r (without the identity).
template <class R>
ComplexMatrix<R> fredholm_matrix(const ThetaArgumentSet<R>& args, FredholmVariant variant);

/// det(I + C_r) or det(I + D_r).
template <class R>
LogComplex<R> fredholm_det(const ThetaArgumentSet<R>& args, FredholmVariant variant);

/// Wronskian matrix in y at y = 0: row nu, column mu holds d^mu/dy^mu of
/// sin or cos(Theta_nu + gamma_nu y).
template <class R>
ComplexMatrix<R> wronskian_matrix(const ThetaArgumentSet<R>& args);

template <class R>
LogComplex<R> wronskian_det(const ThetaArgumentSet<R>& args);

/// 2^(2N) exp(i sum Theta) / prod_{nu > mu} (gamma_nu - gamma_mu).
template <class R>
LogComplex<R> k_prefactor(const ThetaArgumentSet<R>& args);

/// v(x,t) = (-1)^N W_3(0)/W_1(0) exp(2it - i phase) at finite eps, which equals
/// det(I + D_3)/det(I + D_1) times the carrier.
template <class R>
Complex<R> wronskian_solution(const SpectralScheme<R>& scheme, const DeformationParams& params, double phase,
                              const R& x, const R& t);

/// Neville extrapolation to h = 0 of samples f(h_i); used with h = eps^2.
template <class R>
Complex<R> extrapolate_to_zero(const std::vector<R>& h, std::vector<Complex<R>> values);

/// Finite-eps solutions at each eps of the ladder, extrapolated to eps -> 0.
template <class R>
Complex<R> oracle_solution(const SolutionConfig& config, const std::vector<double>& eps_ladder, const R& x,
                           const R& t);

}  // namespace rogue

#endif  // ROGUE_FINITE_EPS_ORACLE_HPP
