#ifndef ROGUE_SPECTRAL_SCHEME_HPP
#define ROGUE_SPECTRAL_SCHEME_HPP

#include <vector>

#include "rogue/complex.hpp"
#include "rogue/eps_series.hpp"

namespace rogue {

/// The 2N-2 real deformation parameters; index k of a_tilde/b_tilde is the
/// coefficient of (j eps)^(2k+3) in a_j/b_j (zero-based storage).
struct DeformationParams {
    int order = 1;
    std::vector<double> a_tilde;
    std::vector<double> b_tilde;

    static DeformationParams zero(int order);
    /// Throws DomainError unless both sequences have exactly order-1 finite entries.
    void validate() const;
    bool all_zero() const;
};

enum class Representation { Degenerate, Oracle };

/// Everything needed to evaluate one solution v(x,t).
struct SolutionConfig {
    int order = 1;
    DeformationParams params;
    double phase = 0.0;
    /// Mantissa bits; 0 selects default_precision(order).
    int precision = 0;
    Representation representation = Representation::Degenerate;
    /// Epsilon ladder used by the oracle representation (Richardson in eps^2).
    std::vector<double> oracle_eps{0.02, 0.01, 0.005};

    static SolutionConfig peregrine(int order);
    int effective_precision() const;
    void validate() const;
};

/// 53 bits for N <= 2, 256 bits above.
int default_precision(int order);

template <class R>
struct SpectralPoint {
    int index = 0;
    R lambda;
    R kappa;
    R delta;
    R gamma;
    Complex<R> x1;
    Complex<R> x3;
};

/// Spectral point computed from a single lambda in (-1, 1).
template <class R>
SpectralPoint<R> spectral_point(int index, const R& lambda);

template <class R>
class SpectralScheme {
public:
    SpectralScheme(int order, R epsilon, std::vector<SpectralPoint<R>> points);

    int order() const { return order_; }
    const R& epsilon() const { return eps_; }
    int size() const { return static_cast<int>(points_.size()); }
    /// One-based access, nu in 1..2N.
    const SpectralPoint<R>& point(int nu) const;
    const std::vector<SpectralPoint<R>>& points() const { return points_; }

private:
    int order_;
    R eps_;
    std::vector<SpectralPoint<R>> points_;
};

/// Largest admissible epsilon (exclusive) for order N: 1/(N sqrt 2).
double max_epsilon(int order);

/// Nodes lambda_j = 1 - 2 j^2 eps^2, mirrored to -lambda_j.
template <class R>
SpectralScheme<R> build_spectral(int order, const R& eps);

/// e_nu at finite eps (nu one-based).
template <class R>
Complex<R> e_coefficient(const DeformationParams& params, const R& eps, int nu);

/// e_nu as a series in eps, known through eps^(order-1).
template <class R>
EpsSeries<R> e_coefficient_series(const DeformationParams& params, int nu, int order);

}  // namespace rogue

#endif  // ROGUE_SPECTRAL_SCHEME_HPP
