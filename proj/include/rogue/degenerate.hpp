#ifndef ROGUE_DEGENERATE_HPP
#define ROGUE_DEGENERATE_HPP

#include <array>
#include <complex>
#include <vector>

#include "rogue/complex_linalg.hpp"
#include "rogue/eps_series.hpp"
#include "rogue/spectral_scheme.hpp"
#include "rogue/wavefield.hpp"

namespace rogue {

/// phi columns carry the x_3 shift (numerator), psi columns do not (denominator).
enum class Family { Phi, Psi };
/// Column family built on spectral point 1 or on its mirror N+1.
enum class Base { First, Mirror };

template <class R>
struct ColumnFamily {
    Family family = Family::Phi;
    Base base = Base::First;
    /// One series per row j = 1..2N.
    std::vector<EpsSeries<R>> rows;
};

template <class R>
struct DegenerateMatrices {
    ComplexMatrix<R> n;
    ComplexMatrix<R> d;
    R x;
    R t;
};

/// The eps -> 0 limit solution. Everything independent of (x, t) is expanded
/// once at construction; the caller must hold the working precision the
/// engine was built with (see PrecisionScope).
template <class R>
class DegenerateEngine {
public:
    explicit DegenerateEngine(const SolutionConfig& config);

    int order() const { return order_; }
    /// Series window used internally (coefficients of eps^0 .. eps^(window-1)).
    int window() const { return window_; }

    /// The trig argument X (phi) or Y (psi) as a series in eps.
    EpsSeries<R> argument(const R& x, const R& t, Family family, Base base) const;
    /// Row functions for a given argument series; sign = -1 shifts the
    /// argument by pi.
    std::vector<EpsSeries<R>> rows_from_argument(const EpsSeries<R>& argument, Base base, int sign = 1) const;
    ColumnFamily<R> column_family(const R& x, const R& t, Family family, Base base) const;
    DegenerateMatrices<R> matrices(const R& x, const R& t) const;
    /// (logdet n, logdet d) with the pole-proximity check applied to d.
    std::pair<LogComplex<R>, LogComplex<R>> log_determinants(const R& x, const R& t) const;
    Complex<R> evaluate(const R& x, const R& t) const;

private:
    struct Expansion {
        EpsSeries<R> x_coeff;
        EpsSeries<R> t_coeff;
        EpsSeries<R> phi_shift;
        EpsSeries<R> psi_shift;
        int phi_sign = 1;
    };

    int order_;
    int window_;
    double phase_;
    std::array<Expansion, 2> exp_;
    /// gamma_1^p for p = -1 .. 2N-2, stored at p + 1.
    std::vector<EpsSeries<R>> gamma_pow_;
};

template <class R>
ColumnFamily<R> build_column_family(const SolutionConfig& config, const R& x, const R& t, Family family, Base base);

template <class R>
DegenerateMatrices<R> build_matrices(const SolutionConfig& config, const R& x, const R& t);

/// v(x, t) at the configured precision and representation.
std::complex<double> evaluate(const SolutionConfig& config, double x, double t);

struct GridOptions {
    /// Keep decimal text of every sample at the working precision.
    bool keep_decimals = false;
    /// Worker threads; 0 uses the hardware concurrency.
    unsigned threads = 0;
    /// When above the configured precision, samples that run out of precision
    /// are recomputed once at this many bits.
    int fallback_precision = 0;
};

/// Samples v over the grid; failed points are flagged in the field.
WaveField evaluate_grid(const SolutionConfig& config, const GridAxis& x, const GridAxis& t,
                        const GridOptions& options = {});

}  // namespace rogue

#endif  // ROGUE_DEGENERATE_HPP
