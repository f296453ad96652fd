#ifndef ROGUE_COMPLEX_LINALG_HPP
#define ROGUE_COMPLEX_LINALG_HPP

#include <cstddef>
#include <vector>

#include "rogue/complex.hpp"

namespace rogue {

/// Complex number held as (log-modulus, phase); zero is log_mag = -inf, phase 0.
template <class R>
struct LogComplex {
    R log_mag;
    R phase;

    static LogComplex zero();
    static LogComplex one();
    /// Builds from (log_mag, phase), normalizing the phase to (-pi, pi].
    static LogComplex make(R log_mag, R phase);
    static LogComplex from(const Complex<R>& z);

    bool is_zero() const;
    /// exp back to a plain complex value; throws RangeError when not representable.
    Complex<R> value() const;

    friend LogComplex operator*(const LogComplex& a, const LogComplex& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return make(a.log_mag + b.log_mag, a.phase + b.phase);
    }
};

/// Reduce an angle to (-pi, pi].
template <class R>
R normalize_phase(const R& phase);

template <class R>
class ComplexMatrix {
public:
    explicit ComplexMatrix(size_t n);
    static ComplexMatrix identity(size_t n);

    size_t dim() const { return n_; }
    Complex<R>& operator()(size_t i, size_t j) { return a_[i * n_ + j]; }
    const Complex<R>& operator()(size_t i, size_t j) const { return a_[i * n_ + j]; }

    /// Largest entry modulus.
    R max_abs() const;

private:
    size_t n_;
    std::vector<Complex<R>> a_;
};

/// log det via row equilibration and LU with partial pivoting.
template <class R>
LogComplex<R> logdet(ComplexMatrix<R> m);

/// Upper bound for log|det|: log column maxima plus log row 2-norms of the
/// column-normalized matrix.
template <class R>
R log_hadamard_bound(const ComplexMatrix<R>& m);

/// a / b as a plain complex value.
template <class R>
Complex<R> logratio(const LogComplex<R>& a, const LogComplex<R>& b);

/// Tolerated gap (nats) between log|det| and the Hadamard bound before a
/// determinant is treated as lost to cancellation: all but min(40, bits/2)
/// guard bits of the mantissa.
double allowed_log_loss(int precision_bits);

/// Throws PrecisionError when det has sunk too far below the Hadamard bound of m.
template <class R>
void check_precision_floor(const LogComplex<R>& det, const ComplexMatrix<R>& m, const char* what);

}  // namespace rogue

#endif  // ROGUE_COMPLEX_LINALG_HPP
