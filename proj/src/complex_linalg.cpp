#include "rogue/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rogue/errors.hpp"

namespace rogue {

template <class R>
R normalize_phase(const R& phase) {
    using std::remainder;
    R two_pi = R(2) * pi_v<R>();
    R p = remainder(phase, two_pi);
    if (p <= -pi_v<R>()) p += two_pi;
    return p;
}

template <class R>
LogComplex<R> LogComplex<R>::zero() {
    return {-ScalarTraits<R>::infinity(), R(0)};
}

template <class R>
LogComplex<R> LogComplex<R>::one() {
    return {R(0), R(0)};
}

template <class R>
LogComplex<R> LogComplex<R>::make(R log_mag, R phase) {
    using std::isinf;
    if (isinf(log_mag) && log_mag < R(0)) return zero();
    return {std::move(log_mag), normalize_phase(phase)};
}

template <class R>
LogComplex<R> LogComplex<R>::from(const Complex<R>& z) {
    using std::log;
    if (z.is_zero()) return zero();
    return make(log(abs(z)), arg(z));
}

template <class R>
bool LogComplex<R>::is_zero() const {
    using std::isinf;
    return isinf(log_mag) && log_mag < R(0);
}

template <class R>
Complex<R> LogComplex<R>::value() const {
    using std::exp;
    if (is_zero()) return Complex<R>(R(0));
    if (log_mag > ScalarTraits<R>::max_log()) {
        throw RangeError("LogComplex value overflows", to_double(log_mag));
    }
    return polar(exp(log_mag), phase);
}

template <class R>
ComplexMatrix<R>::ComplexMatrix(size_t n) : n_(n), a_(n * n, Complex<R>(R(0))) {
    if (n == 0) throw InputError("matrix dimension must be at least 1");
}

template <class R>
ComplexMatrix<R> ComplexMatrix<R>::identity(size_t n) {
    ComplexMatrix m(n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Complex<R>(R(1));
    return m;
}

template <class R>
R ComplexMatrix<R>::max_abs() const {
    R best(0);
    for (const auto& z : a_) {
        R v = abs(z);
        if (v > best) best = v;
    }
    return best;
}

namespace {

template <class R>
long max_exponent(const Complex<R>& z) {
    long e = ScalarTraits<R>::exponent(z.re);
    long f = ScalarTraits<R>::exponent(z.im);
    if (z.re == R(0)) return f;
    if (z.im == R(0)) return e;
    return std::max(e, f);
}

}  // namespace

template <class R>
LogComplex<R> logdet(ComplexMatrix<R> m) {
    using std::log;
    const size_t n = m.dim();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (!isfinite(m(i, j))) {
                std::ostringstream os;
                os << "logdet: non-finite entry at (" << i << ", " << j << ")";
                throw InputError(os.str());
            }
        }
    }
    // Row equilibration by powers of two; the scale goes into the log-modulus.
    long scale_bits = 0;
    for (size_t i = 0; i < n; ++i) {
        bool any = false;
        long e = 0;
        for (size_t j = 0; j < n; ++j) {
            if (m(i, j).is_zero()) continue;
            long ej = max_exponent(m(i, j));
            e = any ? std::max(e, ej) : ej;
            any = true;
        }
        if (!any) return LogComplex<R>::zero();
        if (e != 0) {
            for (size_t j = 0; j < n; ++j) {
                m(i, j).re = ScalarTraits<R>::scale2(m(i, j).re, -e);
                m(i, j).im = ScalarTraits<R>::scale2(m(i, j).im, -e);
            }
        }
        scale_bits += e;
    }

    R log_mag = R(static_cast<double>(scale_bits)) * log(R(2));
    R phase(0);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        R best = norm(m(k, k));
        for (size_t i = k + 1; i < n; ++i) {
            R v = norm(m(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == R(0)) return LogComplex<R>::zero();
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            phase += pi_v<R>();
        }
        const Complex<R> p = m(k, k);
        log_mag += log(abs(p));
        phase = normalize_phase(phase + arg(p));
        for (size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            Complex<R> f = m(i, k) / p;
            for (size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return LogComplex<R>::make(log_mag, phase);
}

template <class R>
R log_hadamard_bound(const ComplexMatrix<R>& m) {
    using std::log;
    const size_t n = m.dim();
    // Columns are scaled to unit max first; det(A diag(1/c)) = det(A) / prod c,
    // so the bound stays rigorous but no longer sees column-scale disparity.
    std::vector<R> col_max(n, R(0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            R v = abs(m(i, j));
            if (v > col_max[j]) col_max[j] = v;
        }
    }
    R total(0);
    for (size_t j = 0; j < n; ++j) {
        if (col_max[j] == R(0)) return -ScalarTraits<R>::infinity();
        total += log(col_max[j]);
    }
    for (size_t i = 0; i < n; ++i) {
        R acc(0);
        for (size_t j = 0; j < n; ++j) {
            R v = abs(m(i, j)) / col_max[j];
            acc += v * v;
        }
        if (acc == R(0)) return -ScalarTraits<R>::infinity();
        total += log(acc) / R(2);
    }
    return total;
}

template <class R>
Complex<R> logratio(const LogComplex<R>& a, const LogComplex<R>& b) {
    using std::exp;
    if (b.is_zero()) throw ArithmeticError("logratio: division by zero");
    if (a.is_zero()) return Complex<R>(R(0));
    R e = a.log_mag - b.log_mag;
    if (e > ScalarTraits<R>::max_log()) {
        throw RangeError("logratio: exponent " + ScalarTraits<R>::to_string(e) + " overflows", to_double(e));
    }
    return polar(exp(e), normalize_phase(R(a.phase - b.phase)));
}

double allowed_log_loss(int precision_bits) {
    int guard = std::min(40, precision_bits / 2);
    return (precision_bits - guard) * std::log(2.0);
}

template <class R>
void check_precision_floor(const LogComplex<R>& det, const ComplexMatrix<R>& m, const char* what) {
    double bound = to_double(log_hadamard_bound(m));
    double mag = det.is_zero() ? -std::numeric_limits<double>::infinity() : to_double(det.log_mag);
    if (mag < bound - allowed_log_loss(ScalarTraits<R>::precision_bits())) {
        std::ostringstream os;
        os << what << " lost to cancellation: log|det| = " << mag << " against log bound " << bound
           << "; raise the precision";
        throw PrecisionError(os.str(), mag, bound);
    }
}

#define ROGUE_INSTANTIATE(R)                                                   \
    template R normalize_phase<R>(const R&);                                   \
    template struct LogComplex<R>;                                             \
    template class ComplexMatrix<R>;                                           \
    template LogComplex<R> logdet<R>(ComplexMatrix<R>);                        \
    template R log_hadamard_bound<R>(const ComplexMatrix<R>&);                 \
    template Complex<R> logratio<R>(const LogComplex<R>&, const LogComplex<R>&); \
    template void check_precision_floor<R>(const LogComplex<R>&, const ComplexMatrix<R>&, const char*);

ROGUE_INSTANTIATE(double)
ROGUE_INSTANTIATE(Real)

#undef ROGUE_INSTANTIATE

}  // namespace rogue
