#ifndef ROGUE_SCALAR_HPP
#define ROGUE_SCALAR_HPP

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "rogue/mp_real.hpp"

namespace rogue {

// Uniform access to the two real types the numeric kernels are instantiated
// with: IEEE double (53-bit path) and Real (MPFR, runtime precision).
template <class R>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static double pi() { return std::numbers::pi; }
    static double infinity() { return std::numeric_limits<double>::infinity(); }
    static double to_double(double v) { return v; }
    static long exponent(double v) {
        int e = 0;
        std::frexp(v, &e);
        return e;
    }
    static double scale2(double v, long e) { return std::ldexp(v, static_cast<int>(e)); }
    static int precision_bits() { return std::numeric_limits<double>::digits; }
    /// Largest x with exp(x) finite.
    static double max_log() { return 709.0; }
    static std::string to_string(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
};

template <>
struct ScalarTraits<Real> {
    static Real pi() { return Real::pi(); }
    static Real infinity() { return Real::infinity(); }
    static double to_double(const Real& v) { return v.to_double(); }
    static long exponent(const Real& v) { return v.exponent(); }
    static Real scale2(const Real& v, long e) { return ldexp(v, e); }
    static int precision_bits() { return static_cast<int>(Real::working_precision()); }
    static Real max_log() { return Real(static_cast<double>(mpfr_get_emax() - 2) * 0.6931471805599453); }
    static std::string to_string(const Real& v) { return v.to_string(); }
};

template <class R>
R pi_v() {
    return ScalarTraits<R>::pi();
}

template <class R>
double to_double(const R& v) {
    return ScalarTraits<R>::to_double(v);
}

}  // namespace rogue

#endif  // ROGUE_SCALAR_HPP
