#ifndef ROGUE_MP_REAL_HPP
#define ROGUE_MP_REAL_HPP

#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rogue {

/// Value-semantic wrapper around an MPFR float.
///
/// Newly created values (including arithmetic results) take the calling
/// thread's working precision; see PrecisionScope. Copies keep the precision
/// of their source.
class Real {
public:
    Real();
    Real(double v);  // NOLINT(google-explicit-constructor)
    Real(int v);     // NOLINT(google-explicit-constructor)
    Real(long v);    // NOLINT(google-explicit-constructor)
    explicit Real(std::string_view decimal);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static mpfr_prec_t working_precision();
    static void set_working_precision(mpfr_prec_t bits);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Decimal representation with `digits` significant digits (0 = enough for round trip).
    std::string to_string(int digits = 0) const;

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator-(const Real& a);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

    friend Real abs(const Real& a);
    friend Real sqrt(const Real& a);
    friend Real exp(const Real& a);
    friend Real log(const Real& a);
    friend Real sin(const Real& a);
    friend Real cos(const Real& a);
    friend Real sinh(const Real& a);
    friend Real cosh(const Real& a);
    friend Real atan(const Real& a);
    friend Real atan2(const Real& y, const Real& x);
    friend Real pow(const Real& a, long n);
    friend Real ldexp(const Real& a, long e);
    friend Real remainder(const Real& a, const Real& b);
    friend bool isfinite(const Real& a) { return mpfr_number_p(a.v_) != 0; }
    friend bool isinf(const Real& a) { return mpfr_inf_p(a.v_) != 0; }
    friend bool isnan(const Real& a) { return mpfr_nan_p(a.v_) != 0; }
    friend bool signbit(const Real& a) { return mpfr_signbit(a.v_) != 0; }

    static Real pi();
    static Real infinity(int sign = 1);
    /// Binary exponent e with 0.5 <= |a| / 2^e < 1; 0 for zero.
    long exponent() const;

private:
    mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const Real& r);

/// Sets the thread's working precision for the lifetime of the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(mpfr_prec_t bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    mpfr_prec_t saved_;
};

}  // namespace rogue

#endif  // ROGUE_MP_REAL_HPP
