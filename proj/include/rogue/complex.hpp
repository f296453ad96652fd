#ifndef ROGUE_COMPLEX_HPP
#define ROGUE_COMPLEX_HPP

#include <cmath>
#include <complex>
#include <ostream>

#include "rogue/scalar.hpp"

namespace rogue {

/// Complex number over either real kernel type.
///
/// std::complex<T> is only specified for the builtin floating types, so the
/// MPFR path needs its own; the double path shares the same code.
template <class R>
struct Complex {
    R re{};
    R im{};

    Complex() = default;
    Complex(R r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}

    static Complex i() { return Complex(R(0), R(1)); }

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    Complex& operator/=(const Complex& o) { return *this = *this / o; }
    Complex& operator*=(const R& s) {
        re *= s;
        im *= s;
        return *this;
    }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const R& s) { return {a.re * s, a.im * s}; }
    friend Complex operator*(const R& s, const Complex& a) { return {a.re * s, a.im * s}; }
    friend Complex operator/(const Complex& a, const R& s) { return {a.re / s, a.im / s}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        // Smith's algorithm
        using std::abs;
        if (abs(b.re) >= abs(b.im)) {
            R ratio = b.im / b.re;
            R den = b.re + b.im * ratio;
            return {(a.re + a.im * ratio) / den, (a.im - a.re * ratio) / den};
        }
        R ratio = b.re / b.im;
        R den = b.re * ratio + b.im;
        return {(a.re * ratio + a.im) / den, (a.im * ratio - a.re) / den};
    }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

    bool is_zero() const { return re == R(0) && im == R(0); }
};

template <class R>
Complex<R> conj(const Complex<R>& z) {
    return {z.re, -z.im};
}

/// Squared modulus.
template <class R>
R norm(const Complex<R>& z) {
    return z.re * z.re + z.im * z.im;
}

template <class R>
R abs(const Complex<R>& z) {
    using std::abs;
    using std::sqrt;
    R a = abs(z.re);
    R b = abs(z.im);
    if (a < b) std::swap(a, b);
    if (a == R(0)) return a;
    R q = b / a;
    return a * sqrt(R(1) + q * q);
}

/// Argument in (-pi, pi].
template <class R>
R arg(const Complex<R>& z) {
    using std::atan2;
    R a = atan2(z.im, z.re);
    if (a == -pi_v<R>()) a = pi_v<R>();
    return a;
}

template <class R>
Complex<R> polar(const R& mag, const R& phase) {
    using std::cos;
    using std::sin;
    return {mag * cos(phase), mag * sin(phase)};
}

template <class R>
Complex<R> exp(const Complex<R>& z) {
    using std::exp;
    return polar(exp(z.re), z.im);
}

/// Principal logarithm, imaginary part in (-pi, pi].
template <class R>
Complex<R> log(const Complex<R>& z) {
    using std::log;
    return {log(abs(z)), arg(z)};
}

/// Principal square root.
template <class R>
Complex<R> sqrt(const Complex<R>& z) {
    using std::abs;
    using std::sqrt;
    if (z.is_zero()) return z;
    R m = abs(z);
    R s = sqrt((m + abs(z.re)) / R(2));
    if (z.re >= R(0)) return {s, z.im / (R(2) * s)};
    R im = z.im < R(0) ? -s : s;
    return {abs(z.im) / (R(2) * s), im};
}

template <class R>
Complex<R> sin(const Complex<R>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

template <class R>
Complex<R> cos(const Complex<R>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))};
}

template <class R>
bool isfinite(const Complex<R>& z) {
    using std::isfinite;
    return isfinite(z.re) && isfinite(z.im);
}

template <class R>
std::complex<double> to_std(const Complex<R>& z) {
    return {to_double(z.re), to_double(z.im)};
}

template <class R>
Complex<R> from_std(const std::complex<double>& z) {
    return {R(z.real()), R(z.imag())};
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Complex<R>& z) {
    return os << '(' << z.re << ", " << z.im << ')';
}

}  // namespace rogue

#endif  // ROGUE_COMPLEX_HPP
