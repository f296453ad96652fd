#ifndef ROGUE_EPS_SERIES_HPP
#define ROGUE_EPS_SERIES_HPP

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rogue/complex.hpp"
#include "rogue/errors.hpp"

namespace rogue {

/// Truncated Laurent series in epsilon with complex coefficients.
///
/// The series is known exactly for exponents below order(); everything from
/// order() on is O(eps^order). Coefficients are stored from the valuation up,
/// and the leading stored coefficient is nonzero unless the series is zero to
/// its known order (then the coefficient list is empty and valuation() ==
/// order()).
template <class R>
class EpsSeries {
public:
    using Scalar = Complex<R>;

    EpsSeries() = default;

    static EpsSeries zero(int order) {
        EpsSeries s;
        s.val_ = order;
        s.order_ = order;
        return s;
    }

    static EpsSeries constant(Scalar c, int order) { return monomial(std::move(c), 0, order); }

    /// c * eps^power + O(eps^order).
    static EpsSeries monomial(Scalar c, int power, int order) {
        if (power >= order) return zero(order);
        std::vector<Scalar> coeffs(static_cast<size_t>(order - power));
        coeffs[0] = std::move(c);
        return from_coefficients(power, std::move(coeffs));
    }

    /// The expansion variable itself: eps + O(eps^order).
    static EpsSeries variable(int order) { return monomial(Scalar(R(1)), 1, order); }

    /// Coefficients of eps^valuation, eps^(valuation+1), ...; order is valuation + size.
    static EpsSeries from_coefficients(int valuation, std::vector<Scalar> coeffs) {
        EpsSeries s;
        s.val_ = valuation;
        s.order_ = valuation + static_cast<int>(coeffs.size());
        s.c_ = std::move(coeffs);
        s.canonicalize();
        return s;
    }

    int valuation() const { return val_; }
    int order() const { return order_; }
    bool is_zero() const { return c_.empty(); }
    std::span<const Scalar> coefficients() const { return c_; }

    const Scalar& leading() const {
        if (c_.empty()) throw ArithmeticError("EpsSeries: zero series has no leading coefficient");
        return c_.front();
    }

    /// Coefficient of eps^power; zero below the valuation.
    Scalar coeff(int power) const {
        if (power >= order_) {
            throw DomainError("EpsSeries: coefficient of eps^" + std::to_string(power) +
                              " lies outside the truncation window (order " + std::to_string(order_) + ")");
        }
        if (power < val_) return Scalar(R(0));
        return c_[static_cast<size_t>(power - val_)];
    }

    /// Multiply by eps^k.
    EpsSeries shifted(int k) const {
        EpsSeries s = *this;
        s.val_ += k;
        s.order_ += k;
        return s;
    }

    EpsSeries truncated(int order) const {
        if (order >= order_) return *this;
        if (order <= val_) return zero(order);
        EpsSeries s = *this;
        s.c_.resize(static_cast<size_t>(order - val_));
        s.order_ = order;
        s.canonicalize();
        return s;
    }

    /// Sum of the known terms at a finite eps.
    Scalar evaluate(const R& eps) const {
        using std::pow;
        Scalar acc(R(0));
        for (size_t i = c_.size(); i-- > 0;) acc = acc * eps + c_[i];
        return acc * pow(eps, static_cast<long>(val_));
    }

    friend EpsSeries operator+(const EpsSeries& a, const EpsSeries& b) { return add(a, b, false); }
    friend EpsSeries operator-(const EpsSeries& a, const EpsSeries& b) { return add(a, b, true); }

    friend EpsSeries operator-(const EpsSeries& a) {
        EpsSeries s = a;
        for (auto& c : s.c_) c = -c;
        return s;
    }

    friend EpsSeries operator*(const EpsSeries& a, const Scalar& k) {
        EpsSeries s = a;
        for (auto& c : s.c_) c = c * k;
        s.canonicalize();
        return s;
    }
    friend EpsSeries operator*(const Scalar& k, const EpsSeries& a) { return a * k; }

    friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
        int order = std::min(a.order_ + b.val_, b.order_ + a.val_);
        int val = a.val_ + b.val_;
        if (a.is_zero() || b.is_zero() || val >= order) return zero(order);
        size_t n = static_cast<size_t>(order - val);
        std::vector<Scalar> out(n, Scalar(R(0)));
        for (size_t i = 0; i < a.c_.size() && i < n; ++i) {
            for (size_t j = 0; j < b.c_.size() && i + j < n; ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return from_coefficients(val, std::move(out));
    }

    friend EpsSeries operator/(const EpsSeries& a, const EpsSeries& b) {
        if (b.is_zero()) throw ArithmeticError("EpsSeries: division by a series that is zero to its known order");
        int rel = std::min(a.order_ - a.val_, b.order_ - b.val_);
        int val = a.val_ - b.val_;
        if (a.is_zero()) return zero(a.order_ - b.val_);
        size_t n = static_cast<size_t>(rel);
        std::vector<Scalar> q(n);
        for (size_t k = 0; k < n; ++k) {
            Scalar acc = k < a.c_.size() ? a.c_[k] : Scalar(R(0));
            for (size_t j = 1; j <= k && j < b.c_.size(); ++j) acc -= b.c_[j] * q[k - j];
            q[k] = acc / b.c_[0];
        }
        return from_coefficients(val, std::move(q));
    }

    EpsSeries& operator+=(const EpsSeries& o) { return *this = *this + o; }
    EpsSeries& operator-=(const EpsSeries& o) { return *this = *this - o; }
    EpsSeries& operator*=(const EpsSeries& o) { return *this = *this * o; }

private:
    static EpsSeries add(const EpsSeries& a, const EpsSeries& b, bool subtract) {
        int order = std::min(a.order_, b.order_);
        int val = std::min(a.val_, b.val_);
        if (val >= order) return zero(order);
        std::vector<Scalar> out(static_cast<size_t>(order - val), Scalar(R(0)));
        for (int p = std::max(a.val_, val); p < order; ++p) out[static_cast<size_t>(p - val)] = a.c_[static_cast<size_t>(p - a.val_)];
        for (int p = std::max(b.val_, val); p < order; ++p) {
            const Scalar& c = b.c_[static_cast<size_t>(p - b.val_)];
            auto& slot = out[static_cast<size_t>(p - val)];
            if (subtract) {
                slot -= c;
            } else {
                slot += c;
            }
        }
        return from_coefficients(val, std::move(out));
    }

    void canonicalize() {
        size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead == 0) return;
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        val_ += static_cast<int>(lead);
        if (c_.empty()) val_ = order_;
    }

    int val_ = 0;
    int order_ = 0;
    std::vector<Scalar> c_;
};

enum class SeriesOp { Add, Sub, Mul, Div };
enum class SeriesFunction { Sin, Cos, Exp, Ln, Sqrt };

template <class R>
EpsSeries<R> series_arith(const EpsSeries<R>& a, const EpsSeries<R>& b, SeriesOp op) {
    switch (op) {
        case SeriesOp::Add: return a + b;
        case SeriesOp::Sub: return a - b;
        case SeriesOp::Mul: return a * b;
        case SeriesOp::Div: return a / b;
    }
    throw DomainError("series_arith: unknown operation");
}

namespace detail {

/// Coefficients of eps^0 .. eps^(order-1) of a series analytic at zero.
template <class R>
std::vector<Complex<R>> taylor_window(const EpsSeries<R>& a, const char* fn) {
    if (a.valuation() < 0) {
        throw DomainError(std::string(fn) + " of a series with a pole (valuation " + std::to_string(a.valuation()) +
                          ")");
    }
    std::vector<Complex<R>> u(static_cast<size_t>(std::max(a.order(), 0)), Complex<R>(R(0)));
    for (int p = a.valuation(); p < a.order(); ++p) u[static_cast<size_t>(p)] = a.coeff(p);
    return u;
}

}  // namespace detail

/// sin and cos of a series with nonnegative valuation, via the coupled
/// recurrences k s_k = sum j u_j c_{k-j}, k c_k = -sum j u_j s_{k-j}.
template <class R>
std::pair<EpsSeries<R>, EpsSeries<R>> sincos(const EpsSeries<R>& a) {
    using C = Complex<R>;
    auto u = detail::taylor_window(a, "sin/cos");
    size_t n = u.size();
    std::vector<C> s(n), c(n);
    if (n > 0) {
        s[0] = sin(u[0]);
        c[0] = cos(u[0]);
    }
    for (size_t k = 1; k < n; ++k) {
        C ss(R(0)), cc(R(0));
        for (size_t j = 1; j <= k; ++j) {
            if (u[j].is_zero()) continue;
            C ju = u[j] * R(static_cast<long>(j));
            ss += ju * c[k - j];
            cc -= ju * s[k - j];
        }
        R inv_k = R(1) / R(static_cast<long>(k));
        s[k] = ss * inv_k;
        c[k] = cc * inv_k;
    }
    return {EpsSeries<R>::from_coefficients(0, std::move(s)), EpsSeries<R>::from_coefficients(0, std::move(c))};
}

template <class R>
EpsSeries<R> sin(const EpsSeries<R>& a) {
    return sincos(a).first;
}

template <class R>
EpsSeries<R> cos(const EpsSeries<R>& a) {
    return sincos(a).second;
}

template <class R>
EpsSeries<R> exp(const EpsSeries<R>& a) {
    using C = Complex<R>;
    auto u = detail::taylor_window(a, "exp");
    size_t n = u.size();
    std::vector<C> e(n);
    if (n > 0) e[0] = exp(u[0]);
    for (size_t k = 1; k < n; ++k) {
        C acc(R(0));
        for (size_t j = 1; j <= k; ++j) acc += u[j] * R(static_cast<long>(j)) * e[k - j];
        e[k] = acc / R(static_cast<long>(k));
    }
    return EpsSeries<R>::from_coefficients(0, std::move(e));
}

/// Principal logarithm at the constant term, continued analytically.
template <class R>
EpsSeries<R> ln(const EpsSeries<R>& a) {
    using C = Complex<R>;
    if (a.valuation() != 0) {
        throw DomainError("ln of a series needs a nonzero constant term (valuation " +
                          std::to_string(a.valuation()) + ")");
    }
    auto u = detail::taylor_window(a, "ln");
    size_t n = u.size();
    std::vector<C> l(n);
    l[0] = log(u[0]);
    for (size_t k = 1; k < n; ++k) {
        C acc = u[k] * R(static_cast<long>(k));
        for (size_t j = 1; j < k; ++j) acc -= l[j] * R(static_cast<long>(j)) * u[k - j];
        l[k] = acc / (u[0] * R(static_cast<long>(k)));
    }
    return EpsSeries<R>::from_coefficients(0, std::move(l));
}

/// Principal square root at the constant term, continued analytically.
template <class R>
EpsSeries<R> sqrt(const EpsSeries<R>& a) {
    using C = Complex<R>;
    if (a.valuation() != 0) {
        throw DomainError("sqrt of a series needs a nonzero constant term (valuation " +
                          std::to_string(a.valuation()) + ")");
    }
    auto u = detail::taylor_window(a, "sqrt");
    size_t n = u.size();
    std::vector<C> s(n);
    s[0] = sqrt(u[0]);
    C two_s0 = s[0] * R(2);
    for (size_t k = 1; k < n; ++k) {
        C acc = u[k];
        for (size_t j = 1; j < k; ++j) acc -= s[j] * s[k - j];
        s[k] = acc / two_s0;
    }
    return EpsSeries<R>::from_coefficients(0, std::move(s));
}

template <class R>
EpsSeries<R> series_elementary(const EpsSeries<R>& a, SeriesFunction f) {
    switch (f) {
        case SeriesFunction::Sin: return sin(a);
        case SeriesFunction::Cos: return cos(a);
        case SeriesFunction::Exp: return exp(a);
        case SeriesFunction::Ln: return ln(a);
        case SeriesFunction::Sqrt: return sqrt(a);
    }
    throw DomainError("series_elementary: unknown function");
}

/// Integer power; negative exponents go through the reciprocal.
template <class R>
EpsSeries<R> powi(const EpsSeries<R>& a, int n) {
    if (n < 0) return EpsSeries<R>::constant(Complex<R>(R(1)), a.order() - a.valuation()) / powi(a, -n);
    EpsSeries<R> result = EpsSeries<R>::constant(Complex<R>(R(1)), a.order() - a.valuation());
    EpsSeries<R> base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

/// m-th derivative at eps = 0, i.e. m! times the eps^m coefficient.
template <class R>
Complex<R> derivative_at_zero(const EpsSeries<R>& a, int m) {
    if (m < 0) throw DomainError("derivative_at_zero: negative derivative order");
    if (a.valuation() < 0) {
        throw DomainError("derivative_at_zero: series has a pole of order " + std::to_string(-a.valuation()) +
                          " at zero");
    }
    if (m >= a.order()) {
        throw DomainError("derivative_at_zero: order " + std::to_string(m) + " exceeds the truncation window " +
                          std::to_string(a.order()));
    }
    R fact(1);
    for (int k = 2; k <= m; ++k) fact *= R(static_cast<long>(k));
    return a.coeff(m) * fact;
}

}  // namespace rogue

#endif  // ROGUE_EPS_SERIES_HPP
