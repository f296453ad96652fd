#include "rogue/mp_real.hpp"

#include <ostream>
#include <stdexcept>

namespace rogue {

namespace {

thread_local mpfr_prec_t tls_precision = 256;

}  // namespace

mpfr_prec_t Real::working_precision() { return tls_precision; }

void Real::set_working_precision(mpfr_prec_t bits) {
    if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
        throw std::invalid_argument("Real: precision out of MPFR range");
    }
    tls_precision = bits;
}

Real::Real() {
    mpfr_init2(v_, tls_precision);
    mpfr_set_zero(v_, 1);
}

Real::Real(double v) {
    mpfr_init2(v_, tls_precision);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(int v) {
    mpfr_init2(v_, tls_precision);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(long v) {
    mpfr_init2(v_, tls_precision);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(std::string_view decimal) {
    mpfr_init2(v_, tls_precision);
    std::string s(decimal);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("Real: cannot parse '" + s + "'");
    }
}

Real::Real(const Real& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    v_[0] = other.v_[0];
    other.v_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
    if (this == &other) return *this;
    if (v_[0]._mpfr_d == nullptr) {
        mpfr_init2(v_, other.precision());
    } else if (precision() < other.precision()) {
        mpfr_set_prec(v_, other.precision());
    }
    mpfr_set(v_, other.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this == &other) return *this;
    if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
    v_[0] = other.v_[0];
    other.v_[0]._mpfr_d = nullptr;
    return *this;
}

Real::~Real() {
    if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
}

std::string Real::to_string(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_signbit(v_) ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return mpfr_signbit(v_) ? "-0" : "0";
    if (digits <= 0) {
        // digits needed for a round trip of the mantissa
        digits = static_cast<int>(mpfr_get_str_ndigits(10, precision()));
    }
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string out;
    if (!mant.empty() && mant[0] == '-') {
        out.push_back('-');
        mant.erase(0, 1);
    }
    out.push_back(mant[0]);
    if (mant.size() > 1) {
        out.push_back('.');
        out.append(mant, 1, std::string::npos);
    }
    out.push_back('e');
    out += std::to_string(static_cast<long>(exp10) - 1);
    return out;
}

Real& Real::operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real operator+(const Real& a, const Real& b) {
    Real r;
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, const Real& b) {
    Real r;
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, const Real& b) {
    Real r;
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, const Real& b) {
    Real r;
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator-(const Real& a) {
    Real r;
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

#define ROGUE_UNARY(name, fn)          \
    Real name(const Real& a) {         \
        Real r;                        \
        fn(r.v_, a.v_, MPFR_RNDN);     \
        return r;                      \
    }

ROGUE_UNARY(abs, mpfr_abs)
ROGUE_UNARY(sqrt, mpfr_sqrt)
ROGUE_UNARY(exp, mpfr_exp)
ROGUE_UNARY(log, mpfr_log)
ROGUE_UNARY(sin, mpfr_sin)
ROGUE_UNARY(cos, mpfr_cos)
ROGUE_UNARY(sinh, mpfr_sinh)
ROGUE_UNARY(cosh, mpfr_cosh)
ROGUE_UNARY(atan, mpfr_atan)

#undef ROGUE_UNARY

Real atan2(const Real& y, const Real& x) {
    Real r;
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

Real pow(const Real& a, long n) {
    Real r;
    mpfr_pow_si(r.v_, a.v_, n, MPFR_RNDN);
    return r;
}

Real ldexp(const Real& a, long e) {
    Real r;
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
}

Real remainder(const Real& a, const Real& b) {
    Real r;
    mpfr_remainder(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real Real::pi() {
    Real r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::infinity(int sign) {
    Real r;
    mpfr_set_inf(r.v_, sign);
    return r;
}

long Real::exponent() const {
    if (!mpfr_regular_p(v_)) return 0;
    return static_cast<long>(mpfr_get_exp(v_));
}

std::ostream& operator<<(std::ostream& os, const Real& r) {
    auto digits = os.precision() > 0 ? static_cast<int>(os.precision()) : 0;
    return os << r.to_string(digits);
}

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(Real::working_precision()) {
    Real::set_working_precision(bits);
}

PrecisionScope::~PrecisionScope() { tls_precision = saved_; }

}  // namespace rogue
