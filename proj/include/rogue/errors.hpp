#ifndef ROGUE_ERRORS_HPP
#define ROGUE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rogue {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (epsilon range, order 0, ln of a
/// series with zero constant term, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

/// Division by an identically zero series or a zero LogComplex.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// Result magnitude not representable; carries the offending log-exponent.
class RangeError : public Error {
public:
    RangeError(const std::string& what, double log_exponent)
        : Error(what), log_exponent_(log_exponent) {}
    double log_exponent() const { return log_exponent_; }

private:
    double log_exponent_;
};

/// Subset enumeration requested beyond its cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Coincident spectral gammas (Cauchy-type matrices undefined).
class SingularConfigurationError : public Error {
public:
    using Error::Error;
};

/// Internal construction invariant broken (never a user error).
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Working precision exhausted; carries the log-magnitudes involved.
class PrecisionError : public Error {
public:
    PrecisionError(const std::string& what, double log_magnitude, double log_scale)
        : Error(what), log_magnitude_(log_magnitude), log_scale_(log_scale) {}
    double log_magnitude() const { return log_magnitude_; }
    double log_scale() const { return log_scale_; }

private:
    double log_magnitude_;
    double log_scale_;
};

/// Malformed caller input (non-finite matrix entries, empty fields, ...).
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace rogue

#endif  // ROGUE_ERRORS_HPP
