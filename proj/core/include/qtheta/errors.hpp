#ifndef QTHETA_ERRORS_HPP
#define QTHETA_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace qtheta {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A requested value sits on a pole (or zero, for log-type quantities).
class PoleError : public Error {
public:
    PoleError(const std::string& msg, std::complex<double> where, int order = 1)
        : Error(msg), location(where), order(order) {}
    std::complex<double> location;
    int order;
};

/// Quadrature tail could not be certified below tolerance.
class TruncationError : public Error {
public:
    explicit TruncationError(const std::string& msg) : Error(msg) {}
};

/// Integrand produced NaN/Inf during quadrature.
class EvaluationError : public Error {
public:
    explicit EvaluationError(const std::string& msg) : Error(msg) {}
};

/// Argument outside a proven convergence region (we never extrapolate).
class RegionError : public Error {
public:
    explicit RegionError(const std::string& msg) : Error(msg) {}
};

/// Malformed or inconsistent class-data / configuration input.
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

/// An identity the pipeline relies on failed beyond tolerance.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& msg) : Error(msg) {}
};

} // namespace qtheta

#endif
