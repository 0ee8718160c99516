#pragma once

#include <stdexcept>
#include <string>

namespace fluxlat {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid user input: parameters, configs, labels outside the basis.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Basis-doubling convergence test failed.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double last_delta_ghz)
        : Error(msg), last_delta_ghz(last_delta_ghz) {}
    double last_delta_ghz;
};

/// Product-space dimension exceeds the configured cap.
class SizingError : public Error {
public:
    using Error::Error;
};

/// A bare label could not be attached to a dressed state.
class AmbiguousLabel : public Error {
public:
    AmbiguousLabel(const std::string& msg, std::string label, double best, double second)
        : Error(msg), label(std::move(label)), best_overlap(best), second_overlap(second) {}
    std::string label;
    double best_overlap;
    double second_overlap;
};

/// A perturbative energy denominator is below the resonance guard.
class SingularDenominator : public Error {
public:
    using Error::Error;
};

/// A diagram hop uses a parity-forbidden matrix element.
class ForbiddenTransition : public Error {
public:
    using Error::Error;
};

/// Time propagation failed (step underflow or lost unitarity).
class IntegrationError : public Error {
public:
    using Error::Error;
};

/// Eigensolver or other numerical backend failure.
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace fluxlat
