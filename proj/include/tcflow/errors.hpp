#pragma once

#include <stdexcept>
#include <string>

namespace tcflow {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A point or argument outside the mathematical domain of a function or field.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what, long index = -1)
        : Error(what), index_(index) {}
    /// Position in a batch that triggered the error, or -1.
    long index() const noexcept { return index_; }

private:
    long index_;
};

/// Adaptive quadrature ran out of subdivisions. Carries the best estimate.
class AccuracyFailure : public Error {
public:
    AccuracyFailure(const std::string& what, double estimate, double error_bound)
        : Error(what), estimate_(estimate), error_bound_(error_bound) {}
    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

class BracketError : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

class IntegrationFailure : public Error {
public:
    IntegrationFailure(const std::string& what, double rho) : Error(what), rho_(rho) {}
    double rho() const noexcept { return rho_; }

private:
    double rho_;
};

class UnsupportedOperation : public Error {
public:
    using Error::Error;
};

/// Value of a cut (multivalued) function requested exactly on the cut.
class CutAmbiguity : public Error {
public:
    using Error::Error;
};

class NumericalConsistency : public Error {
public:
    using Error::Error;
};

}  // namespace tcflow
