#pragma once

#include <stdexcept>
#include <string>

namespace fuzzyfrac {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Trapezoid parameters out of order (a <= b <= c <= d fails).
class OrderingError : public Error {
public:
    using Error::Error;
};

/// Two fuzzy operands live on different alpha grids.
class GridMismatch : public Error {
public:
    using Error::Error;
};

/// Box operands of different dimension.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of the operation (division by an interval
/// touching zero, Hilfer type parameter out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Index or abscissa outside the sampled range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Gamma evaluated at a pole (nonpositive integer).
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Riemann-Liouville derivative requested at the left end point.
class SingularAtOrigin : public DomainError {
public:
    using DomainError::DomainError;
};

/// Invalid parameter combination (e.g. Hilfer gamma1 outside [0, 1-p]).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Nonpositive weight passed to the least-squares gH difference.
class NonpositiveWeight : public Error {
public:
    using Error::Error;
};

/// Profile/symmetric pair that does not represent a fuzzy number.
class InvalidPair : public Error {
public:
    using Error::Error;
};

/// A computed result needed a repair larger than the allowed tolerance.
class InvalidResult : public Error {
public:
    using Error::Error;
};

/// Time grid too short for differentiation.
class DegenerateGrid : public Error {
public:
    using Error::Error;
};

/// Fractional gH derivative requested across a switching point.
class SwitchingPointError : public Error {
public:
    using Error::Error;
};

/// Hybrid solver: f or the bracket touched zero along the trajectory.
class DomainViolation : public DomainError {
public:
    using DomainError::DomainError;
};

/// Hybrid solver: the Picard sweep change grew for several consecutive sweeps.
class NonContraction : public Error {
public:
    using Error::Error;
};

/// Malformed JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace fuzzyfrac
