#pragma once

#include <stdexcept>
#include <string>

namespace taskalloc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function (x outside [0,1], bad shape).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A model update left its admissible range. Never clamped.
class RangeError : public Error {
public:
    using Error::Error;
};

class BracketError : public Error {
public:
    using Error::Error;
};

/// Parameters for which a quantity is undefined (e.g. alpha + beta == 0).
class DegenerateParams : public Error {
public:
    using Error::Error;
};

class CalibrationError : public Error {
public:
    using Error::Error;
};

/// A delegation step shrank the automated set: A_{t+1} does not contain A_t.
class MonotonicityViolation : public Error {
public:
    using Error::Error;
};

/// Parameter bundle or configuration failed validation.
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace taskalloc
