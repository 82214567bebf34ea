#pragma once

#include <stdexcept>
#include <string>

namespace skewpp {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input from the caller (malformed text, violated preconditions).
// The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class MalformedPartition : public InputError {
public:
    using InputError::InputError;
};

class NotContained : public InputError {
public:
    using InputError::InputError;
};

class MalformedFilling : public InputError {
public:
    using InputError::InputError;
};

class ArityMismatch : public InputError {
public:
    using InputError::InputError;
};

class MonotonicityViolation : public InputError {
public:
    using InputError::InputError;
};

class NonPositiveValue : public InputError {
public:
    using InputError::InputError;
};

class NotSquareFree : public InputError {
public:
    using InputError::InputError;
};

class InvalidOverlines : public InputError {
public:
    using InputError::InputError;
};

// Exact arithmetic would not fit the native representation.  Never wrapped,
// always reported.  The CLI maps this to exit code 3.
class OverflowError : public Error {
public:
    using Error::Error;
};

} // namespace skewpp
