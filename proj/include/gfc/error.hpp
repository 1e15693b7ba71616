#pragma once

/**
 * @file error.hpp
 * @brief Exception types shared by every gfc module.
 *
 * The CLI maps these onto exit codes: InputError, DomainError,
 * UnsupportedModeError and ResourceError are input problems (exit 2);
 * ConsistencyError is a certificate or bookkeeping failure (exit 3).
 */

#include <stdexcept>
#include <string>

namespace gfc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or mismatched input (wrong rank, coincident points, bad syntax).
class InputError : public Error {
public:
    using Error::Error;
};

/// Input outside the domain of a formula (degenerate lambda, genus-0 character).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operation not available for this kind of value or group type.
class UnsupportedModeError : public Error {
public:
    using Error::Error;
};

/// A desk-scale resource guard was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed: non-integral genus, failed certificate.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace gfc
