#pragma once

#include <stdexcept>
#include <string>

namespace wigner {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or mutually inconsistent inputs.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

// The data do not fit the requested domain (boundary decay, negative time, overflow range).
class DomainError : public Error {
public:
    using Error::Error;
};

// A computed quantity failed an internal consistency check.
class NumericalError : public Error {
public:
    using Error::Error;
};

class NotInvertibleError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

}  // namespace wigner
