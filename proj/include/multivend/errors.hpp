#pragma once

#include <stdexcept>
#include <string>

namespace multivend {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text is not well-formed against the file schema (bad JSON, wrong
// types, unknown keys in strict mode).
class ParseError : public Error {
public:
    using Error::Error;
};

// Schema-valid input that violates a model invariant. The message names
// every violated invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

class UnknownSupplier : public Error {
public:
    using Error::Error;
};

// Brute-force enumeration guard tripped.
class InstanceTooLarge : public Error {
public:
    using Error::Error;
};

// Subset sweep guard tripped (more than 16 suppliers).
class TooManySuppliers : public Error {
public:
    using Error::Error;
};

class InvalidParameters : public Error {
public:
    using Error::Error;
};

class EmptyDistribution : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace multivend
