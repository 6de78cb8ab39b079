#pragma once

#include <stdexcept>
#include <string>

namespace equivlk {

// Base for every library error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Caller violated a documented precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// A configured size bound (group order, minor count, enumeration size) was exceeded.
struct BoundExceeded : Error {
    using Error::Error;
};

// Numeric evaluation requested outside its region of validity.
struct NonConvergent : Error {
    using Error::Error;
};

// An algorithm that should always succeed did not. Indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

// Input document does not match the expected schema.
struct SchemaError : Error {
    using Error::Error;
};

}  // namespace equivlk
