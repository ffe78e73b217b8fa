#pragma once

#include <stdexcept>
#include <string>

namespace mvl {

// Base of everything the library throws on bad input or exhausted budgets.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violated by an otherwise well-formed value.
class DomainError : public Error {
public:
    using Error::Error;
};

// Structurally invalid domain object, e.g. an incomplete gate truth table.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A configured enumeration or search cap would be exceeded.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// Malformed external input (JSON, CSV, sign strings, numerals).
class ParseError : public Error {
public:
    using Error::Error;
};

// A closed form disagreed with its brute-force oracle, or a replayed certificate failed.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace mvl
