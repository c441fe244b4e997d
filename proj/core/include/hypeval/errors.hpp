#pragma once

#include <stdexcept>
#include <string>

namespace hypeval {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed literal or expression text.
class ParseError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// A denominator, or a Gamma argument in numerator position, vanishes at the
// requested point.
class PoleAtPoint : public Error {
public:
    using Error::Error;
};

class NonTerminating : public Error {
public:
    using Error::Error;
};

// A lower parameter -m is hit before the series terminates.
class IllDefined : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class InvalidLowerParameter : public Error {
public:
    using Error::Error;
};

class VariantOutOfRange : public Error {
public:
    using Error::Error;
};

class InvalidShape : public Error {
public:
    using Error::Error;
};

class SingularOrbit : public Error {
public:
    using Error::Error;
};

// Argument outside an operation's documented domain (bad label, bad n).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace hypeval
