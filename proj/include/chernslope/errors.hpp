#pragma once

#include <stdexcept>
#include <string>

namespace chernslope {

/// Bad argument to a library operation (index out of range, mismatched
/// spaces, rank violations, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Series inversion requested for an element whose constant term is not 1.
class NonUnitError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operation is well defined mathematically but deliberately not supported
/// (e.g. twisting a virtual class of negative rank).
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A slope was requested for a family whose Hodge degree vanishes.
class SlopeUndefinedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed text handed to one of the parsers.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency assertion failed. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace chernslope
