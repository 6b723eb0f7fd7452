#pragma once

#include <stdexcept>
#include <string>

namespace meshwave {

// Malformed input file (bad JSON, missing/ill-typed field).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A scenario or model invariant is violated; the message names the rule.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violation on an operation argument (zero capacity,
// negative rate, empty sample list, out-of-range lookup, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// M/M/1 queue offered rate at or above the service rate; latency is
// unbounded and the caller must cap it.
class SaturatedError : public std::runtime_error {
public:
    explicit SaturatedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace meshwave
