#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mrmm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments: invalid moduli, degree/shape mismatches, malformed values.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Built-in factorizer refuses the degree; a factor file is the way out.
class UnsupportedDegree : public Error {
public:
    using Error::Error;
};

// Malformed spec or factor file.
class FormatError : public Error {
public:
    using Error::Error;
};

class SearchExhausted : public Error {
public:
    SearchExhausted(const std::string& msg, std::uint64_t iterations)
        : Error(msg), iterations(iterations) {}
    std::uint64_t iterations;
};

// Cooperative cancellation of a search worker.
class Cancelled : public Error {
public:
    using Error::Error;
};

// State-space guard tripped (period measurement).
class ResourceGuard : public Error {
public:
    using Error::Error;
};

// The two steppers disagreed; a correctness failure, not a perf result.
class EquivalenceViolation : public Error {
public:
    using Error::Error;
};

}  // namespace mrmm
