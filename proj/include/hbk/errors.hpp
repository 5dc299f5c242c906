#pragma once

#include <stdexcept>
#include <string>

namespace hbk {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A twist word whose continued fraction has no finite value; such a word
// does not define a tangle fraction.
struct InfiniteValueError : Error {
    using Error::Error;
};

// The requested tangle is trivial (its fraction class is an integer).
struct TrivialTangleError : Error {
    using Error::Error;
};

// The fraction class has an even reduced denominator, so the two-string
// part would join the disk endpoints to each other; the cone would then
// contain a cycle.
struct InvalidConnectivityError : Error {
    using Error::Error;
};

// Malformed textual input. Carries the offending token and its position.
struct ParseError : Error {
    ParseError(const std::string& what, std::string token, std::size_t position)
        : Error(what + " (token \"" + token + "\" at position " + std::to_string(position) + ")"),
          token(std::move(token)),
          position(position) {}
    explicit ParseError(const std::string& what) : Error(what), token(), position(0) {}

    std::string token;
    std::size_t position;
};

// Catalog lookups.
struct UnknownNameError : Error {
    using Error::Error;
};
struct MissingSpecError : Error {
    using Error::Error;
};

}  // namespace hbk
