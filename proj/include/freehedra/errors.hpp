#ifndef FREEHEDRA_ERRORS_HPP
#define FREEHEDRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace freehedra {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A space locator that does not name a mid-branch space of the triple.
class LocatorError : public Error {
public:
    using Error::Error;
};

// Operation applied outside its domain (empty middle, length mismatch, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed text / JSON / word input.
class EncodingError : public Error {
public:
    using Error::Error;
};

// A configured size bound was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace freehedra

#endif
