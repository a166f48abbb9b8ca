#ifndef GLP_ERRORS_HPP
#define GLP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glp {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameter: negative degree, index out of range, mismatched sizes.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Evaluation point outside the support of a basis.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Value left an admissible range (e.g. reconstruction overshoot).
class RangeError : public Error {
public:
    using Error::Error;
};

/// Iterative routine failed to converge.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed file. Carries the byte offset where parsing stopped.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace glp

#endif // GLP_ERRORS_HPP
