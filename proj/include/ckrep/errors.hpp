#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ckrep {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (matrix/vector files, monomial expressions).
class ParseError : public Error {
public:
    ParseError(const std::string& what, long line = -1)
        : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

/// Argument outside the operation's domain (letter out of range, a_i not in (0,1), ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A structural precondition does not hold (reducible matrix, inadmissible operand).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Operands built against different matrix contexts.
class ContextMismatchError : public Error {
public:
    using Error::Error;
};

/// Iterative computation failed to converge; carries the last iterate.
class NumericError : public Error {
public:
    NumericError(const std::string& what, double last_eigenvalue,
                 std::vector<double> last_vector)
        : Error(what),
          last_eigenvalue_(last_eigenvalue),
          last_vector_(std::move(last_vector)) {}
    double last_eigenvalue() const { return last_eigenvalue_; }
    const std::vector<double>& last_vector() const { return last_vector_; }

private:
    double last_eigenvalue_;
    std::vector<double> last_vector_;
};

/// Membership rejection; carries the signed residual PFE - 1.
class NotInLambdaError : public Error {
public:
    NotInLambdaError(const std::string& what, double signed_residual)
        : Error(what), residual_(signed_residual) {}
    double signed_residual() const { return residual_; }

private:
    double residual_;
};

/// The solve bracket contains no root.
class NoSolutionError : public Error {
public:
    using Error::Error;
};

/// A configured cap (word length, enumeration size) would be exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Invariant violation that indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace ckrep
