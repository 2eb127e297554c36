#pragma once

#include <stdexcept>
#include <string>

namespace multilin {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind {
    Argument = 2,
    Parse = 2,
    Io = 3,
    Precondition = 4,
    Generation = 4,
    Resource = 5,
    Internal = 70,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

/// Bad argument to a structural operation (e.g. removing a node that is not present).
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(ErrorKind::Argument, what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

/// A construction was requested for an instance outside its class (e.g. beta_ef on a cyclic G).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

class GenerationError : public Error {
public:
    explicit GenerationError(const std::string& what) : Error(ErrorKind::Generation, what) {}
};

/// A resource guard (node count, dimension, ray count, cap) was exceeded.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error(ErrorKind::Resource, what) {}
};

/// An exactness guarantee was violated at runtime. Always a bug or a misclassification.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

}  // namespace multilin
