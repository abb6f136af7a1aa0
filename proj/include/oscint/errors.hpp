#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oscint {

/// Base class of every error the library throws on its own behalf.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// expr
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& msg, std::size_t off)
        : Error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

struct UnknownIdentifier : Error {
    std::size_t offset;
    UnknownIdentifier(const std::string& name, std::size_t off)
        : Error("unknown identifier '" + name + "' (byte " + std::to_string(off) + ")"),
          offset(off) {}
};

struct VarOutOfRange : Error {
    std::size_t offset;
    VarOutOfRange(int index, int dim, std::size_t off)
        : Error("variable x" + std::to_string(index) + " out of range for dimension " +
                std::to_string(dim) + " (byte " + std::to_string(off) + ")"),
          offset(off) {}
};

struct EvalError : Error {
    using Error::Error;
};

// jet
struct ShapeMismatch : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct OrderExceeded : Error {
    using Error::Error;
};

// linalg / stphase
struct DegenerateMatrix : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

// oracle
struct TooOscillatory : Error {
    using Error::Error;
};

struct TailTooLarge : Error {
    using Error::Error;
};

// problem files
struct FileFormatError : Error {
    using Error::Error;
};

} // namespace oscint
