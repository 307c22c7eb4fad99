#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ci610 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live in different coefficient fields (e.g. residues mod 7 and mod 11).
struct FieldMismatchError : Error {
    using Error::Error;
};

// Input violates a documented precondition; maps to exit code 2 in the CLI.
struct PreconditionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : Error("parse error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
};

// A cokernel dimension profile inconsistent with any locally free sheaf.
struct TorsionError : Error {
    using Error::Error;
};

} // namespace ci610
