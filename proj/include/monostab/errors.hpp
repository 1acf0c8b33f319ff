#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monostab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: arity mismatch, unparsable text, bad profile depth.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
    InputError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {
    }

    // 0 when the error is not tied to a text position.
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

// The operation has no meaning for the zero or the unit ideal.
class UndefinedError : public Error {
public:
    using Error::Error;
};

class NotAssociatedError : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

// A power exceeded the configured generator budget.
class CapacityError : public Error {
public:
    CapacityError(std::size_t k, std::size_t generators, std::size_t cap)
        : Error("power k=" + std::to_string(k) + " has " + std::to_string(generators) +
                " minimal generators, above the cap of " + std::to_string(cap)),
          k_(k)
    {
    }
    std::size_t k() const noexcept { return k_; }

private:
    std::size_t k_;
};

}  // namespace monostab
