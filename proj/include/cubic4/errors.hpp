#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubic4 {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class DegenerateLatticeError : public Error {
public:
    using Error::Error;
};

class IndefiniteLatticeError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class InvariantError : public Error {
public:
    using Error::Error;
};

// Requests that would need topology or arithmetic beyond what is modeled.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

}  // namespace cubic4
