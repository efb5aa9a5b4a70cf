#pragma once

#include <stdexcept>
#include <string>

namespace cyclotome {

enum class Errc {
    NotPrime,
    BadDegree,
    GcdViolation,
    NotPrimitive,
    TableTooLarge,
    ZeroElement,
    ZeroV,
    WrongParity,
    DegenerateCosets,
    TooLarge,
    InternalInconsistency,
    NonIntegerSum,
    NonDivisibleValue,
};

const char* to_string(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc c, const std::string& msg)
        : std::runtime_error(std::string(to_string(c)) + ": " + msg), code_(c) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

/// Rejected inputs: bad parameters, guard violations, wrong call context.
class ParamError : public Error {
  public:
    using Error::Error;
};

/// Self-check failures that indicate an arithmetic bug, never bad input.
class InternalError : public Error {
  public:
    using Error::Error;
};

}  // namespace cyclotome
