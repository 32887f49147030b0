#pragma once

#include <stdexcept>
#include <string>

namespace spinlangevin {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside the domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// A quantity is undefined for the given parameters (e.g. infinite relaxation).
struct DegenerateError : Error {
  using Error::Error;
};

// An internal consistency check failed (branch cancellation, residue bounds).
struct NumericalError : Error {
  using Error::Error;
};

struct StiffnessError : Error {
  using Error::Error;
};

struct StepError : Error {
  using Error::Error;
};

struct NyquistError : Error {
  using Error::Error;
};

struct WindowError : Error {
  using Error::Error;
};

struct EdgeError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  ConfigError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  int line;
};

}  // namespace spinlangevin
