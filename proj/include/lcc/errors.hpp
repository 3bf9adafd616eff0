#pragma once

#include <stdexcept>
#include <string>

namespace lcc {

/// Base class for every error raised by the library. Each subclass maps to a
/// distinct process exit code used by the command-line front end.
class Error : public std::runtime_error {
 public:
  Error(const std::string& what, int exit_code)
      : std::runtime_error(what), exit_code_(exit_code) {}

  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

/// Malformed text input. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what, 2),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Structurally invalid instance or inconsistent arguments (size mismatch,
/// out-of-range node, duplicate tuple, ...).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what, 2) {}
};

/// Numeric parameter outside the domain of the receiving operation.
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error(what, 3) {}
};

/// Brute-force size cap exceeded. Oracles refuse rather than truncate.
class SizeCapError : public Error {
 public:
  explicit SizeCapError(const std::string& what) : Error(what, 4) {}
};

/// LP solve did not reach optimality.
class SolverError : public Error {
 public:
  explicit SolverError(const std::string& what) : Error(what, 5) {}
};

}  // namespace lcc
