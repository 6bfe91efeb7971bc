// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lcdw {

// Exit codes reported by the command line tool.  Library code throws the
// exception types below; the tool maps them to these codes at the boundary.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitParameter = 2,
  kExitNumerical = 3,
  kExitVerifyFailed = 4,
};

class LcdwError : public std::runtime_error {
 public:
  LcdwError(std::string message, int exit_code)
      : std::runtime_error(std::move(message)), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

// Malformed input that never reached validation: unreadable files, bad CSV
// rows, config files that are not valid JSON.
class ParseError : public LcdwError {
 public:
  explicit ParseError(std::string message)
      : LcdwError(std::move(message), kExitParse) {}
};

// Well-formed input with inadmissible values: b = 0 where a chirped integral
// transform is required, p outside [1, inf], unknown preset names.
class ParameterError : public LcdwError {
 public:
  explicit ParameterError(std::string message)
      : LcdwError(std::move(message), kExitParameter) {}
};

// Arguments outside the mathematical domain of a special function.
class DomainError : public ParameterError {
 public:
  explicit DomainError(std::string message)
      : ParameterError(std::move(message)) {}
};

// A computation that started from valid parameters but cannot be completed
// to the promised accuracy.
class NumericalError : public LcdwError {
 public:
  explicit NumericalError(std::string message)
      : LcdwError(std::move(message), kExitNumerical) {}
};

// The admissibility integral failed to converge for the supplied window.
class AdmissibilityError : public NumericalError {
 public:
  explicit AdmissibilityError(std::string message)
      : NumericalError(std::move(message)) {}
};

// An interpolation or resampling request left the sampled support.
class RangeError : public NumericalError {
 public:
  explicit RangeError(std::string message)
      : NumericalError(std::move(message)) {}
};

}  // namespace lcdw
