#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locmult {

// Exit-status classes shared by the library, the C API and the CLI.
enum class ErrorClass {
  precondition = 1,  // mathematical precondition failed
  usage = 2,         // parse error, unknown name, bad flag
  budget = 3,        // resource cap hit or window did not stabilize
  internal = 4,      // certificate failure or other bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string tag, const std::string& message)
      : std::runtime_error(message), class_(cls), tag_(std::move(tag)) {}

  ErrorClass error_class() const noexcept { return class_; }
  // Short machine-readable reason, e.g. "support-not-origin".
  const std::string& tag() const noexcept { return tag_; }

 private:
  ErrorClass class_;
  std::string tag_;
};

class PreconditionError : public Error {
 public:
  PreconditionError(std::string tag, const std::string& message)
      : Error(ErrorClass::precondition, std::move(tag), message) {}
};

class BudgetError : public Error {
 public:
  BudgetError(std::string tag, const std::string& message)
      : Error(ErrorClass::budget, std::move(tag), message) {}
};

class UsageError : public Error {
 public:
  UsageError(std::string tag, const std::string& message)
      : Error(ErrorClass::usage, std::move(tag), message) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorClass::usage, "parse",
              std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        bare_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& bare_message() const noexcept { return bare_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string bare_;
};

class CertificateError : public Error {
 public:
  explicit CertificateError(const std::string& message)
      : Error(ErrorClass::internal, "certificate", message) {}
};

}  // namespace locmult
