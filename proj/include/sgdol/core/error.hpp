#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sgdol {

// Precondition violated by the caller (dimension mismatch, invalid parameter).
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Malformed input text; line numbers are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Rejected configuration; carries the offending field names.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(std::vector<std::string> fields, const std::string& detail = "")
      : std::runtime_error(format(fields, detail)), fields_(std::move(fields)) {}

  const std::vector<std::string>& fields() const noexcept { return fields_; }

private:
  static std::string format(const std::vector<std::string>& fields, const std::string& detail) {
    std::string msg = "invalid configuration field(s):";
    for (const auto& f : fields) msg += " " + f;
    if (!detail.empty()) msg += " (" + detail + ")";
    return msg;
  }

  std::vector<std::string> fields_;
};

// An iterate left the finite reals.
class DivergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace sgdol
