#pragma once

#include <stdexcept>
#include <string>

namespace sharp {

/// Argument outside the mathematical domain of an operation (non-unit vector,
/// t outside [-1,1], derivative at a singular endpoint, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed configuration file or spec string. `line` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class InvalidNodeSystem : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Configuration is neither strongly sharp nor antipodal sharp.
class UnsupportedConfiguration : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class PreconditionViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace sharp
