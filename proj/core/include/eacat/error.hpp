#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eacat {

// Raised for violated preconditions and malformed inputs. Law violations found
// by the verifiers are never errors; they are reported as data.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// A feasibility guard refused to run (carrier too large, level too high, ...).
class GuardError : public Error {
public:
  using Error::Error;
};

} // namespace eacat
