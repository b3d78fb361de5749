#pragma once

#include <stdexcept>
#include <string>

namespace evsim {

// Programming-contract violations (wrong-length byte strings, empty MAC
// input, all-zero PRNG seed). Protocol failures are ordinary return values,
// never exceptions.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An agent operation was invoked in a phase that does not permit it.
class ProtocolOrderViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DuplicateVehicle : public std::runtime_error {
 public:
  explicit DuplicateVehicle(const std::string& pseudonym_hex)
      : std::runtime_error("duplicate vehicle pseudonym " + pseudonym_hex),
        pseudonym_hex_(pseudonym_hex) {}
  const std::string& pseudonym_hex() const { return pseudonym_hex_; }

 private:
  std::string pseudonym_hex_;
};

class UnknownVehicle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidReport : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scenario file rejected at parse time; line is 1-based.
class ScenarioParseError : public std::runtime_error {
 public:
  ScenarioParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace evsim
