#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypavg {

// Process exit codes shared by the CLI and the error types below.
enum class ExitCode : int {
  kOk = 0,
  kAuditViolation = 1,
  kUsage = 2,
  kPrecondition = 3,
  kCapacity = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

// Malformed input document. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ExitCode::kUsage, "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Input violates a structural requirement (connectivity, non-degeneracy, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ExitCode::kPrecondition, what) {}
};

// A configurable size cap (memory, geodesic count, enumeration budget) was exceeded.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(ExitCode::kCapacity, what) {}
};

}  // namespace hypavg
