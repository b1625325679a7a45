#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bfree {

enum class ErrorKind {
  InvalidArgument,
  EmptyFamily,
  NotOdd,
  NotGreaterThanOne,
  NotCoprime,
  Overflow,
  DepthInsufficient,
  DepthMismatch,
  WindowTooShort,
  ComplexityRefusal,
  InconsistentLevels,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; `kind` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Carries the first integer the truncated family (or finite construction) could not decide.
class DepthInsufficient : public Error {
 public:
  DepthInsufficient(std::int64_t position, const std::string& what)
      : Error(ErrorKind::DepthInsufficient, what), position_(position) {}

  std::int64_t position() const noexcept { return position_; }

 private:
  std::int64_t position_;
};

// Names the (1-based) generator pair that shares a factor.
class NotCoprime : public Error {
 public:
  NotCoprime(int first, int second, const std::string& what)
      : Error(ErrorKind::NotCoprime, what), first_(first), second_(second) {}

  int first() const noexcept { return first_; }
  int second() const noexcept { return second_; }

 private:
  int first_;
  int second_;
};

}  // namespace bfree
