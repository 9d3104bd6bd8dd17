#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation would produce a value larger than the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotAnOrdinal : public Error {
 public:
  using Error::Error;
};

class NotASubset : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class LanguageMismatch : public Error {
 public:
  using Error::Error;
};

// A formula uses a symbol the requested interpretation has no clause for.
class Untranslatable : public LanguageMismatch {
 public:
  using LanguageMismatch::LanguageMismatch;
};

// A formula has a free variable the environment does not bind.
class UnboundVariable : public Error {
 public:
  using Error::Error;
};

// Size caps shared by every operation that can blow up.
struct Limits {
  // Maximum bit length of any Code an operation produces or consumes.
  std::size_t max_code_bits = std::size_t{1} << 20;
  // Maximum number of members of any set an operation materializes.
  std::size_t max_members = std::size_t{1} << 20;
};

}  // namespace hf
