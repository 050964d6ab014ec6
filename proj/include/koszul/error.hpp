#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

/// Coarse classification of failures; the CLI maps these onto exit codes.
enum class ErrorCategory {
  Input = 1,       // unreadable or malformed input, unknown names, bad parameters
  Validation = 2,  // the input parses but is not a valid mathematical object
  Internal = 3,    // an exact identity that must hold by construction failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), category_(category), code_(std::move(code)) {}

  ErrorCategory category() const noexcept { return category_; }
  /// Stable identifier such as "JacobiViolation" or "NotAChainMap".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorCategory category_;
  std::string code_;
};

inline Error input_error(std::string code, const std::string& message) {
  return Error(ErrorCategory::Input, std::move(code), message);
}
inline Error validation_error(std::string code, const std::string& message) {
  return Error(ErrorCategory::Validation, std::move(code), message);
}
inline Error internal_error(std::string code, const std::string& message) {
  return Error(ErrorCategory::Internal, std::move(code), message);
}

}  // namespace koszul
