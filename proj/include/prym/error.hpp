#pragma once

#include <stdexcept>
#include <string>

namespace prym {

/// Failure categories. The CLI maps each one onto an exit status.
enum class ErrorKind {
  invalid_field,
  unsupported_field,
  field_mismatch,
  singular_matrix,
  undefined_resultant,
  degree,
  degenerate_input,
  resultant_indeterminate,
  rejected_input,
  resource_limit,
  model,
  inconsistent_counts,
  internal_contradiction,
  parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace prym
