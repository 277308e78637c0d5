#pragma once

#include <stdexcept>
#include <string>

namespace pkit {

enum class ErrorKind {
  kInvalidSubset,
  kEmptyMatroid,
  kInvalidParameters,
  kInvalidBasepoint,
  kInvalidFlat,
  kInvalidInput,
  kInvalidNecklace,
  kInvalidMatrix,
  kNotAChirotope,
  kInvalidContraction,
  kNotAMatroid,
  kParse,
  kCapExceeded,
};

const char* to_string(ErrorKind kind);

/// Single exception type for every library failure; `kind()` lets callers
/// branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pkit
