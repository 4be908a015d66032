#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ulab {

enum class ErrorKind {
  kLoop,
  kDuplicateEdge,
  kMalformed,
  kVertexOutOfRange,
  kInvalidParameter,
  kNotATree,
  kNotRegular,
  kPartialLabeling,
  kCapExceeded,
  kStrategyInapplicable,
  kNoLegalLabel,
  kIllegalMove,
};

std::string_view to_string(ErrorKind kind);

// Structured error carried by every precondition failure in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ulab
