#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kgraph {

enum class ErrorCode {
  NotComposable,
  SourceRangeMismatch,
  DegreeTooLarge,
  BadInterval,
  RangeMismatch,
  RankMismatch,
  InvalidPath,
  DepthExceeded,
  WindowExceeded,
  Undecided,
  NotInOrbit,
  NotWellDefined,
  MultiplicityMismatch,
  InvalidSpec,
};

std::string_view to_string(ErrorCode code);

/// Precondition failure raised by library operations.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kgraph
