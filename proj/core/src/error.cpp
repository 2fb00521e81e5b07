#include "kgraph/error.hpp"

namespace kgraph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::SourceRangeMismatch: return "SourceRangeMismatch";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::RangeMismatch: return "RangeMismatch";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::WindowExceeded: return "WindowExceeded";
    case ErrorCode::Undecided: return "Undecided";
    case ErrorCode::NotInOrbit: return "NotInOrbit";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace kgraph
