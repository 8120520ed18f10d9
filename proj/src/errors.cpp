#include "gcut/errors.hpp"

namespace gcut {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidFacet: return "InvalidFacet";
    case ErrorKind::GroundSetClash: return "GroundSetClash";
    case ErrorKind::NotAGraph: return "NotAGraph";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotInRowSpace: return "NotInRowSpace";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace gcut
