#include "fockop/error.hpp"

namespace fockop {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NormExceedsOne: return "NormExceedsOne";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::NotCompact: return "NotCompact";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::QuadratureDivergence: return "QuadratureDivergence";
    case ErrorCode::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorCode::NotInBlockForm: return "NotInBlockForm";
    case ErrorCode::ForwardOrbitUnsupported: return "ForwardOrbitUnsupported";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::AdjointNotGraded: return "AdjointNotGraded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace fockop
