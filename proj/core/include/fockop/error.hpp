#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fockop {

enum class ErrorCode {
  ShapeMismatch,
  NonFiniteEntry,
  NonSquare,
  NormExceedsOne,
  StructureViolation,
  NotBounded,
  NotCompact,
  Inconsistent,
  IdentityViolation,
  QuadratureDivergence,
  NotDiagonalizable,
  NotInBlockForm,
  ForwardOrbitUnsupported,
  SizeOverflow,
  AdjointNotGraded,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// that callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fockop
