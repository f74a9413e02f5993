#pragma once

#include <optional>

#include "fockop/analysis.hpp"
#include "fockop/dynamics.hpp"
#include "fockop/symbol.hpp"

namespace fockop {

/// Every verdict and closed-form value for one symbol. Fields past
/// `bounded` are only meaningful (and only filled) when the operator is
/// bounded.
struct ClassificationReport {
  BoundednessVerdict bounded;
  bool compact = false;
  std::optional<double> norm;
  std::optional<EssentialNormCertificate> essential_norm;
  std::optional<ComplexVector> z0;
  bool normal = false;
  bool hyponormal = false;
  bool essentially_normal = false;
  bool schatten_all_p = false;
  bool supercyclic = false;
  std::optional<CyclicityVerdict> cyclic;
};

ClassificationReport classify(const AffineSymbol& symbol, const CyclicOptions& options = {});

}  // namespace fockop
