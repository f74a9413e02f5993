#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fockop/linalg.hpp"
#include "fockop/polynomial.hpp"
#include "fockop/symbol.hpp"

namespace fockop {

enum class Verdict { Yes, No, Unknown };

std::string_view to_string(Verdict v) noexcept;

/// theta = (num / den) * pi, stored reduced with den > 0.
struct PiFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static PiFraction reduced(std::int64_t num, std::int64_t den);
  double radians() const;
  friend bool operator==(const PiFraction&, const PiFraction&) = default;
};

struct AngleSet {
  std::vector<double> thetas;                     // radians in [0, 2pi)
  std::vector<std::optional<PiFraction>> exact;   // same length as thetas, or empty

  static AngleSet floating(std::vector<double> thetas);
  bool is_exact(std::size_t i) const { return i < exact.size() && exact[i].has_value(); }
};

inline constexpr std::int64_t kDefaultMaxCoeff = 1000000;

/// `relation` = (k_0, k_1, ..., k_m) with k_0 pi + sum k_i theta_i = 0.
struct IndependenceVerdict {
  Verdict independent = Verdict::Unknown;
  std::optional<std::vector<std::int64_t>> relation;
  double residual = 0.0;
  std::string method;
};

/// Floating input can only ever certify dependence (a relation found with
/// coefficients below max_coeff and residual below 1e-10); an empty angle set
/// is vacuously independent.
IndependenceVerdict rational_independence(const AngleSet& angles, std::int64_t max_coeff = kDefaultMaxCoeff);

struct CyclicOptions {
  std::int64_t max_coeff = kDefaultMaxCoeff;
  std::uint64_t max_root_order = 1000000;
  double tol_unit = kUnitTolerance;
  /// Exact tags for the eigenvalues of A, in the order returned by
  /// eigenvalues(A).
  std::vector<std::optional<PiFraction>> exact_angles;
};

struct CyclicityVerdict {
  Verdict verdict = Verdict::Unknown;
  std::optional<std::vector<std::int64_t>> relation;
  std::optional<std::uint64_t> root_order;  // smallest m > 1 with a^m = a
  std::string rationale;
};

CyclicityVerdict check_cyclic(const AffineSymbol& symbol, const CyclicOptions& options = {});

/// Always false for bounded operators; throws NotBounded otherwise.
bool check_supercyclic(const AffineSymbol& symbol, double tol_unit = kUnitTolerance);

enum class OrbitDirection { Adjoint, Forward };

/// (C_phi^*)^m K_z = K_{phi_m(z)}; for n = 1, C_phi^m K_z = c_m K_{conj(a)^m z}.
struct KernelOrbitPoint {
  ComplexVector center;
  Complex scale{1.0, 0.0};
};

KernelOrbitPoint kernel_orbit(const AffineSymbol& symbol, const ComplexVector& z, std::size_t m,
                              OrbitDirection direction = OrbitDirection::Adjoint,
                              double tol_unit = kUnitTolerance);

struct DensityReport {
  std::size_t truncated_dimension = 0;
  std::vector<std::size_t> span_dimension;  // after k = 0..steps applications
  std::size_t reached = 0;
  double fraction = 0.0;
};

/// Numerical rank growth of {M^k x : k <= steps} inside the degree-N
/// truncation. Evidence only; never feeds a verdict.
DensityReport orbit_density_experiment(const AffineSymbol& symbol, const Polynomial& seed, std::size_t max_degree,
                                       std::size_t steps, double rank_tol = 1e-8);

}  // namespace fockop
