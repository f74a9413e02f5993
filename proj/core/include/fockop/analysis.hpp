#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fockop/linalg.hpp"
#include "fockop/symbol.hpp"

namespace fockop {

struct BoundednessVerdict {
  bool bounded = false;
  /// zeta with |A zeta| = |zeta| and <A zeta, B> != 0; present exactly
  /// when the only obstruction is the translation.
  std::optional<ComplexVector> witness;
  double norm_a = 0.0;
};

/// K_w(z) = exp(<z, w>/2), the reproducing kernel at w.
struct KernelFunction {
  ComplexVector center;

  Complex operator()(const ComplexVector& z) const { return std::exp(inner(z, center) / 2.0); }
  double norm_squared() const { return std::exp(center.squaredNorm() / 2.0); }
};

BoundednessVerdict check_bounded(const AffineSymbol& symbol, double tol_unit = kUnitTolerance);
bool check_compact(const AffineSymbol& symbol, double tol_unit = kUnitTolerance);

/// Minimum-norm solution of (I - A^*A) z = A^*B.
ComplexVector solve_z0(const AffineSymbol& symbol, double tol_unit = kUnitTolerance);

/// exp((|z0|^2 - |A z0|^2 + |B|^2) / 4).
double operator_norm(const AffineSymbol& symbol, double tol_unit = kUnitTolerance);

/// Both expressions for the essential norm of a non-compact operator,
/// kept side by side so callers can report the agreement.
struct EssentialNormCertificate {
  bool compact = false;
  double value = 0.0;
  double norm_expression = 0.0;     // exp((|z0|^2 - |A z0|^2 + |B|^2)/4)
  double pairing_expression = 0.0;  // exp(Re<phi(z0), B>/4)
  double pairing_imag = 0.0;
};

EssentialNormCertificate essential_norm_certificate(const AffineSymbol& symbol,
                                                    double tol_unit = kUnitTolerance);
double essential_norm(const AffineSymbol& symbol, double tol_unit = kUnitTolerance);

inline constexpr double kNormalTolerance = 1e-10;

bool check_normal(const AffineSymbol& symbol, double tol = kNormalTolerance);
/// Same verdict as check_normal; hyponormal composition operators of this
/// kind are automatically normal.
bool check_hyponormal(const AffineSymbol& symbol, double tol = kNormalTolerance);
bool check_essentially_normal(const AffineSymbol& symbol, double tol = kNormalTolerance);

/// ||C_phi k_z||^2 = exp(-|z|^2/2 + Re<B, z> + |A^* z|^2/2).
double berezin_transform(const AffineSymbol& symbol, const ComplexVector& z,
                         double tol_unit = kUnitTolerance);

/// ||C_phi^* k_z|| = exp((|phi(z)|^2 - |z|^2)/4).
double adjoint_kernel_ratio(const AffineSymbol& symbol, const ComplexVector& z,
                            double tol_unit = kUnitTolerance);

struct QuadratureSpec {
  std::vector<std::size_t> orders{16, 32, 48, 64};
  double growth_limit = 0.10;
  double converged_rel = 1e-12;
};

/// int ||C_phi k_z||^p dv(z) and int ||C_phi^* k_z||^p dv(z) over plain
/// Lebesgue measure on C^n, with the explicit bound C exp(p|B|^2/(1-||A||)),
/// C = (8 pi / (p (1 - ||A||^2)))^n, that both must satisfy.
struct SchattenIntegrals {
  double int_cphi = 0.0;
  double int_cphi_star = 0.0;
  double bound = 0.0;
  std::size_t order_used = 0;
  bool converged = false;
  bool within_bound = false;
};

SchattenIntegrals schatten_integrals(const AffineSymbol& symbol, double p, const QuadratureSpec& spec = {},
                                     double tol_unit = kUnitTolerance);

bool schatten_membership(const AffineSymbol& symbol, double tol_unit = kUnitTolerance);

struct HilbertSchmidtEstimate {
  double value = 0.0;          // partial sum plus geometric tail, or +inf
  double partial_sum = 0.0;
  std::size_t degree = 0;      // last degree summed
  double decay_ratio = 0.0;    // worst shell ratio over the last third
};

/// Limit of squared Frobenius norms of the truncations; +inf when the
/// operator is not compact or the shell contributions stop decaying.
HilbertSchmidtEstimate hilbert_schmidt_estimate(const AffineSymbol& symbol, std::size_t max_degree = 0,
                                                double tol_unit = kUnitTolerance);
double hilbert_schmidt_norm_sq(const AffineSymbol& symbol, double tol_unit = kUnitTolerance);

/// exp(|B|^2/2 + (A^*B)^*(I - A^*A)^{-1}(A^*B)/2) / det(I - A^*A), i.e.
/// ||C_phi||^2 / det(I - A^*A); +inf for non-compact symbols.
double hilbert_schmidt_closed_form(const AffineSymbol& symbol, double tol_unit = kUnitTolerance);

}  // namespace fockop
