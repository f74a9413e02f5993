#pragma once

#include <cstddef>

#include "fockop/linalg.hpp"

namespace fockop {

/// Weight of the Gaussian measure. Every closed form in the library is
/// written for the classical Fock space F^2(C^n), i.e. alpha = 1/2.
inline constexpr double kFockAlpha = 0.5;

/// Throws ShapeMismatch / NonFiniteEntry if (a, b) is not a well-formed
/// pair defining z -> a z + b on C^n.
void validate(const ComplexMatrix& a, const ComplexVector& b);

/// The affine map phi(z) = A z + B on C^n. Immutable; the singular value
/// decomposition of A is computed once at construction and shared.
class AffineSymbol {
 public:
  AffineSymbol(ComplexMatrix a, ComplexVector b);

  static AffineSymbol identity(std::size_t n);
  static AffineSymbol linear(ComplexMatrix a);

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(b_.size()); }
  const ComplexMatrix& matrix() const noexcept { return a_; }
  const ComplexVector& translation() const noexcept { return b_; }
  double alpha() const noexcept { return kFockAlpha; }

  ComplexVector operator()(const ComplexVector& z) const { return a_ * z + b_; }

  /// Singular values of A, nonincreasing.
  const RealVector& singular_values() const noexcept { return sigma_; }
  /// A = left * diag(sigma) * right_adjoint^*.
  const ComplexMatrix& left_singular_vectors() const noexcept { return left_; }
  const ComplexMatrix& right_singular_vectors() const noexcept { return right_; }

  double matrix_norm() const noexcept { return sigma_.size() > 0 ? sigma_(0) : 0.0; }

 private:
  ComplexMatrix a_;
  ComplexVector b_;
  RealVector sigma_;
  ComplexMatrix left_;
  ComplexMatrix right_;
};

/// Composition outer o inner, i.e. z -> outer(inner(z)).
AffineSymbol compose(const AffineSymbol& outer, const AffineSymbol& inner);

/// phi_m = phi o ... o phi (m times); m = 0 gives the identity map.
AffineSymbol iterate_symbol(const AffineSymbol& symbol, std::size_t m);

/// U A U^* = diag(D, A1) with D unimodular diagonal (s x s) and A1 upper
/// triangular with diagonal moduli < 1. Diagonal entries are ordered by
/// modulus descending, ties by argument ascending.
struct BlockSchurForm {
  ComplexMatrix unitary;       // U
  std::size_t unimodular = 0;  // s
  ComplexVector unimodular_diagonal;  // diagonal of D
  ComplexMatrix contractive_block;    // A1
  ComplexVector translation;          // B' = U B (empty when built from A alone)

  /// diag(D, A1) as a full n x n matrix.
  ComplexMatrix block_matrix() const;
};

BlockSchurForm block_schur_form(const ComplexMatrix& a, double tol_unit = kUnitTolerance);
BlockSchurForm block_schur_form(const AffineSymbol& symbol, double tol_unit = kUnitTolerance);

/// A = left * diag(sigma) * right with left, right unitary; translated
/// vector is left^* B.
struct SvdForm {
  ComplexMatrix left;   // V
  ComplexMatrix right;  // W
  RealVector sigma;
  ComplexVector translation;  // V^* B
};

SvdForm svd_normalize(const AffineSymbol& symbol);

/// The adjoint acts as C_phi^* f = K_B * (f o tau) with tau(z) = A^* z.
struct AdjointSymbol {
  AffineSymbol tau;
  ComplexVector kernel_weight;  // B
};

AdjointSymbol adjoint_symbol(const AffineSymbol& symbol);

/// Minimum-norm p with A p + B = p. Throws NotBounded when C_phi is not
/// bounded and Inconsistent if the least-squares residual is too large.
ComplexVector fixed_point(const AffineSymbol& symbol, double tol_unit = kUnitTolerance);

}  // namespace fockop
