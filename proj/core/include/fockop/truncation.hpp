#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "fockop/gaussian_rational.hpp"
#include "fockop/linalg.hpp"
#include "fockop/multi_index.hpp"
#include "fockop/polynomial.hpp"
#include "fockop/symbol.hpp"

namespace fockop {

/// p o phi, expanded exactly by multiplying cached powers of the affine
/// forms (Az + B)_i.
Polynomial compose_polynomial(const Polynomial& p, const AffineSymbol& symbol);
ExactPolynomial compose_polynomial(const ExactPolynomial& p, const ExactAffineSymbol& symbol);

/// Coordinates of p in the orthonormal basis e_gamma = z^gamma / ||z^gamma||.
/// Throws ShapeMismatch if p has a term of degree above the basis cap.
ComplexVector orthonormal_coordinates(const Polynomial& p, const GradedBasis& basis);
Polynomial from_orthonormal_coordinates(const ComplexVector& x, const GradedBasis& basis);

/// Matrix of C_phi on the span of monomials of degree <= N, in the
/// orthonormal basis. Column alpha holds the coordinates of C_phi e_alpha.
/// Entries with row degree above column degree vanish, so the matrix is
/// block upper triangular in the graded order.
struct TruncatedOperator {
  GradedBasis basis;
  ComplexMatrix matrix;
  AffineSymbol symbol;
};

TruncatedOperator build_truncation(const AffineSymbol& symbol, std::size_t max_degree,
                                   std::size_t cap = kDefaultDimensionCap);

/// Rational-mode truncation: C[beta, alpha] is the exact coefficient of
/// z^beta in (Az + B)^alpha, and M = D^{1/2} C D^{-1/2} with D the diagonal
/// of monomial norms.
struct ExactTruncation {
  GradedBasis basis;
  std::vector<GaussianRational> coefficients;  // column-major, dim x dim

  const GaussianRational& coefficient(std::size_t row, std::size_t col) const {
    return coefficients[col * basis.size() + row];
  }
  /// The orthonormal-basis matrix, rounded once per entry.
  ComplexMatrix to_matrix() const;
};

ExactTruncation build_exact_truncation(const ExactAffineSymbol& symbol, std::size_t max_degree,
                                       std::size_t cap = kDefaultDimensionCap);

double truncated_norm(const TruncatedOperator& t);

/// Eigenvalues with multiplicity, collected from the diagonal blocks of the
/// degree shells and sorted by modulus descending, then argument.
std::vector<Complex> truncated_spectrum(const TruncatedOperator& t);

/// Singular values, nonincreasing.
RealVector truncated_singular_values(const TruncatedOperator& t);

/// sum_i sigma_i^p.
double schatten_partial_sum(const RealVector& singular_values, double p);

/// Entry d is sum over |alpha| = d of ||C_phi e_alpha||^2, for d = 0..N.
/// Columns are generated shell by shell without storing the full matrix.
std::vector<double> column_norms_by_shell(const AffineSymbol& symbol, std::size_t max_degree,
                                          std::size_t cap = kDefaultDimensionCap);

/// Frobenius norm of M^* M - M M^*. Only defined for B = 0.
double truncated_commutator_norm(const AffineSymbol& symbol, std::size_t max_degree);

/// Compression of C_phi^* = M_{K_B} C_tau to the same subspace, computed
/// from the adjoint symbol rather than by transposing.
ComplexMatrix truncated_adjoint_matrix(const AffineSymbol& symbol, std::size_t max_degree);

/// K_w(z) = exp(<z, w>/2) expanded up to total degree N.
Polynomial kernel_polynomial(const ComplexVector& w, std::size_t max_degree);

/// "row,col,re,im" header followed by one line per entry, row-major.
void write_matrix_csv(const ComplexMatrix& m, std::ostream& out);
/// "FOCKTRNC1", u32 dimension, then dim^2 (re, im) doubles, row-major, all
/// little-endian.
void write_matrix_binary(const ComplexMatrix& m, std::ostream& out);
ComplexMatrix read_matrix_binary(std::istream& in);

}  // namespace fockop
