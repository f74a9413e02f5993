#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fockop/dynamics.hpp"
#include "fockop/gaussian_rational.hpp"
#include "fockop/linalg.hpp"
#include "fockop/multi_index.hpp"
#include "fockop/polynomial.hpp"
#include "fockop/symbol.hpp"

namespace fockop {

/// Eigenvalues with multiplicity, modulus descending then argument ascending.
std::vector<Complex> eigenvalues(const ComplexMatrix& a);

struct SpectrumProduct {
  MultiIndex gamma;
  Complex value;
};

struct SpectrumEnumeration {
  std::vector<Complex> eigenvalues_of_a;
  /// First occurrence of each distinct lambda^gamma, in graded-lex order of gamma.
  std::vector<SpectrumProduct> products;
  bool closure_contains_zero = false;
  IndependenceVerdict unimodular_angles;
};

inline constexpr double kDefaultDedupTolerance = 1e-10;

SpectrumEnumeration enumerate_spectrum(const AffineSymbol& symbol, std::size_t max_degree,
                                       double dedup_tol = kDefaultDedupTolerance,
                                       const std::vector<std::optional<PiFraction>>& exact_angles = {},
                                       double tol_unit = kUnitTolerance);

inline constexpr double kEigenvectorConditionLimit = 1e8;

/// F(w, v) = w^beta prod_i ((v - C)^T v(i))^gamma_i in the coordinates
/// zeta = U z of the block Schur form, where A1^T v(i) = lambda_i v(i) and
/// C = (I - A1)^{-1} B1.
struct EigenfunctionSpec {
  MultiIndex beta;
  MultiIndex gamma;
  ComplexVector c;
  std::vector<ComplexVector> eigvecs_a1t;
  Polynomial polynomial{1};
  Complex eigenvalue;
  ComplexMatrix unitary;  // U
};

EigenfunctionSpec construct_eigenfunction(const AffineSymbol& symbol, const MultiIndex& beta,
                                          const MultiIndex& gamma, double tol_unit = kUnitTolerance);

/// max |coeff| of F o psi - eigenvalue * F, with psi(zeta) = U phi(U^* zeta).
double verify_eigenfunction(const EigenfunctionSpec& spec, const AffineSymbol& symbol);

/// The same eigenfunction as a polynomial in the original coordinates z.
Polynomial eigenfunction_in_original_coordinates(const EigenfunctionSpec& spec);

/// Rational-mode construction for symbols already in block form: A =
/// diag(D, A1) exactly, D diagonal with |d| = 1, A1 upper triangular with
/// diagonal moduli < 1 and the unimodular part of B zero.
struct ExactEigenfunction {
  ExactPolynomial polynomial{1};
  GaussianRational eigenvalue;
  std::size_t unimodular = 0;
};

ExactEigenfunction construct_exact_eigenfunction(const ExactAffineSymbol& symbol, const MultiIndex& beta,
                                                 const MultiIndex& gamma);

/// Zero exactly when F o phi = eigenvalue * F holds in exact arithmetic;
/// otherwise the largest coefficient modulus of the defect.
double verify_exact_eigenfunction(const ExactEigenfunction& spec, const ExactAffineSymbol& symbol);

/// Greedy nearest matching between two multisets of equal size; returns the
/// largest matched distance, or +inf when the sizes differ.
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b);

}  // namespace fockop
