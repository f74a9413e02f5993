#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace fockop {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default band for classifying a modulus or singular value as "equal to 1".
inline constexpr double kUnitTolerance = 1e-10;

/// Inner product linear in the first slot: <x, y> = sum_j x_j conj(y_j).
inline Complex inner(const ComplexVector& x, const ComplexVector& y) { return y.dot(x); }

/// Largest singular value. Throws NonSquare for rectangular input.
double operator_norm_of_matrix(const ComplexMatrix& a);

bool all_finite(const ComplexMatrix& a);

/// Multiplies `v` by a unimodular scalar so that its largest-modulus entry is
/// real and positive. Leaves the zero vector untouched.
ComplexVector normalize_phase(const ComplexVector& v);

/// Minimum-norm least-squares solution of m x = rhs; singular values below
/// `rank_tol * sigma_max` are treated as zero.
ComplexVector min_norm_solve(const ComplexMatrix& m, const ComplexVector& rhs, double rank_tol);

/// Sort key for complex scalars: modulus descending, ties (within `tol`)
/// broken by argument ascending in [0, 2pi).
bool spectral_order_less(Complex a, Complex b, double tol = kUnitTolerance);

/// Argument mapped into [0, 2pi).
double positive_arg(Complex z);

/// Sorts by modulus descending, then argument ascending. Moduli are compared
/// on a 1e-12 grid so that rounding noise cannot reorder equal values while
/// the comparison stays a strict weak order.
void sort_spectrally(std::vector<Complex>& values);

}  // namespace fockop
