#include "fockop/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fockop/error.hpp"

namespace fockop {

double operator_norm_of_matrix(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::NonSquare, "operator_norm_of_matrix expects a square matrix");
  }
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Complex z = a.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexVector normalize_phase(const ComplexVector& v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    // strict comparison keeps the first of several equal-modulus entries
    if (std::abs(v(i)) > best_abs + 1e-14) {
      best_abs = std::abs(v(i));
      best = i;
    }
  }
  if (best_abs <= 0.0) return v;
  const Complex phase = std::conj(v(best)) / std::abs(v(best));
  return v * phase;
}

ComplexVector min_norm_solve(const ComplexMatrix& m, const ComplexVector& rhs, double rank_tol) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? rank_tol * std::max(1.0, sv(0)) : 0.0;
  ComplexVector coeffs = svd.matrixU().adjoint() * rhs;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    coeffs(k) = sv(k) > cutoff ? coeffs(k) / sv(k) : Complex(0.0);
  }
  return svd.matrixV() * coeffs;
}

double positive_arg(Complex z) {
  double a = std::arg(z);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  // values just below 2pi are rounding noise around the positive real axis
  if (a >= 2.0 * std::numbers::pi - 1e-12) a = 0.0;
  return a;
}

bool spectral_order_less(Complex a, Complex b, double tol) {
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  if (std::abs(ma - mb) > tol) return ma > mb;
  return positive_arg(a) < positive_arg(b) - tol;
}

void sort_spectrally(std::vector<Complex>& values) {
  auto key = [](Complex z) {
    return std::pair{-std::llround(std::abs(z) * 1e12), std::llround(positive_arg(z) * 1e12)};
  };
  std::stable_sort(values.begin(), values.end(),
                   [&](Complex a, Complex b) { return key(a) < key(b); });
}

}  // namespace fockop
