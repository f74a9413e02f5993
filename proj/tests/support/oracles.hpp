// Reference implementations used only by the tests. None of them call the
// library code they are checked against.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Exps = std::vector<unsigned>;

/// Exponent vectors of degree <= N sorted by (degree, lexicographic).
inline std::vector<Exps> graded_indices(std::size_t n, unsigned N) {
  std::vector<Exps> all;
  Exps cur(n, 0);
  // odometer over the box [0, N]^n, keeping degree <= N
  while (true) {
    unsigned deg = 0;
    for (auto e : cur) deg += e;
    if (deg <= N) all.push_back(cur);
    std::size_t i = 0;
    while (i < n && ++cur[i] > N) cur[i++] = 0;
    if (i == n) break;
  }
  std::sort(all.begin(), all.end(), [](const Exps& a, const Exps& b) {
    unsigned da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    return da != db ? da < db : a < b;
  });
  return all;
}

inline double monomial_norm_sq(const Exps& g) {
  double r = 1.0;
  for (auto e : g) r *= std::tgamma(e + 1.0) * std::pow(2.0, e);
  return r;
}

using Poly = std::map<Exps, Complex>;

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r[e] += ca * cb;
    }
  return r;
}

/// Matrix of C_phi on monomials of degree <= N by direct expansion of
/// prod_i ((Az + B)_i)^{alpha_i}, one column at a time.
inline Matrix brute_force_truncation(const Matrix& a, const Vector& b, unsigned N) {
  const std::size_t n = static_cast<std::size_t>(b.size());
  const auto idx = graded_indices(n, N);
  std::map<Exps, std::size_t> pos;
  for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = k;
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t col = 0; col < idx.size(); ++col) {
    Poly p{{Exps(n, 0), 1.0}};
    for (std::size_t i = 0; i < n; ++i) {
      Poly form{{Exps(n, 0), b(static_cast<Eigen::Index>(i))}};
      for (std::size_t j = 0; j < n; ++j) {
        Exps e(n, 0);
        e[j] = 1;
        form[e] += a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
      for (unsigned k = 0; k < idx[col][i]; ++k) p = multiply(p, form);
    }
    for (const auto& [e, c] : p) {
      const std::size_t row = pos.at(e);
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          c * std::sqrt(monomial_norm_sq(e) / monomial_norm_sq(idx[col]));
    }
  }
  return m;
}

/// Gauss-Hermite rule from the eigen-decomposition of the Jacobi matrix.
struct Rule {
  std::vector<double> x, w;
};

inline Rule golub_welsch(int order) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) j(k, k - 1) = j(k - 1, k) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  Rule r;
  for (int k = 0; k < order; ++k) {
    r.x.push_back(es.eigenvalues()(k));
    const double v = es.eigenvectors()(0, k);
    r.w.push_back(std::sqrt(std::numbers::pi) * v * v);
  }
  return r;
}

/// ||C_phi k_z||^2 = int |k_z(phi(w))|^2 dv_{1/2}(w), with
/// dv_{1/2} = (2 pi)^{-n} exp(-|w|^2/2) dv, by tensor Gauss-Hermite over all
/// 2n real coordinates (w = sqrt(2) u).
inline double berezin_by_quadrature(const Matrix& a, const Vector& b, const Vector& z, int order) {
  const auto n = b.size();
  const Rule r = golub_welsch(order);
  const int dims = static_cast<int>(2 * n);
  std::vector<int> counter(static_cast<std::size_t>(dims), 0);
  double total = 0.0;
  while (true) {
    Vector w(n);
    double weight = 1.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto re = static_cast<std::size_t>(counter[static_cast<std::size_t>(k)]);
      const auto im = static_cast<std::size_t>(counter[static_cast<std::size_t>(k + n)]);
      w(k) = std::sqrt(2.0) * Complex(r.x[re], r.x[im]);
      weight *= r.w[re] * r.w[im];
    }
    const Vector xi = a * w + b;
    const double log_kz = (z.adjoint() * xi)(0).real() - 0.5 * z.squaredNorm();  // log |k_z(xi)|^2
    total += weight * std::exp(log_kz);
    int k = 0;
    while (k < dims && ++counter[static_cast<std::size_t>(k)] == order) counter[static_cast<std::size_t>(k++)] = 0;
    if (k == dims) break;
  }
  return total / std::pow(std::numbers::pi, static_cast<double>(n));
}

/// int exp(-x^T Q x + g^T x + c) dx over R^d for positive definite Q.
inline double gaussian_integral(const Eigen::MatrixXd& q, const Eigen::VectorXd& g, double c) {
  const double d = static_cast<double>(q.rows());
  const Eigen::LLT<Eigen::MatrixXd> llt(q);
  const double det = llt.matrixL().toDenseMatrix().diagonal().prod();
  return std::pow(std::numbers::pi, d / 2.0) / det * std::exp(0.25 * g.dot(llt.solve(g)) + c);
}

// Random constructions ------------------------------------------------------

inline Matrix random_gaussian(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> nd;
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(nd(rng), nd(rng));
  return m;
}

inline Vector random_vector(std::mt19937_64& rng, Eigen::Index n, double scale = 1.0) {
  return scale * random_gaussian(rng, n, 1).col(0);
}

inline Matrix random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  const Matrix g = random_gaussian(rng, n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return q;
}

inline Complex random_in_disk(std::mt19937_64& rng, double max_modulus) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double rad = max_modulus * std::sqrt(u(rng));
  return std::polar(rad, 2.0 * std::numbers::pi * u(rng));
}

/// U diag(lambda) U^* with |lambda_k| <= max_modulus.
inline Matrix random_normal(std::mt19937_64& rng, Eigen::Index n, double max_modulus) {
  const Matrix u = random_unitary(rng, n);
  Vector d(n);
  for (Eigen::Index k = 0; k < n; ++k) d(k) = random_in_disk(rng, max_modulus);
  return u * d.asDiagonal() * u.adjoint();
}

/// Random contraction with operator norm exactly `norm`.
inline Matrix random_contraction(std::mt19937_64& rng, Eigen::Index n, double norm) {
  const Matrix g = random_gaussian(rng, n, n);
  Eigen::JacobiSVD<Matrix> svd(g);
  return g * (norm / svd.singularValues()(0));
}

struct RandomSymbol {
  Matrix a;
  Vector b;
};

/// A = U1 diag(D, C) U2^* with D unitary (s x s, s >= 1) and ||C|| < 1;
/// B = U1 (0, b') is orthogonal to the image of the norm-attaining
/// directions, so the operator is bounded but not compact.
inline RandomSymbol random_bounded_noncompact(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_int_distribution<Eigen::Index> pick_s(1, n);
  std::uniform_real_distribution<double> u(0.0, 0.95);
  const Eigen::Index s = pick_s(rng);
  Matrix core = Matrix::Zero(n, n);
  core.topLeftCorner(s, s) = random_unitary(rng, s);
  if (n > s) core.bottomRightCorner(n - s, n - s) = random_contraction(rng, n - s, u(rng));
  const Matrix u1 = random_unitary(rng, n);
  const Matrix u2 = random_unitary(rng, n);
  Vector inner = Vector::Zero(n);
  if (n > s) inner.tail(n - s) = random_vector(rng, n - s, 0.7);
  return {u1 * core * u2.adjoint(), u1 * inner};
}

inline RandomSymbol random_compact(std::mt19937_64& rng, Eigen::Index n, double max_norm, double b_scale) {
  std::uniform_real_distribution<double> u(0.05, max_norm);
  return {random_contraction(rng, n, u(rng)), random_vector(rng, n, b_scale)};
}

}  // namespace oracle
