#include "fockop/symbol.hpp"

#include <cmath>
#include <string>

#include "fockop/analysis.hpp"
#include "fockop/error.hpp"

namespace fockop {

void validate(const ComplexMatrix& a, const ComplexVector& b) {
  if (b.size() == 0) throw Error(ErrorCode::ShapeMismatch, "dimension must be positive");
  if (a.rows() != b.size() || a.cols() != b.size()) {
    throw Error(ErrorCode::ShapeMismatch,
                "A is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " but B has length " + std::to_string(b.size()));
  }
  if (!all_finite(a) || !all_finite(b)) {
    throw Error(ErrorCode::NonFiniteEntry, "symbol entries must be finite");
  }
}

AffineSymbol::AffineSymbol(ComplexMatrix a, ComplexVector b) : a_(std::move(a)), b_(std::move(b)) {
  validate(a_, b_);
  Eigen::JacobiSVD<ComplexMatrix> svd(a_, Eigen::ComputeFullU | Eigen::ComputeFullV);
  sigma_ = svd.singularValues();
  left_ = svd.matrixU();
  right_ = svd.matrixV();
}

AffineSymbol AffineSymbol::identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return AffineSymbol(ComplexMatrix::Identity(k, k), ComplexVector::Zero(k));
}

AffineSymbol AffineSymbol::linear(ComplexMatrix a) {
  const auto k = a.rows();
  return AffineSymbol(std::move(a), ComplexVector::Zero(k));
}

AffineSymbol compose(const AffineSymbol& outer, const AffineSymbol& inner) {
  if (outer.dimension() != inner.dimension()) {
    throw Error(ErrorCode::ShapeMismatch, "cannot compose symbols of different dimension");
  }
  return AffineSymbol(outer.matrix() * inner.matrix(),
                      outer.matrix() * inner.translation() + outer.translation());
}

AffineSymbol iterate_symbol(const AffineSymbol& symbol, std::size_t m) {
  AffineSymbol result = AffineSymbol::identity(symbol.dimension());
  AffineSymbol power = symbol;
  // all factors are iterates of the same map, so they commute
  while (m > 0) {
    if (m & 1U) result = compose(power, result);
    m >>= 1U;
    if (m > 0) power = compose(power, power);
  }
  return result;
}

ComplexMatrix BlockSchurForm::block_matrix() const {
  const auto s = static_cast<Eigen::Index>(unimodular);
  const auto n = unitary.rows();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < s; ++i) m(i, i) = unimodular_diagonal(i);
  m.bottomRightCorner(n - s, n - s) = contractive_block;
  return m;
}

namespace {

// Exchanges the adjacent diagonal entries k, k+1 of the upper-triangular t
// by a unitary similarity, accumulating it into q (a = q t q^*).
void swap_adjacent(ComplexMatrix& t, ComplexMatrix& q, Eigen::Index k) {
  const Complex a = t(k, k);
  const Complex b = t(k + 1, k + 1);
  Eigen::Vector2cd v(t(k, k + 1), b - a);
  const double len = v.norm();
  if (len == 0.0) return;
  v /= len;
  Eigen::Matrix2cd g;
  g << v(0), -std::conj(v(1)), v(1), std::conj(v(0));
  t.middleCols(k, 2) = t.middleCols(k, 2) * g;
  t.middleRows(k, 2) = g.adjoint() * t.middleRows(k, 2);
  q.middleCols(k, 2) = q.middleCols(k, 2) * g;
  t(k, k) = b;
  t(k + 1, k + 1) = a;
  t(k + 1, k) = Complex(0.0);
}

}  // namespace

BlockSchurForm block_schur_form(const ComplexMatrix& a, double tol_unit) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::NonSquare, "block_schur_form expects a square matrix");
  const double norm = operator_norm_of_matrix(a);
  if (norm > 1.0 + tol_unit) {
    throw Error(ErrorCode::NormExceedsOne, "||A|| = " + std::to_string(norm) + " exceeds 1");
  }
  const Eigen::Index n = a.rows();
  Eigen::ComplexSchur<ComplexMatrix> schur(a);
  ComplexMatrix t = schur.matrixT();
  ComplexMatrix q = schur.matrixU();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j) t(i, j) = Complex(0.0);

  // bubble sort of the diagonal by adjacent exchanges
  for (Eigen::Index pass = 0; pass < n; ++pass) {
    bool swapped = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      if (spectral_order_less(t(k + 1, k + 1), t(k, k), tol_unit)) {
        swap_adjacent(t, q, k);
        swapped = true;
      }
    }
    if (!swapped) break;
  }

  // U = q^*; pin the free row phases of U so the form is reproducible
  ComplexMatrix u = q.adjoint();
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index pivot = 0;
    for (Eigen::Index j = 1; j < n; ++j)
      if (std::abs(u(i, j)) > std::abs(u(i, pivot)) + 1e-14) pivot = j;
    const Complex phase = std::conj(u(i, pivot)) / std::abs(u(i, pivot));
    u.row(i) *= phase;
    t.row(i) *= phase;
    t.col(i) *= std::conj(phase);
  }

  BlockSchurForm form;
  Eigen::Index s = 0;
  while (s < n && std::abs(t(s, s)) >= 1.0 - tol_unit) ++s;
  for (Eigen::Index i = 0; i < s; ++i) {
    for (Eigen::Index k = i + 1; k < n; ++k) {
      if (std::abs(t(i, k)) > tol_unit) {
        throw Error(ErrorCode::StructureViolation,
                    "unimodular row " + std::to_string(i) + " has off-diagonal entry of modulus " +
                        std::to_string(std::abs(t(i, k))));
      }
      t(i, k) = Complex(0.0);
    }
  }
  form.unitary = u;
  form.unimodular = static_cast<std::size_t>(s);
  form.unimodular_diagonal = t.diagonal().head(s);
  form.contractive_block = t.bottomRightCorner(n - s, n - s);
  return form;
}

BlockSchurForm block_schur_form(const AffineSymbol& symbol, double tol_unit) {
  BlockSchurForm form = block_schur_form(symbol.matrix(), tol_unit);
  form.translation = form.unitary * symbol.translation();
  return form;
}

SvdForm svd_normalize(const AffineSymbol& symbol) {
  SvdForm form;
  form.left = symbol.left_singular_vectors();
  form.right = symbol.right_singular_vectors().adjoint();
  form.sigma = symbol.singular_values();
  form.translation = form.left.adjoint() * symbol.translation();
  return form;
}

AdjointSymbol adjoint_symbol(const AffineSymbol& symbol) {
  return AdjointSymbol{AffineSymbol::linear(symbol.matrix().adjoint()), symbol.translation()};
}

ComplexVector fixed_point(const AffineSymbol& symbol, double tol_unit) {
  if (!check_bounded(symbol, tol_unit).bounded) {
    throw Error(ErrorCode::NotBounded, "fixed_point requires a bounded composition operator");
  }
  const auto n = static_cast<Eigen::Index>(symbol.dimension());
  const ComplexMatrix shifted = ComplexMatrix::Identity(n, n) - symbol.matrix();
  ComplexVector p = min_norm_solve(shifted, symbol.translation(), tol_unit);
  const double residual = (symbol(p) - p).norm();
  if (residual > 1e-9 * std::max(1.0, symbol.translation().norm())) {
    throw Error(ErrorCode::Inconsistent, "fixed point residual " + std::to_string(residual));
  }
  return p;
}

}  // namespace fockop
