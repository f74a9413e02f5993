#include "fockop/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fockop/analysis.hpp"
#include "fockop/error.hpp"
#include "fockop/truncation.hpp"

namespace fockop {

std::vector<Complex> eigenvalues(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::NonSquare, "eigenvalues expects a square matrix");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, false);
  std::vector<Complex> values(solver.eigenvalues().data(), solver.eigenvalues().data() + a.rows());
  sort_spectrally(values);
  return values;
}

namespace {

template <class Scalar>
Scalar power_product(const std::vector<Scalar>& base, const MultiIndex& e) {
  Scalar r(1);
  for (std::size_t i = 0; i < base.size(); ++i)
    for (unsigned k = 0; k < e[i]; ++k) r *= base[i];
  return r;
}

}  // namespace

SpectrumEnumeration enumerate_spectrum(const AffineSymbol& symbol, std::size_t max_degree, double dedup_tol,
                                       const std::vector<std::optional<PiFraction>>& exact_angles,
                                       double tol_unit) {
  if (!check_bounded(symbol, tol_unit).bounded) {
    throw Error(ErrorCode::NotBounded, "enumerate_spectrum requires a bounded composition operator");
  }
  SpectrumEnumeration out;
  out.eigenvalues_of_a = eigenvalues(symbol.matrix());
  const std::size_t n = symbol.dimension();
  for (std::size_t d = 0; d <= max_degree; ++d) {
    for (const MultiIndex& g : indices_of_degree(n, static_cast<unsigned>(d))) {
      const Complex v = power_product(out.eigenvalues_of_a, g);
      const bool seen = std::any_of(out.products.begin(), out.products.end(),
                                    [&](const SpectrumProduct& p) { return std::abs(p.value - v) <= dedup_tol; });
      if (!seen) out.products.push_back({g, v});
    }
  }
  AngleSet angles;
  for (std::size_t i = 0; i < out.eigenvalues_of_a.size(); ++i) {
    const Complex l = out.eigenvalues_of_a[i];
    if (std::abs(l) < 1.0 - tol_unit) {
      out.closure_contains_zero = true;
      continue;
    }
    angles.thetas.push_back(positive_arg(l));
    angles.exact.push_back(i < exact_angles.size() ? exact_angles[i] : std::nullopt);
  }
  out.unimodular_angles = rational_independence(angles);
  return out;
}

EigenfunctionSpec construct_eigenfunction(const AffineSymbol& symbol, const MultiIndex& beta,
                                          const MultiIndex& gamma, double tol_unit) {
  if (!check_bounded(symbol, tol_unit).bounded) {
    throw Error(ErrorCode::NotBounded, "construct_eigenfunction requires a bounded composition operator");
  }
  const BlockSchurForm form = block_schur_form(symbol, tol_unit);
  const std::size_t n = symbol.dimension();
  const std::size_t s = form.unimodular;
  const std::size_t m = n - s;
  if (beta.size() != s || gamma.size() != m) {
    throw Error(ErrorCode::ShapeMismatch, "beta must have length " + std::to_string(s) + " and gamma length " +
                                              std::to_string(m));
  }
  const auto mi = static_cast<Eigen::Index>(m);
  const ComplexMatrix& a1 = form.contractive_block;
  const ComplexVector b1 = form.translation.tail(mi);

  EigenfunctionSpec spec;
  spec.beta = beta;
  spec.gamma = gamma;
  spec.unitary = form.unitary;
  const ComplexMatrix shifted = ComplexMatrix::Identity(mi, mi) - a1;
  spec.c = shifted.triangularView<Eigen::Upper>().solve(b1);

  if (m > 0) {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(a1.transpose());
    std::vector<bool> used(m, false);
    ComplexMatrix basis(mi, mi);
    for (Eigen::Index i = 0; i < mi; ++i) {
      Eigen::Index pick = -1;
      for (Eigen::Index k = 0; k < mi; ++k) {
        if (used[static_cast<std::size_t>(k)]) continue;
        if (pick < 0 || std::abs(solver.eigenvalues()(k) - a1(i, i)) <
                            std::abs(solver.eigenvalues()(pick) - a1(i, i))) {
          pick = k;
        }
      }
      used[static_cast<std::size_t>(pick)] = true;
      ComplexVector v = normalize_phase(solver.eigenvectors().col(pick));
      v /= v.cwiseAbs().maxCoeff();
      basis.col(i) = v;
      spec.eigvecs_a1t.push_back(v);
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(basis);
    const auto& sv = svd.singularValues();
    const double cond = sv(mi - 1) > 0.0 ? sv(0) / sv(mi - 1) : std::numeric_limits<double>::infinity();
    if (cond > kEigenvectorConditionLimit) {
      throw Error(ErrorCode::NotDiagonalizable,
                  "eigenvector matrix of A1^T has condition number " + std::to_string(cond));
    }
  }

  Polynomial f = Polynomial::constant(n, 1.0);
  Complex eigenvalue = 1.0;
  for (std::size_t j = 0; j < s; ++j) {
    f = f * Polynomial::variable(n, j).pow(beta[j]);
    eigenvalue *= std::pow(form.unimodular_diagonal(static_cast<Eigen::Index>(j)), static_cast<int>(beta[j]));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const ComplexVector& v = spec.eigvecs_a1t[i];
    Polynomial form_i = Polynomial::constant(n, -spec.c.cwiseProduct(v).sum());
    for (std::size_t k = 0; k < m; ++k) form_i.add_term(MultiIndex::unit(n, s + k), v(static_cast<Eigen::Index>(k)));
    f = f * form_i.pow(gamma[i]);
    const auto ii = static_cast<Eigen::Index>(i);
    eigenvalue *= std::pow(a1(ii, ii), static_cast<int>(gamma[i]));
  }
  spec.polynomial = std::move(f);
  spec.eigenvalue = eigenvalue;
  return spec;
}

double verify_eigenfunction(const EigenfunctionSpec& spec, const AffineSymbol& symbol) {
  const ComplexMatrix& u = spec.unitary;
  const AffineSymbol psi(u * symbol.matrix() * u.adjoint(), u * symbol.translation());
  Polynomial defect = compose_polynomial(spec.polynomial, psi);
  defect -= spec.polynomial * spec.eigenvalue;
  return defect.max_coefficient_modulus();
}

Polynomial eigenfunction_in_original_coordinates(const EigenfunctionSpec& spec) {
  const std::size_t n = spec.polynomial.variables();
  std::vector<Polynomial> forms;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial row(n);
    for (std::size_t j = 0; j < n; ++j)
      row.add_term(MultiIndex::unit(n, j), spec.unitary(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    forms.push_back(std::move(row));
  }
  return substitute(spec.polynomial, forms);
}

ExactEigenfunction construct_exact_eigenfunction(const ExactAffineSymbol& symbol, const MultiIndex& beta,
                                                 const MultiIndex& gamma) {
  const std::size_t n = symbol.dimension();
  const mpq_class one(1);
  std::size_t s = 0;
  while (s < n && symbol.a(s, s).norm_squared() == one) ++s;
  auto fail = [](const std::string& what) { throw Error(ErrorCode::NotInBlockForm, what); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || symbol.a(i, j).is_zero()) continue;
      if (i < s || j < s) fail("unimodular rows and columns must be zero off the diagonal");
      if (i > j) fail("contractive block must be upper triangular");
    }
    if (i >= s && !(symbol.a(i, i).norm_squared() < one)) fail("unimodular diagonal entries must come first");
    if (i < s && !symbol.b(i).is_zero()) fail("translation must vanish on the unimodular block");
  }
  const std::size_t m = n - s;
  if (beta.size() != s || gamma.size() != m) throw Error(ErrorCode::ShapeMismatch, "beta / gamma lengths");

  auto a1 = [&](std::size_t r, std::size_t c) -> const GaussianRational& { return symbol.a(s + r, s + c); };

  // back substitution for (I - A1) C = B1
  std::vector<GaussianRational> c(m);
  for (std::size_t j = m; j-- > 0;) {
    GaussianRational rhs = symbol.b(s + j);
    for (std::size_t k = j + 1; k < m; ++k) rhs += a1(j, k) * c[k];
    c[j] = rhs / (GaussianRational(1) - a1(j, j));
  }

  ExactEigenfunction out;
  out.unimodular = s;
  ExactPolynomial f = ExactPolynomial::constant(n, GaussianRational(1));
  GaussianRational eigenvalue(1);
  for (std::size_t j = 0; j < s; ++j) {
    f = f * ExactPolynomial::variable(n, j).pow(beta[j]);
    for (unsigned e = 0; e < beta[j]; ++e) eigenvalue *= symbol.a(j, j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    // forward substitution for A1^T v = lambda_i v with v_k = 0 (k < i), v_i = 1
    const GaussianRational& lambda = a1(i, i);
    std::vector<GaussianRational> v(m);
    v[i] = GaussianRational(1);
    for (std::size_t j = i + 1; j < m; ++j) {
      GaussianRational rhs;
      for (std::size_t k = i; k < j; ++k) rhs -= a1(k, j) * v[k];
      const GaussianRational pivot = a1(j, j) - lambda;
      if (pivot.is_zero()) {
        if (!rhs.is_zero()) throw Error(ErrorCode::NotDiagonalizable, "A1^T has a nontrivial Jordan block");
        continue;
      }
      v[j] = rhs / pivot;
    }
    GaussianRational offset;
    for (std::size_t k = 0; k < m; ++k) offset -= c[k] * v[k];
    ExactPolynomial form_i = ExactPolynomial::constant(n, offset);
    for (std::size_t k = 0; k < m; ++k) form_i.add_term(MultiIndex::unit(n, s + k), v[k]);
    f = f * form_i.pow(gamma[i]);
    for (unsigned e = 0; e < gamma[i]; ++e) eigenvalue *= lambda;
  }
  out.polynomial = std::move(f);
  out.eigenvalue = eigenvalue;
  return out;
}

double verify_exact_eigenfunction(const ExactEigenfunction& spec, const ExactAffineSymbol& symbol) {
  ExactPolynomial defect = compose_polynomial(spec.polynomial, symbol);
  defect -= spec.polynomial * spec.eigenvalue;
  return defect.max_coefficient_modulus();
}

double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  sort_spectrally(a);
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const Complex& x : a) {
    std::size_t pick = b.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best) {
        best = d;
        pick = j;
      }
    }
    used[pick] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace fockop
