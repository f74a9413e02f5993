#include "fockop/truncation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "fockop/error.hpp"

namespace fockop {

namespace {

// First coordinate with a nonzero exponent; alpha = parent + e_i.
std::size_t split_coordinate(const MultiIndex& alpha) {
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] > 0) return i;
  return alpha.size();
}

std::vector<std::size_t> parent_table(const GradedBasis& basis) {
  std::vector<std::size_t> parent(basis.size(), 0);
  for (std::size_t k = 1; k < basis.size(); ++k) {
    MultiIndex lower = basis.index(k);
    lower[split_coordinate(lower)] -= 1;
    parent[k] = static_cast<std::size_t>(basis.position(lower));
  }
  return parent;
}

template <class Scalar>
std::vector<MultiPolynomial<Scalar>> affine_forms(std::size_t n, auto&& a, auto&& b) {
  std::vector<MultiPolynomial<Scalar>> forms;
  forms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPolynomial<Scalar> form = MultiPolynomial<Scalar>::constant(n, b(i));
    for (std::size_t j = 0; j < n; ++j) form.add_term(MultiIndex::unit(n, j), a(i, j));
    forms.push_back(std::move(form));
  }
  return forms;
}

}  // namespace

Polynomial compose_polynomial(const Polynomial& p, const AffineSymbol& symbol) {
  const std::size_t n = symbol.dimension();
  if (p.variables() != n) throw Error(ErrorCode::ShapeMismatch, "polynomial and symbol dimensions differ");
  const auto& a = symbol.matrix();
  const auto& b = symbol.translation();
  auto forms = affine_forms<Complex>(
      n, [&](std::size_t i, std::size_t j) { return a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); },
      [&](std::size_t i) { return b(static_cast<Eigen::Index>(i)); });
  return substitute(p, forms);
}

ExactPolynomial compose_polynomial(const ExactPolynomial& p, const ExactAffineSymbol& symbol) {
  const std::size_t n = symbol.dimension();
  if (p.variables() != n) throw Error(ErrorCode::ShapeMismatch, "polynomial and symbol dimensions differ");
  auto forms = affine_forms<GaussianRational>(
      n, [&](std::size_t i, std::size_t j) { return symbol.a(i, j); },
      [&](std::size_t i) { return symbol.b(i); });
  return substitute(p, forms);
}

ComplexVector orthonormal_coordinates(const Polynomial& p, const GradedBasis& basis) {
  if (p.variables() != basis.variables()) throw Error(ErrorCode::ShapeMismatch, "polynomial and basis dimensions differ");
  ComplexVector x = ComplexVector::Zero(static_cast<Eigen::Index>(basis.size()));
  for (const auto& [gamma, c] : p.terms()) {
    const auto pos = basis.position(gamma);
    if (pos < 0) {
      throw Error(ErrorCode::ShapeMismatch, "term of degree " + std::to_string(gamma.degree()) +
                                                " lies outside the basis");
    }
    x(pos) = c * std::sqrt(basis.norm_squared(static_cast<std::size_t>(pos)));
  }
  return x;
}

Polynomial from_orthonormal_coordinates(const ComplexVector& x, const GradedBasis& basis) {
  if (static_cast<std::size_t>(x.size()) != basis.size()) throw Error(ErrorCode::ShapeMismatch, "coordinate vector length");
  Polynomial p(basis.variables());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    p.add_term(basis.index(k), x(static_cast<Eigen::Index>(k)) / std::sqrt(basis.norm_squared(k)));
  }
  return p;
}

TruncatedOperator build_truncation(const AffineSymbol& symbol, std::size_t max_degree, std::size_t cap) {
  GradedBasis basis(symbol.dimension(), max_degree, cap);
  const std::size_t n = symbol.dimension();
  const std::size_t dim = basis.size();
  const auto& a = symbol.matrix();
  const auto& b = symbol.translation();
  const auto parent = parent_table(basis);

  // z_j e_beta = sqrt(2 (beta_j + 1)) e_{beta + e_j}
  std::vector<double> raise_weight(dim * n, 0.0);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t j = 0; j < n; ++j) raise_weight[r * n + j] = std::sqrt(2.0 * (basis.index(r)[j] + 1));

  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m(0, 0) = 1.0;
  for (std::size_t k = 1; k < dim; ++k) {
    const MultiIndex& alpha = basis.index(k);
    const std::size_t i = split_coordinate(alpha);
    const auto ii = static_cast<Eigen::Index>(i);
    const double w = 1.0 / std::sqrt(2.0 * alpha[i]);
    const auto pk = static_cast<Eigen::Index>(parent[k]);
    const auto kk = static_cast<Eigen::Index>(k);
    const std::size_t rows = basis.shell_begin(alpha.degree());
    for (std::size_t r = 0; r < rows; ++r) {
      const Complex c = m(static_cast<Eigen::Index>(r), pk);
      if (c == Complex(0.0)) continue;
      m(static_cast<Eigen::Index>(r), kk) += w * b(ii) * c;
      for (std::size_t j = 0; j < n; ++j) {
        const auto up = static_cast<Eigen::Index>(basis.raise(r, j));
        m(up, kk) += w * a(ii, static_cast<Eigen::Index>(j)) * raise_weight[r * n + j] * c;
      }
    }
  }
  return TruncatedOperator{std::move(basis), std::move(m), symbol};
}

ExactTruncation build_exact_truncation(const ExactAffineSymbol& symbol, std::size_t max_degree, std::size_t cap) {
  GradedBasis basis(symbol.dimension(), max_degree, cap);
  const std::size_t n = symbol.dimension();
  const std::size_t dim = basis.size();
  const auto parent = parent_table(basis);

  std::vector<GaussianRational> c(dim * dim);
  c[0] = GaussianRational(1);
  for (std::size_t k = 1; k < dim; ++k) {
    const MultiIndex& alpha = basis.index(k);
    const std::size_t i = split_coordinate(alpha);
    const std::size_t rows = basis.shell_begin(alpha.degree());
    GaussianRational* col = &c[k * dim];
    const GaussianRational* src = &c[parent[k] * dim];
    for (std::size_t r = 0; r < rows; ++r) {
      if (src[r].is_zero()) continue;
      if (!symbol.b(i).is_zero()) col[r] += symbol.b(i) * src[r];
      for (std::size_t j = 0; j < n; ++j) {
        if (symbol.a(i, j).is_zero()) continue;
        col[static_cast<std::size_t>(basis.raise(r, j))] += symbol.a(i, j) * src[r];
      }
    }
  }
  return ExactTruncation{std::move(basis), std::move(c)};
}

ComplexMatrix ExactTruncation::to_matrix() const {
  const std::size_t dim = basis.size();
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t row = 0; row < dim; ++row) {
      const GaussianRational& v = coefficient(row, col);
      if (v.is_zero()) continue;
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          v.to_complex() * std::sqrt(basis.norm_squared(row) / basis.norm_squared(col));
    }
  }
  return m;
}

double truncated_norm(const TruncatedOperator& t) {
  return truncated_singular_values(t)(0);
}

std::vector<Complex> truncated_spectrum(const TruncatedOperator& t) {
  std::vector<Complex> values;
  values.reserve(t.basis.size());
  for (std::size_t d = 0; d <= t.basis.max_degree(); ++d) {
    const auto begin = static_cast<Eigen::Index>(t.basis.shell_begin(d));
    const auto size = static_cast<Eigen::Index>(t.basis.shell_begin(d + 1)) - begin;
    if (size == 1) {
      values.push_back(t.matrix(begin, begin));
      continue;
    }
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(t.matrix.block(begin, begin, size, size), false);
    for (Eigen::Index k = 0; k < size; ++k) values.push_back(solver.eigenvalues()(k));
  }
  sort_spectrally(values);
  return values;
}

RealVector truncated_singular_values(const TruncatedOperator& t) {
  Eigen::BDCSVD<ComplexMatrix> svd(t.matrix);
  return svd.singularValues();
}

double schatten_partial_sum(const RealVector& singular_values, double p) {
  double sum = 0.0;
  for (Eigen::Index k = 0; k < singular_values.size(); ++k) sum += std::pow(singular_values(k), p);
  return sum;
}

std::vector<double> column_norms_by_shell(const AffineSymbol& symbol, std::size_t max_degree, std::size_t cap) {
  const GradedBasis basis(symbol.dimension(), max_degree, cap);
  const std::size_t n = symbol.dimension();
  const auto& a = symbol.matrix();
  const auto& b = symbol.translation();

  std::vector<double> shells(max_degree + 1, 0.0);
  shells[0] = 1.0;
  // columns of the previous shell, each of length shell_begin(d)
  std::vector<ComplexVector> previous{ComplexVector::Ones(1)};
  for (std::size_t d = 1; d <= max_degree; ++d) {
    const std::size_t first = basis.shell_begin(d);
    const std::size_t count = basis.shell_begin(d + 1) - first;
    const std::size_t prev_first = basis.shell_begin(d - 1);
    std::vector<ComplexVector> current(count);
    for (std::size_t local = 0; local < count; ++local) {
      const MultiIndex& alpha = basis.index(first + local);
      const std::size_t i = split_coordinate(alpha);
      MultiIndex lower = alpha;
      lower[i] -= 1;
      const auto& src = previous[static_cast<std::size_t>(basis.position(lower)) - prev_first];
      const auto ii = static_cast<Eigen::Index>(i);
      const double w = 1.0 / std::sqrt(2.0 * alpha[i]);
      ComplexVector col = ComplexVector::Zero(static_cast<Eigen::Index>(first + count));
      for (std::size_t r = 0; r < first; ++r) {
        const Complex c = src(static_cast<Eigen::Index>(r));
        if (c == Complex(0.0)) continue;
        col(static_cast<Eigen::Index>(r)) += w * b(ii) * c;
        for (std::size_t j = 0; j < n; ++j) {
          const double lift = std::sqrt(2.0 * (basis.index(r)[j] + 1));
          col(static_cast<Eigen::Index>(basis.raise(r, j))) += w * a(ii, static_cast<Eigen::Index>(j)) * lift * c;
        }
      }
      shells[d] += col.squaredNorm();
      current[local] = std::move(col);
    }
    previous = std::move(current);
  }
  return shells;
}

double truncated_commutator_norm(const AffineSymbol& symbol, std::size_t max_degree) {
  if (symbol.translation().cwiseAbs().maxCoeff() != 0.0) {
    throw Error(ErrorCode::AdjointNotGraded,
                "the compressed commutator equals the true one only for B = 0");
  }
  const ComplexMatrix m = build_truncation(symbol, max_degree).matrix;
  return (m.adjoint() * m - m * m.adjoint()).norm();
}

Polynomial kernel_polynomial(const ComplexVector& w, std::size_t max_degree) {
  const std::size_t n = static_cast<std::size_t>(w.size());
  const auto cap = static_cast<unsigned>(max_degree);
  Polynomial k = Polynomial::constant(n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    // exp(z_j conj(w_j) / 2) as a power series in z_j
    Polynomial factor(n);
    Complex c = 1.0;
    const Complex step = std::conj(w(static_cast<Eigen::Index>(j))) / 2.0;
    MultiIndex g(n);
    for (unsigned e = 0; e <= cap; ++e) {
      g[j] = e;
      factor.add_term(g, c);
      c *= step / static_cast<double>(e + 1);
    }
    k = k.multiply(factor, cap);
  }
  return k;
}

ComplexMatrix truncated_adjoint_matrix(const AffineSymbol& symbol, std::size_t max_degree) {
  const GradedBasis basis(symbol.dimension(), max_degree);
  const AdjointSymbol adj = adjoint_symbol(symbol);
  const Polynomial weight = kernel_polynomial(adj.kernel_weight, max_degree);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix m(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    const Polynomial e = Polynomial::monomial(basis.index(kk), 1.0 / std::sqrt(basis.norm_squared(kk)));
    const Polynomial moved = compose_polynomial(e, adj.tau);
    m.col(k) = orthonormal_coordinates(weight.multiply(moved, static_cast<unsigned>(max_degree)), basis);
  }
  return m;
}

void write_matrix_csv(const ComplexMatrix& m, std::ostream& out) {
  out << "row,col,re,im\n";
  char buf[96];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%ld,%ld,%.17g,%.17g\n", static_cast<long>(r), static_cast<long>(c),
                    m(r, c).real(), m(r, c).imag());
      out << buf;
    }
  }
}

namespace {

constexpr std::array<char, 9> kMagic{'F', 'O', 'C', 'K', 'T', 'R', 'N', 'C', '1'};

void put_le(std::ostream& out, std::uint64_t bits, int bytes) {
  for (int i = 0; i < bytes; ++i) out.put(static_cast<char>((bits >> (8 * i)) & 0xFFU));
}

std::uint64_t get_le(std::istream& in, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw Error(ErrorCode::IoError, "truncated binary matrix");
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return v;
}

}  // namespace

void write_matrix_binary(const ComplexMatrix& m, std::ostream& out) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NonSquare, "binary dump expects a square matrix");
  out.write(kMagic.data(), kMagic.size());
  put_le(out, static_cast<std::uint64_t>(m.rows()), 4);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      put_le(out, std::bit_cast<std::uint64_t>(m(r, c).real()), 8);
      put_le(out, std::bit_cast<std::uint64_t>(m(r, c).imag()), 8);
    }
  }
  if (!out) throw Error(ErrorCode::IoError, "failed writing binary matrix");
}

ComplexMatrix read_matrix_binary(std::istream& in) {
  std::array<char, 9> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw Error(ErrorCode::ParseError, "missing FOCKTRNC1 header");
  const auto dim = static_cast<Eigen::Index>(get_le(in, 4));
  ComplexMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const double re = std::bit_cast<double>(get_le(in, 8));
      const double im = std::bit_cast<double>(get_le(in, 8));
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

}  // namespace fockop
