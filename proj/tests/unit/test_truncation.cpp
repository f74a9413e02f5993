#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fockop/error.hpp"
#include "fockop/linalg.hpp"
#include "fockop/truncation.hpp"
#include "oracles.hpp"

using namespace fockop;

namespace {

AffineSymbol scalar_symbol(Complex a, Complex b) {
  ComplexMatrix m(1, 1);
  m(0, 0) = a;
  ComplexVector v(1);
  v(0) = b;
  return {m, v};
}

AffineSymbol diag_symbol(std::initializer_list<Complex> d) {
  ComplexVector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (auto c : d) v(i++) = c;
  return AffineSymbol::linear(v.asDiagonal());
}

double multiset_gap(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (auto x : a) {
    auto best = b.begin();
    for (auto it = b.begin(); it != b.end(); ++it)
      if (std::abs(*it - x) < std::abs(*best - x)) best = it;
    worst = std::max(worst, std::abs(*best - x));
    b.erase(best);
  }
  return worst;
}

}  // namespace

TEST(BuildBasis, OneVariable) {
  const auto b = build_basis(1, 2);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b.norm_squared(0), 1.0);
  EXPECT_EQ(b.norm_squared(1), 2.0);
  EXPECT_EQ(b.norm_squared(2), 8.0);
  EXPECT_EQ(b.norm_squared_exact(2), 8);
}

TEST(BuildBasis, TwoVariablesGradedLex) {
  const auto b = build_basis(2, 1);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b.index(0), (MultiIndex{0, 0}));
  EXPECT_EQ(b.index(1), (MultiIndex{0, 1}));
  EXPECT_EQ(b.index(2), (MultiIndex{1, 0}));
  EXPECT_EQ(b.norm_squared(1), 2.0);
  EXPECT_EQ(b.norm_squared(2), 2.0);
}

TEST(BuildBasis, ConstantsOnly) {
  const auto b = build_basis(3, 0);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.norm_squared(0), 1.0);
}

TEST(BuildBasis, CountOrderAndNorms) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned N = 0; N <= 6; ++N) {
      const auto b = build_basis(n, N);
      const auto ref = oracle::graded_indices(n, N);
      ASSERT_EQ(b.size(), ref.size());
      EXPECT_EQ(b.size(), graded_count(n, N));
      for (std::size_t k = 0; k < ref.size(); ++k) {
        EXPECT_EQ(b.index(k).exponents(), ref[k]);
        EXPECT_NEAR(b.norm_squared(k), oracle::monomial_norm_sq(ref[k]), 1e-9 * oracle::monomial_norm_sq(ref[k]));
        EXPECT_EQ(b.position(b.index(k)), static_cast<std::ptrdiff_t>(k));
      }
    }
  }
}

TEST(BuildBasis, SizeOverflow) {
  try {
    build_basis(4, 40, 50000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeOverflow);
  }
  EXPECT_EQ(build_basis(1, 30, 31).size(), 31u);
  EXPECT_THROW(build_basis(1, 30, 30), Error);
}

TEST(BuildTruncation, HalfPlusOneDegreeOne) {
  const auto t = build_truncation(scalar_symbol(0.5, 1.0), 1);
  ASSERT_EQ(t.matrix.rows(), 2);
  EXPECT_NEAR(std::abs(t.matrix(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.matrix(0, 1) - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.matrix(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.matrix(1, 1) - 0.5), 0.0, 1e-15);
}

TEST(BuildTruncation, LinearScalarIsDiagonal) {
  const Complex a(0.3, -0.4);
  const auto t = build_truncation(scalar_symbol(a, 0.0), 6);
  for (Eigen::Index i = 0; i < 7; ++i)
    for (Eigen::Index j = 0; j < 7; ++j)
      EXPECT_NEAR(std::abs(t.matrix(i, j) - (i == j ? std::pow(a, static_cast<int>(i)) : Complex(0.0))), 0.0, 1e-15);
}

TEST(BuildTruncation, IdentitySymbol) {
  const auto t = build_truncation(AffineSymbol::identity(3), 4);
  EXPECT_LT((t.matrix - ComplexMatrix::Identity(t.matrix.rows(), t.matrix.cols())).norm(), 1e-15);
}

TEST(BuildTruncation, MatchesBruteForceExpansion) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 1 + trial % 3;
    const unsigned N = n == 1 ? 12 : (n == 2 ? 6 : 4);
    const ComplexMatrix a = oracle::random_gaussian(rng, n, n);
    const ComplexVector b = oracle::random_vector(rng, n);
    const auto t = build_truncation(AffineSymbol(a, b), N);
    const ComplexMatrix ref = oracle::brute_force_truncation(a, b, N);
    const double scale = std::max(1.0, ref.cwiseAbs().maxCoeff());
    EXPECT_LT((t.matrix - ref).cwiseAbs().maxCoeff(), 1e-12 * scale);
  }
}

TEST(BuildTruncation, BlockUpperTriangular) {
  std::mt19937_64 rng(4);
  const ComplexMatrix a = oracle::random_gaussian(rng, 2, 2);
  const ComplexVector b = oracle::random_vector(rng, 2);
  const auto t = build_truncation(AffineSymbol(a, b), 5);
  for (std::size_t r = 0; r < t.basis.size(); ++r)
    for (std::size_t c = 0; c < t.basis.size(); ++c)
      if (t.basis.index(r).degree() > t.basis.index(c).degree())
        EXPECT_EQ(t.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)), Complex(0.0));
}

TEST(BuildTruncation, ExactRestrictionOfPolynomials) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index n = 1 + trial % 3;
    const unsigned N = 5;
    const AffineSymbol s(oracle::random_gaussian(rng, n, n), oracle::random_vector(rng, n));
    const auto t = build_truncation(s, N);
    Polynomial p(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < t.basis.size(); ++k) p.add_term(t.basis.index(k), Complex(g(rng), g(rng)));
    const ComplexVector lhs = orthonormal_coordinates(compose_polynomial(p, s), t.basis);
    const ComplexVector rhs = t.matrix * orthonormal_coordinates(p, t.basis);
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12 * std::max(1.0, rhs.cwiseAbs().maxCoeff()));
  }
}

TEST(Coordinates, RoundTripAndCapViolation) {
  const auto basis = build_basis(2, 3);
  auto p = Polynomial::monomial(MultiIndex{1, 2}, Complex(2, -1));
  p += Polynomial::constant(2, 0.5);
  const ComplexVector x = orthonormal_coordinates(p, basis);
  EXPECT_NEAR(std::abs(x(basis.position(MultiIndex{1, 2})) - Complex(2, -1) * std::sqrt(16.0)), 0.0, 1e-14);
  const auto back = from_orthonormal_coordinates(x, basis);
  EXPECT_LT((back - p).max_coefficient_modulus(), 1e-14);
  EXPECT_THROW(orthonormal_coordinates(Polynomial::monomial(MultiIndex{4, 0}, 1.0), basis), Error);
}

TEST(TruncatedNorm, Examples) {
  EXPECT_NEAR(truncated_norm(build_truncation(AffineSymbol::identity(2), 5)), 1.0, 1e-14);
  // largest singular value of [[1, 1/sqrt 2], [0, 1/2]]
  const double s = truncated_norm(build_truncation(scalar_symbol(0.5, 1.0), 1));
  const double tr = 1.0 + 0.5 + 0.25;
  const double det = 0.5;
  EXPECT_NEAR(s, std::sqrt((tr + std::sqrt(tr * tr - 4 * det * det)) / 2), 1e-14);
  EXPECT_LE(s, std::exp(1.0 / 3.0));
  EXPECT_NEAR(truncated_norm(build_truncation(scalar_symbol(0.5, 1.0), 30)), std::exp(1.0 / 3.0), 1e-6);
}

TEST(TruncatedNorm, NondecreasingInDegree) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 6; ++trial) {
    const Eigen::Index n = 1 + trial % 2;
    const auto rs = oracle::random_compact(rng, n, 0.9, 1.0);
    const AffineSymbol s(rs.a, rs.b);
    double prev = 0.0;
    for (unsigned N = 0; N <= (n == 1 ? 20u : 8u); ++N) {
      const double v = truncated_norm(build_truncation(s, N));
      EXPECT_GE(v, prev - 1e-12);
      prev = v;
    }
  }
}

TEST(TruncatedSpectrum, Examples) {
  const auto d = truncated_spectrum(build_truncation(diag_symbol({0.5, 1.0 / 3}), 2));
  EXPECT_LT(multiset_gap(d, {1.0, 0.5, 1.0 / 3, 0.25, 1.0 / 6, 1.0 / 9}), 1e-14);
  const auto e = truncated_spectrum(build_truncation(scalar_symbol(0.5, 1.0), 2));
  EXPECT_LT(multiset_gap(e, {1.0, 0.5, 0.25}), 1e-14);
  const auto id = truncated_spectrum(build_truncation(AffineSymbol::identity(2), 3));
  EXPECT_EQ(id.size(), 10u);
  for (auto v : id) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-14);
}

TEST(TruncatedSpectrum, AgreesWithDenseEigensolver) {
  std::mt19937_64 rng(6);
  const auto rs = oracle::random_compact(rng, 2, 0.9, 1.0);
  const auto t = build_truncation(AffineSymbol(rs.a, rs.b), 4);
  Eigen::ComplexEigenSolver<ComplexMatrix> es(t.matrix);
  std::vector<Complex> dense(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  EXPECT_LT(multiset_gap(truncated_spectrum(t), dense), 1e-8);
}

TEST(TruncatedSingularValues, Examples) {
  const auto sv = truncated_singular_values(build_truncation(scalar_symbol(0.5, 0.0), 3));
  ASSERT_EQ(sv.size(), 4);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(sv(k), std::pow(0.5, k), 1e-15);
  EXPECT_NEAR(schatten_partial_sum(truncated_singular_values(build_truncation(scalar_symbol(0.5, 0.0), 30)), 2.0),
              4.0 / 3.0, 1e-15);
  ComplexMatrix rot(2, 2);
  rot << 0, 1, -1, 0;
  for (double v : truncated_singular_values(build_truncation(AffineSymbol::linear(rot), 4))) EXPECT_NEAR(v, 1.0, 1e-14);
}

TEST(ColumnNorms, SumToFrobenius) {
  std::mt19937_64 rng(31);
  const auto rs = oracle::random_compact(rng, 2, 0.9, 1.0);
  const AffineSymbol s(rs.a, rs.b);
  const auto shells = column_norms_by_shell(s, 6);
  ASSERT_EQ(shells.size(), 7u);
  double total = 0.0;
  for (double v : shells) total += v;
  EXPECT_NEAR(total, build_truncation(s, 6).matrix.squaredNorm(), 1e-12 * total);
}

TEST(CommutatorNorm, Examples) {
  ComplexMatrix nil(2, 2);
  nil << 0, 1, 0, 0;
  EXPECT_GT(truncated_commutator_norm(AffineSymbol::linear(nil), 4), 0.1);
  EXPECT_EQ(truncated_commutator_norm(AffineSymbol::linear(ComplexMatrix::Zero(2, 2)), 4), 0.0);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial)
    EXPECT_LT(truncated_commutator_norm(AffineSymbol::linear(oracle::random_normal(rng, 2, 1.0)), 5), 1e-10);
  try {
    truncated_commutator_norm(scalar_symbol(0.5, 1.0), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AdjointNotGraded);
  }
}

TEST(AdjointMatrix, EqualsConjugateTransposeOnFixtures) {
  for (const auto& path : testing_support::fixture_files(FOCKOP_FIXTURE_DIR)) {
    const auto doc = testing_support::load(path);
    const AffineSymbol s = doc.symbol();
    const std::size_t N = s.dimension() == 1 ? 10 : (s.dimension() == 2 ? 6 : 4);
    const ComplexMatrix m = build_truncation(s, N).matrix;
    const ComplexMatrix adj = truncated_adjoint_matrix(s, N);
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    EXPECT_LT((adj - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12 * scale) << path;
  }
}

TEST(KernelPolynomial, EvaluatesToExponential) {
  ComplexVector w(2);
  w << Complex(0.3, 0.1), Complex(-0.2, 0.4);
  ComplexVector z(2);
  z << Complex(0.5, -0.5), Complex(0.1, 0.2);
  const auto k = kernel_polynomial(w, 25);
  EXPECT_NEAR(std::abs(k.evaluate(z) - std::exp(inner(z, w) / 2.0)), 0.0, 1e-14);
}

TEST(MatrixDump, CsvLayout) {
  const auto t = build_truncation(scalar_symbol(0.5, 1.0), 1);
  std::ostringstream out;
  write_matrix_csv(t.matrix, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "row,col,re,im");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 4);
  EXPECT_NE(out.str().find("0,1,0.707106781186547"), std::string::npos);
}

TEST(MatrixDump, BinaryRoundTrip) {
  std::mt19937_64 rng(1);
  const ComplexMatrix m = oracle::random_gaussian(rng, 5, 5);
  std::stringstream buf;
  write_matrix_binary(m, buf);
  const std::string bytes = buf.str();
  EXPECT_EQ(bytes.substr(0, 9), "FOCKTRNC1");
  EXPECT_EQ(bytes.size(), 9u + 4u + 25u * 16u);
  EXPECT_EQ(static_cast<unsigned char>(bytes[9]), 5u);
  EXPECT_EQ(read_matrix_binary(buf), m);
  std::istringstream bad("FOCKTRNC2....");
  EXPECT_THROW(read_matrix_binary(bad), Error);
}
