#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fockop/error.hpp"
#include "fockop/spectrum.hpp"
#include "fockop/truncation.hpp"
#include "oracles.hpp"

using namespace fockop;

namespace {

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

ComplexVector vec(std::initializer_list<Complex> v) {
  ComplexVector x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (auto c : v) x(i++) = c;
  return x;
}

std::vector<Complex> values(const SpectrumEnumeration& e) {
  std::vector<Complex> out;
  for (const auto& p : e.products) out.push_back(p.value);
  return out;
}

/// Every lambda^gamma with |gamma| <= N, with multiplicity.
std::vector<Complex> all_products(const std::vector<Complex>& lambda, unsigned N) {
  std::vector<Complex> out;
  for (const auto& g : oracle::graded_indices(lambda.size(), N)) {
    Complex v = 1.0;
    for (std::size_t i = 0; i < g.size(); ++i) v *= std::pow(lambda[i], static_cast<int>(g[i]));
    out.push_back(v);
  }
  return out;
}

const Complex kPhase = std::polar(1.0, 0.3);
const AffineSymbol kRotationBlock(mat2(kPhase, 0, 0, 0.5), vec({0, 1}));

}  // namespace

TEST(Eigenvalues, Examples) {
  const auto d = eigenvalues(mat2(0.5, 0, 0, 1.0 / 3));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_NEAR(std::abs(d[0] - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(d[1] - 1.0 / 3), 0.0, 1e-15);
  const auto r = eigenvalues(mat2(0, 1, -1, 0));
  EXPECT_NEAR(std::abs(r[0] - Complex(0, 1)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r[1] - Complex(0, -1)), 0.0, 1e-14);
  const auto z = eigenvalues(mat2(0, 1, 0, 0));
  EXPECT_EQ(z[0], Complex(0.0));
  EXPECT_EQ(z[1], Complex(0.0));
  EXPECT_THROW(eigenvalues(ComplexMatrix::Zero(2, 3)), Error);
}

TEST(EnumerateSpectrum, DiagonalContraction) {
  const auto e = enumerate_spectrum(AffineSymbol::linear(mat2(0.5, 0, 0, 1.0 / 3)), 2);
  EXPECT_LT(multiset_distance(values(e), {1.0, 0.5, 1.0 / 3, 0.25, 1.0 / 6, 1.0 / 9}), 1e-15);
  EXPECT_TRUE(e.closure_contains_zero);
  EXPECT_EQ(e.products.front().gamma, (MultiIndex{0, 0}));
  EXPECT_EQ(e.products.front().value, Complex(1.0));
}

TEST(EnumerateSpectrum, IdentityCollapsesToOne) {
  const auto e = enumerate_spectrum(AffineSymbol::identity(2), 5);
  ASSERT_EQ(e.products.size(), 1u);
  EXPECT_EQ(e.products[0].value, Complex(1.0));
  EXPECT_FALSE(e.closure_contains_zero);
}

TEST(EnumerateSpectrum, PowersOfI) {
  ComplexMatrix a(1, 1);
  a(0, 0) = Complex(0, 1);
  const auto e = enumerate_spectrum(AffineSymbol::linear(a), 4);
  EXPECT_LT(multiset_distance(values(e), {1.0, Complex(0, 1), -1.0, Complex(0, -1)}), 1e-14);
  EXPECT_FALSE(e.closure_contains_zero);
  EXPECT_THROW(enumerate_spectrum(AffineSymbol(mat2(1, 0, 0, 0.5), vec({1, 0})), 2), Error);
}

TEST(EnumerateSpectrum, NestedInDegree) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const AffineSymbol s = AffineSymbol::linear(oracle::random_normal(rng, 1 + trial % 3, 1.0));
    for (std::size_t m = 1; m < 4; ++m) {
      const auto small = enumerate_spectrum(s, m);
      const auto big = enumerate_spectrum(s, m + 1);
      for (const auto& p : small.products) {
        bool found = false;
        for (const auto& q : big.products) found = found || std::abs(p.value - q.value) <= kDefaultDedupTolerance;
        EXPECT_TRUE(found);
      }
      for (const auto& p : big.products)
        EXPECT_LE(std::abs(p.value), std::pow(s.matrix_norm(), p.gamma.degree()) + 1e-12);
    }
  }
}

TEST(EnumerateSpectrum, MatchesTruncationForLinearSymbols) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index n = 1 + trial % 3;
    const ComplexMatrix a = oracle::random_contraction(rng, n, 0.95);
    const unsigned N = 4;
    const auto lambda = eigenvalues(a);
    EXPECT_LT(multiset_distance(truncated_spectrum(build_truncation(AffineSymbol::linear(a), N)), all_products(lambda, N)),
              1e-7);
  }
}

TEST(EnumerateSpectrum, ProductsAreEigenvaluesWithTranslation) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 6; ++trial) {
    const auto rs = oracle::random_compact(rng, 2, 0.9, 1.0);
    const AffineSymbol s(rs.a, rs.b);
    const auto t = truncated_spectrum(build_truncation(s, 4));
    for (const auto& p : enumerate_spectrum(s, 4).products) {
      double best = INFINITY;
      for (auto v : t) best = std::min(best, std::abs(v - p.value));
      EXPECT_LT(best, 1e-6);
    }
  }
}

TEST(ConstructEigenfunction, RotationTimesTranslatedContraction) {
  const auto spec = construct_eigenfunction(kRotationBlock, MultiIndex{1}, MultiIndex{1});
  EXPECT_NEAR(std::abs(spec.eigenvalue - kPhase / 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(spec.c(0) - 2.0), 0.0, 1e-14);
  // F(w, v) = w (v - 2)
  EXPECT_NEAR(std::abs(spec.polynomial.coefficient(MultiIndex{1, 1}) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(spec.polynomial.coefficient(MultiIndex{1, 0}) + 2.0), 0.0, 1e-14);
  EXPECT_EQ(spec.polynomial.term_count(), 2u);
  EXPECT_LT(verify_eigenfunction(spec, kRotationBlock), 1e-12);
}

TEST(ConstructEigenfunction, ConstantFunction) {
  const auto spec = construct_eigenfunction(kRotationBlock, MultiIndex{0}, MultiIndex{0});
  EXPECT_EQ(spec.eigenvalue, Complex(1.0));
  EXPECT_EQ(spec.polynomial.degree(), 0u);
  EXPECT_EQ(verify_eigenfunction(spec, kRotationBlock), 0.0);
}

TEST(ConstructEigenfunction, CoordinateFunction) {
  const AffineSymbol s = AffineSymbol::linear(mat2(0.5, 0, 0, 1.0 / 3));
  const auto spec = construct_eigenfunction(s, MultiIndex{}, MultiIndex{1, 0});
  EXPECT_NEAR(std::abs(spec.eigenvalue - 0.5), 0.0, 1e-15);
  EXPECT_EQ(spec.polynomial.degree(), 1u);
  EXPECT_LT(verify_eigenfunction(spec, s), 1e-14);
}

TEST(ConstructEigenfunction, PerturbedEigenvalueIsDetected) {
  auto spec = construct_eigenfunction(kRotationBlock, MultiIndex{2}, MultiIndex{1});
  spec.eigenvalue += 0.1;
  EXPECT_GE(verify_eigenfunction(spec, kRotationBlock), 0.1 * spec.polynomial.max_coefficient_modulus() - 1e-12);
}

TEST(ConstructEigenfunction, RejectsBadInput) {
  try {
    construct_eigenfunction(AffineSymbol::linear(mat2(0, 1, 0, 0)), MultiIndex{}, MultiIndex{1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDiagonalizable);
  }
  EXPECT_THROW(construct_eigenfunction(AffineSymbol(mat2(1, 0, 0, 0.5), vec({1, 0})), MultiIndex{1}, MultiIndex{0}),
               Error);
}

TEST(ConstructEigenfunction, OriginalCoordinatesGiveTruncationEigenvector) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 5; ++trial) {
    const auto rs = oracle::random_bounded_noncompact(rng, 3);
    const AffineSymbol s(rs.a, rs.b);
    const auto form = block_schur_form(s);
    MultiIndex beta(form.unimodular);
    MultiIndex gamma(3 - form.unimodular);
    if (beta.size() > 0) beta[0] = 1;
    if (gamma.size() > 0) gamma[gamma.size() - 1] = 2;
    const auto spec = construct_eigenfunction(s, beta, gamma);
    ASSERT_LT(verify_eigenfunction(spec, s), 1e-9);
    const Polynomial f = eigenfunction_in_original_coordinates(spec);
    const auto t = build_truncation(s, f.degree());
    const ComplexVector x = orthonormal_coordinates(f, t.basis);
    EXPECT_LT((t.matrix * x - spec.eigenvalue * x).norm(), 1e-9 * x.norm());
  }
}

TEST(ExactEigenfunction, ResidualIsExactlyZero) {
  using GR = GaussianRational;
  const ExactAffineSymbol s(2, {GR(mpq_class(0), mpq_class(1)), GR(0L), GR(0L), GR(mpq_class(1, 2))}, {GR(0L), GR(1L)});
  for (unsigned b = 0; b <= 2; ++b)
    for (unsigned g = 0; g <= 3; ++g) {
      const auto spec = construct_exact_eigenfunction(s, MultiIndex{b}, MultiIndex{g});
      EXPECT_EQ(verify_exact_eigenfunction(spec, s), 0.0);
      EXPECT_EQ(spec.polynomial.degree(), b + g);
    }
  // 3x3 with an upper triangular contractive block
  const ExactAffineSymbol t(3,
                            {GR(-1L), GR(0L), GR(0L), GR(0L), GR(mpq_class(1, 2)), GR(1L), GR(0L), GR(0L),
                             GR(mpq_class(0), mpq_class(1, 3))},
                            {GR(0L), GR(mpq_class(1, 4)), GR(mpq_class(-1), mpq_class(1))});
  const auto spec = construct_exact_eigenfunction(t, MultiIndex{1}, MultiIndex{1, 2});
  EXPECT_EQ(verify_exact_eigenfunction(spec, t), 0.0);
  EXPECT_EQ(spec.eigenvalue, GR(-1L) * GR(mpq_class(1, 2)) * GR(mpq_class(0), mpq_class(1, 3)) *
                                 GR(mpq_class(0), mpq_class(1, 3)));
}

TEST(ExactEigenfunction, RejectsSymbolsOutsideBlockForm) {
  using GR = GaussianRational;
  const ExactAffineSymbol lower(2, {GR(mpq_class(1, 2)), GR(0L), GR(1L), GR(mpq_class(1, 3))}, {GR(0L), GR(0L)});
  try {
    construct_exact_eigenfunction(lower, MultiIndex{}, MultiIndex{1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInBlockForm);
  }
}

TEST(MultisetDistance, Basics) {
  EXPECT_EQ(multiset_distance({1.0, 2.0}, {2.0, 1.0}), 0.0);
  EXPECT_TRUE(std::isinf(multiset_distance({1.0}, {1.0, 1.0})));
  EXPECT_NEAR(multiset_distance({1.0, 1.0}, {1.0, 1.5}), 0.5, 1e-15);
}
