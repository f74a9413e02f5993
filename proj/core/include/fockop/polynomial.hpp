#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "fockop/error.hpp"
#include "fockop/gaussian_rational.hpp"
#include "fockop/linalg.hpp"
#include "fockop/multi_index.hpp"

namespace fockop {

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static bool is_zero(const Complex& c) { return c == Complex(0.0); }
  static double modulus(const Complex& c) { return std::abs(c); }
  static Complex to_complex(const Complex& c) { return c; }
};

template <>
struct ScalarTraits<GaussianRational> {
  static bool is_zero(const GaussianRational& c) { return c.is_zero(); }
  static double modulus(const GaussianRational& c) { return std::sqrt(c.norm_squared().get_d()); }
  static Complex to_complex(const GaussianRational& c) { return c.to_complex(); }
};

/// Sparse polynomial in n variables. Zero coefficients are never stored.
template <class Scalar>
class MultiPolynomial {
 public:
  using Terms = std::map<MultiIndex, Scalar>;

  explicit MultiPolynomial(std::size_t n) : n_(n) {}

  static MultiPolynomial constant(std::size_t n, const Scalar& c) {
    MultiPolynomial p(n);
    p.add_term(MultiIndex(n), c);
    return p;
  }
  static MultiPolynomial variable(std::size_t n, std::size_t i) {
    MultiPolynomial p(n);
    p.add_term(MultiIndex::unit(n, i), Scalar(1));
    return p;
  }
  static MultiPolynomial monomial(const MultiIndex& gamma, const Scalar& c) {
    MultiPolynomial p(gamma.size());
    p.add_term(gamma, c);
    return p;
  }

  std::size_t variables() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  unsigned degree() const {
    return terms_.empty() ? 0U : terms_.rbegin()->first.degree();
  }

  Scalar coefficient(const MultiIndex& gamma) const {
    auto it = terms_.find(gamma);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const MultiIndex& gamma, const Scalar& c) {
    if (gamma.size() != n_) throw Error(ErrorCode::ShapeMismatch, "term has wrong number of variables");
    if (ScalarTraits<Scalar>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(gamma, c);
    if (!inserted) {
      it->second += c;
      if (ScalarTraits<Scalar>::is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPolynomial& operator+=(const MultiPolynomial& o) {
    check_same(o);
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }
  MultiPolynomial& operator-=(const MultiPolynomial& o) {
    check_same(o);
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
  }
  MultiPolynomial& operator*=(const Scalar& s) {
    if (ScalarTraits<Scalar>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = ScalarTraits<Scalar>::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  /// Product, discarding every term of degree above max_degree.
  MultiPolynomial multiply(const MultiPolynomial& o, unsigned max_degree = ~0U) const {
    check_same(o);
    MultiPolynomial r(n_);
    for (const auto& [g1, c1] : terms_) {
      const unsigned d1 = g1.degree();
      for (const auto& [g2, c2] : o.terms_) {
        if (d1 + g2.degree() > max_degree) break;  // terms are degree-ordered
        r.add_term(g1 + g2, c1 * c2);
      }
    }
    return r;
  }

  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) { return a.multiply(b); }
  friend MultiPolynomial operator*(MultiPolynomial a, const Scalar& s) { return a *= s; }
  friend MultiPolynomial operator*(const Scalar& s, MultiPolynomial a) { return a *= s; }

  MultiPolynomial pow(unsigned k) const {
    MultiPolynomial r = constant(n_, Scalar(1));
    for (unsigned i = 0; i < k; ++i) r = r.multiply(*this);
    return r;
  }

  double max_coefficient_modulus() const {
    double m = 0.0;
    for (const auto& [g, c] : terms_) m = std::max(m, ScalarTraits<Scalar>::modulus(c));
    return m;
  }

  Complex evaluate(const ComplexVector& z) const {
    if (static_cast<std::size_t>(z.size()) != n_) throw Error(ErrorCode::ShapeMismatch, "evaluation point has wrong length");
    Complex sum(0.0);
    for (const auto& [g, c] : terms_) {
      Complex term = ScalarTraits<Scalar>::to_complex(c);
      for (std::size_t i = 0; i < n_; ++i)
        for (unsigned e = 0; e < g[i]; ++e) term *= z(static_cast<Eigen::Index>(i));
      sum += term;
    }
    return sum;
  }

  friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const MultiPolynomial& o) const {
    if (o.n_ != n_) throw Error(ErrorCode::ShapeMismatch, "polynomials in different numbers of variables");
  }

  std::size_t n_;
  Terms terms_;
};

using Polynomial = MultiPolynomial<Complex>;
using ExactPolynomial = MultiPolynomial<GaussianRational>;

/// Substitutes z_i -> forms[i] in p, where each form is a polynomial in the
/// same variables; the powers of each form are computed once and reused.
template <class Scalar>
MultiPolynomial<Scalar> substitute(const MultiPolynomial<Scalar>& p,
                                   const std::vector<MultiPolynomial<Scalar>>& forms,
                                   unsigned max_degree = ~0U) {
  if (forms.size() != p.variables()) throw Error(ErrorCode::ShapeMismatch, "one form per variable is required");
  const std::size_t m = forms.empty() ? 0 : forms.front().variables();
  std::vector<std::vector<MultiPolynomial<Scalar>>> powers(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) powers[i].push_back(MultiPolynomial<Scalar>::constant(m, Scalar(1)));

  MultiPolynomial<Scalar> result(m);
  for (const auto& [gamma, c] : p.terms()) {
    MultiPolynomial<Scalar> term = MultiPolynomial<Scalar>::constant(m, c);
    for (std::size_t i = 0; i < forms.size(); ++i) {
      auto& cache = powers[i];
      while (cache.size() <= gamma[i]) cache.push_back(cache.back().multiply(forms[i], max_degree));
      if (gamma[i] > 0) term = term.multiply(cache[gamma[i]], max_degree);
    }
    result += term;
  }
  return result;
}

}  // namespace fockop
