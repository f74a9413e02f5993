#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace fockop {

/// Exponent vector gamma in N^n. Ordered graded-lexicographically: by total
/// degree first, then lexicographically.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
  MultiIndex(std::initializer_list<unsigned> exps) : exps_(exps) {}
  explicit MultiIndex(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static MultiIndex unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  unsigned degree() const noexcept;
  const std::vector<unsigned>& exponents() const noexcept { return exps_; }

  MultiIndex operator+(const MultiIndex& o) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<unsigned> exps_;
};

/// Number of exponent vectors in N^n of degree <= max_degree, saturating at
/// UINT64_MAX.
std::uint64_t graded_count(std::size_t n, std::size_t max_degree);

/// All exponent vectors of total degree exactly d, lexicographically ascending.
std::vector<MultiIndex> indices_of_degree(std::size_t n, unsigned d);

inline constexpr std::size_t kDefaultDimensionCap = 50000;

/// Monomial basis {z^gamma : |gamma| <= N} of the polynomial subspace, in
/// graded-lex order, with the Fock norms ||z^gamma||^2 = gamma! 2^|gamma|.
class GradedBasis {
 public:
  GradedBasis(std::size_t n, std::size_t max_degree, std::size_t cap = kDefaultDimensionCap);

  std::size_t variables() const noexcept { return n_; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t size() const noexcept { return indices_.size(); }

  const MultiIndex& index(std::size_t k) const { return indices_[k]; }
  const std::vector<MultiIndex>& indices() const noexcept { return indices_; }
  /// Position of gamma, or -1 if |gamma| > N or the length is wrong.
  std::ptrdiff_t position(const MultiIndex& gamma) const;

  /// Offset of the first index of degree d; shell_begin(N + 1) == size().
  std::size_t shell_begin(std::size_t d) const { return shells_[d]; }

  /// Position of gamma_k + e_j, or -1 when that exceeds the degree cap.
  std::ptrdiff_t raise(std::size_t k, std::size_t j) const { return raise_[k * n_ + j]; }

  double norm_squared(std::size_t k) const { return norm_sq_[k]; }
  mpz_class norm_squared_exact(std::size_t k) const;

 private:
  std::size_t n_;
  std::size_t max_degree_;
  std::vector<MultiIndex> indices_;
  std::vector<std::size_t> shells_;
  std::map<MultiIndex, std::size_t> lookup_;
  std::vector<std::ptrdiff_t> raise_;
  std::vector<double> norm_sq_;
};

GradedBasis build_basis(std::size_t n, std::size_t max_degree, std::size_t cap = kDefaultDimensionCap);

}  // namespace fockop
