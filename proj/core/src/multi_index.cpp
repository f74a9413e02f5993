#include "fockop/multi_index.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "fockop/error.hpp"

namespace fockop {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  MultiIndex m(n);
  m.exps_[i] = 1;
  return m;
}

unsigned MultiIndex::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0U);
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (o.size() != size()) throw Error(ErrorCode::ShapeMismatch, "multi-index length mismatch");
  MultiIndex r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exps_ <=> b.exps_;
}

std::uint64_t graded_count(std::size_t n, std::size_t max_degree) {
  // binomial(N + n, n) built incrementally; each partial value is itself a
  // binomial coefficient, so the division is exact
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  __extension__ using Wide = unsigned __int128;
  Wide c = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    c = c * (max_degree + k) / k;
    if (c > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(c);
}

namespace {

void fill_degree(std::size_t pos, unsigned remaining, std::vector<unsigned>& current,
                 std::vector<MultiIndex>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.emplace_back(current);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    current[pos] = e;
    fill_degree(pos + 1, remaining - e, current, out);
  }
}

}  // namespace

std::vector<MultiIndex> indices_of_degree(std::size_t n, unsigned d) {
  std::vector<MultiIndex> out;
  if (n == 0) return out;
  std::vector<unsigned> current(n, 0);
  fill_degree(0, d, current, out);
  return out;
}

GradedBasis::GradedBasis(std::size_t n, std::size_t max_degree, std::size_t cap)
    : n_(n), max_degree_(max_degree) {
  if (n == 0) throw Error(ErrorCode::ShapeMismatch, "basis dimension must be positive");
  const std::uint64_t count = graded_count(n, max_degree);
  if (count > cap) {
    throw Error(ErrorCode::SizeOverflow, "basis of n=" + std::to_string(n) + ", N=" +
                                             std::to_string(max_degree) + " has " +
                                             std::to_string(count) + " elements (cap " +
                                             std::to_string(cap) + ")");
  }
  indices_.reserve(count);
  shells_.reserve(max_degree + 2);
  for (std::size_t d = 0; d <= max_degree; ++d) {
    shells_.push_back(indices_.size());
    auto shell = indices_of_degree(n, static_cast<unsigned>(d));
    indices_.insert(indices_.end(), shell.begin(), shell.end());
  }
  shells_.push_back(indices_.size());

  for (std::size_t k = 0; k < indices_.size(); ++k) lookup_.emplace(indices_[k], k);

  raise_.assign(indices_.size() * n, -1);
  for (std::size_t k = 0; k < shells_[max_degree]; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      MultiIndex up = indices_[k];
      up[j] += 1;
      raise_[k * n + j] = static_cast<std::ptrdiff_t>(lookup_.at(up));
    }
  }

  // ||z^gamma||^2 = prod_i gamma_i! 2^gamma_i, built from the lower neighbour
  norm_sq_.assign(indices_.size(), 1.0);
  for (std::size_t k = 0; k < shells_[max_degree]; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto up = static_cast<std::size_t>(raise_[k * n + j]);
      norm_sq_[up] = norm_sq_[k] * 2.0 * (indices_[k][j] + 1);
    }
  }
}

std::ptrdiff_t GradedBasis::position(const MultiIndex& gamma) const {
  if (gamma.size() != n_) return -1;
  auto it = lookup_.find(gamma);
  return it == lookup_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

mpz_class GradedBasis::norm_squared_exact(std::size_t k) const {
  mpz_class r = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), indices_[k][i]);
    r *= f;
  }
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, indices_[k].degree());
  return r * p;
}

GradedBasis build_basis(std::size_t n, std::size_t max_degree, std::size_t cap) {
  return GradedBasis(n, max_degree, cap);
}

}  // namespace fockop
