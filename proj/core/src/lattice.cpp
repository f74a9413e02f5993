#include "fockop/lattice.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "fockop/error.hpp"

namespace fockop {

namespace {

using Real = long double;
__extension__ using Wide = __int128;

struct GramSchmidt {
  std::vector<std::vector<Real>> mu;
  std::vector<Real> norm_sq;
};

Real dot(const std::vector<Real>& a, const std::vector<Real>& b) {
  Real s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

GramSchmidt orthogonalize(const IntegerBasis& basis) {
  const std::size_t m = basis.size();
  const std::size_t d = m == 0 ? 0 : basis[0].size();
  std::vector<std::vector<Real>> star(m, std::vector<Real>(d));
  GramSchmidt gs{std::vector<std::vector<Real>>(m, std::vector<Real>(m, 0)), std::vector<Real>(m, 0)};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Real> b(d);
    for (std::size_t k = 0; k < d; ++k) b[k] = static_cast<Real>(basis[i][k]);
    star[i] = b;
    for (std::size_t j = 0; j < i; ++j) {
      gs.mu[i][j] = gs.norm_sq[j] > 0 ? dot(b, star[j]) / gs.norm_sq[j] : 0;
      for (std::size_t k = 0; k < d; ++k) star[i][k] -= gs.mu[i][j] * star[j][k];
    }
    gs.norm_sq[i] = dot(star[i], star[i]);
  }
  return gs;
}

void subtract_multiple(std::vector<std::int64_t>& row, const std::vector<std::int64_t>& other, std::int64_t q) {
  for (std::size_t k = 0; k < row.size(); ++k) {
    const Wide v = static_cast<Wide>(row[k]) - static_cast<Wide>(q) * other[k];
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorCode::SizeOverflow, "lattice entry overflows 64 bits");
    }
    row[k] = static_cast<std::int64_t>(v);
  }
}

}  // namespace

void lll_reduce(IntegerBasis& basis, double delta) {
  const std::size_t m = basis.size();
  if (m < 2) return;
  GramSchmidt gs = orthogonalize(basis);
  std::size_t k = 1;
  std::size_t guard = 0;
  while (k < m) {
    if (++guard > 1000000) throw Error(ErrorCode::Inconsistent, "LLL failed to terminate");
    for (std::size_t j = k; j-- > 0;) {
      const Real q = std::round(gs.mu[k][j]);
      if (q != 0) {
        subtract_multiple(basis[k], basis[j], static_cast<std::int64_t>(q));
        gs = orthogonalize(basis);
      }
    }
    const Real lhs = gs.norm_sq[k];
    const Real rhs = (static_cast<Real>(delta) - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm_sq[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      gs = orthogonalize(basis);
      k = k > 1 ? k - 1 : 1;
    }
  }
}

}  // namespace fockop
