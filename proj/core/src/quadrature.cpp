#include "fockop/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "fockop/error.hpp"

namespace fockop {

GaussHermiteRule gauss_hermite(std::size_t order) {
  if (order == 0) throw Error(ErrorCode::ShapeMismatch, "quadrature order must be positive");
  const std::size_t n = order;
  const double nd = static_cast<double>(n);
  GaussHermiteRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);

  // Newton on the orthonormal Hermite recurrence, largest root first; the
  // starting guesses are the usual asymptotic ones.
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  double x = 0.0;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    if (i == 0) {
      x = std::sqrt(2.0 * nd + 1.0) - 1.85575 * std::pow(2.0 * nd + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      x -= 1.14 * std::pow(nd, 0.426) / x;
    } else if (i == 2) {
      x = 1.86 * x - 0.86 * rule.nodes[0];
    } else if (i == 3) {
      x = 1.91 * x - 0.91 * rule.nodes[1];
    } else {
      x = 2.0 * x - rule.nodes[i - 2];
    }
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4;
      double p2 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        const double jd = static_cast<double>(j);
        p1 = x * std::sqrt(2.0 / jd) * p2 - std::sqrt((jd - 1.0) / jd) * p3;
      }
      pp = std::sqrt(2.0 * nd) * p2;
      const double step = p1 / pp;
      x -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes[i] = x;
    rule.nodes[n - 1 - i] = -x;
    rule.weights[i] = 2.0 / (pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

}  // namespace fockop
