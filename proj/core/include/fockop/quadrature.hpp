#pragma once

#include <cstddef>
#include <vector>

namespace fockop {

/// Nodes and weights with sum_k w_k f(x_k) ~ int_R exp(-x^2) f(x) dx,
/// exact for polynomials of degree < 2 * order.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussHermiteRule gauss_hermite(std::size_t order);

}  // namespace fockop
