#include "fockop/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fockop/error.hpp"
#include "fockop/quadrature.hpp"
#include "fockop/truncation.hpp"

namespace fockop {

BoundednessVerdict check_bounded(const AffineSymbol& symbol, double tol_unit) {
  BoundednessVerdict v;
  v.norm_a = symbol.matrix_norm();
  if (v.norm_a > 1.0 + tol_unit) return v;

  // S = span of right singular vectors with sigma ~ 1. For zeta = v_k,
  // <A v_k, B> = sigma_k conj(u_k^* B), so only the left coordinates of B
  // on those directions matter.
  const auto& sigma = symbol.singular_values();
  const auto& u = symbol.left_singular_vectors();
  const auto& w = symbol.right_singular_vectors();
  const ComplexVector coords = u.adjoint() * symbol.translation();
  Eigen::Index s = 0;
  while (s < sigma.size() && sigma(s) >= 1.0 - tol_unit) ++s;
  const ComplexVector c = coords.head(s);
  const double scale = std::max(1.0, symbol.translation().norm());
  if (c.norm() <= tol_unit * scale) {
    v.bounded = true;
    return v;
  }
  // zeta = sum_k c_k v_k gives <A zeta, B> = sum_k sigma_k |c_k|^2 > 0
  ComplexVector zeta = w.leftCols(s) * c;
  v.witness = normalize_phase(zeta / zeta.norm());
  return v;
}

bool check_compact(const AffineSymbol& symbol, double tol_unit) {
  return symbol.matrix_norm() < 1.0 - tol_unit;
}

namespace {

void require_bounded(const AffineSymbol& symbol, double tol_unit, const char* what) {
  if (!check_bounded(symbol, tol_unit).bounded) {
    throw Error(ErrorCode::NotBounded, std::string(what) + " requires a bounded composition operator");
  }
}

void require_compact(const AffineSymbol& symbol, double tol_unit, const char* what) {
  if (!check_compact(symbol, tol_unit)) {
    throw Error(ErrorCode::NotCompact, std::string(what) + " requires ||A|| < 1");
  }
}

double norm_exponent(const AffineSymbol& symbol, const ComplexVector& z0) {
  return 0.25 * (z0.squaredNorm() - (symbol.matrix() * z0).squaredNorm() + symbol.translation().squaredNorm());
}

}  // namespace

ComplexVector solve_z0(const AffineSymbol& symbol, double tol_unit) {
  require_bounded(symbol, tol_unit, "solve_z0");
  // I - A^*A = W diag(1 - sigma^2) W^* and A^*B = W diag(sigma) U^*B
  const auto& sigma = symbol.singular_values();
  const ComplexVector coords = symbol.left_singular_vectors().adjoint() * symbol.translation();
  ComplexVector y = ComplexVector::Zero(coords.size());
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) < 1.0 - tol_unit) y(k) = coords(k) * (sigma(k) / (1.0 - sigma(k) * sigma(k)));
  }
  ComplexVector z0 = symbol.right_singular_vectors() * y;

  const auto& a = symbol.matrix();
  const ComplexVector rhs = a.adjoint() * symbol.translation();
  const double residual = (z0 - a.adjoint() * (a * z0) - rhs).norm();
  const double allowed = std::max(1e-10, 2.0 * tol_unit) * std::max(1.0, symbol.translation().norm());
  if (residual > allowed) {
    throw Error(ErrorCode::Inconsistent, "z0 residual " + std::to_string(residual) + " exceeds " +
                                             std::to_string(allowed));
  }
  return z0;
}

double operator_norm(const AffineSymbol& symbol, double tol_unit) {
  const ComplexVector z0 = solve_z0(symbol, tol_unit);
  const double e = norm_exponent(symbol, z0);
  if (e < -1e-12) {
    throw Error(ErrorCode::IdentityViolation, "negative norm exponent " + std::to_string(e));
  }
  return std::exp(std::max(e, 0.0));
}

EssentialNormCertificate essential_norm_certificate(const AffineSymbol& symbol, double tol_unit) {
  const ComplexVector z0 = solve_z0(symbol, tol_unit);
  EssentialNormCertificate cert;
  cert.compact = check_compact(symbol, tol_unit);
  cert.norm_expression = std::exp(norm_exponent(symbol, z0));
  const Complex pairing = inner(symbol(z0), symbol.translation());
  cert.pairing_expression = std::exp(0.25 * pairing.real());
  cert.pairing_imag = pairing.imag();
  if (cert.compact) {
    cert.value = 0.0;
    return cert;
  }
  const double scale = std::max(1.0, symbol(z0).norm() * symbol.translation().norm());
  if (std::abs(cert.pairing_imag) >= 1e-9 * scale) {
    throw Error(ErrorCode::IdentityViolation,
                "Im<phi(z0), B> = " + std::to_string(cert.pairing_imag) + " is not negligible");
  }
  const double rel = std::abs(cert.norm_expression - cert.pairing_expression) / cert.norm_expression;
  if (rel > 1e-9) {
    throw Error(ErrorCode::IdentityViolation,
                "essential norm expressions disagree (relative gap " + std::to_string(rel) + ")");
  }
  cert.value = cert.norm_expression;
  return cert;
}

double essential_norm(const AffineSymbol& symbol, double tol_unit) {
  return essential_norm_certificate(symbol, tol_unit).value;
}

bool check_normal(const AffineSymbol& symbol, double tol) {
  require_bounded(symbol, kUnitTolerance, "check_normal");
  const auto& a = symbol.matrix();
  return symbol.translation().norm() < tol && (a * a.adjoint() - a.adjoint() * a).norm() < tol;
}

bool check_hyponormal(const AffineSymbol& symbol, double tol) {
  return check_normal(symbol, tol);
}

bool check_essentially_normal(const AffineSymbol& symbol, double tol) {
  require_bounded(symbol, kUnitTolerance, "check_essentially_normal");
  return check_compact(symbol) || check_normal(symbol, tol);
}

double berezin_transform(const AffineSymbol& symbol, const ComplexVector& z, double tol_unit) {
  require_compact(symbol, tol_unit, "berezin_transform");
  if (z.size() != symbol.translation().size()) throw Error(ErrorCode::ShapeMismatch, "point has wrong length");
  const double exponent = -0.5 * z.squaredNorm() + inner(symbol.translation(), z).real() +
                          0.5 * (symbol.matrix().adjoint() * z).squaredNorm();
  return std::exp(exponent);
}

double adjoint_kernel_ratio(const AffineSymbol& symbol, const ComplexVector& z, double tol_unit) {
  require_bounded(symbol, tol_unit, "adjoint_kernel_ratio");
  if (z.size() != symbol.translation().size()) throw Error(ErrorCode::ShapeMismatch, "point has wrong length");
  return std::exp(0.25 * (symbol(z).squaredNorm() - z.squaredNorm()));
}

namespace {

// x^T R x = z^* H z for x = (Re z, Im z).
Eigen::MatrixXd real_form(const ComplexMatrix& h) {
  const Eigen::Index n = h.rows();
  Eigen::MatrixXd r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = h.real();
  r.topRightCorner(n, n) = -h.imag();
  r.bottomLeftCorner(n, n) = h.imag();
  r.bottomRightCorner(n, n) = h.real();
  return 0.5 * (r + r.transpose());
}

// Re(w^* z) = g^T x.
Eigen::VectorXd real_linear(const ComplexVector& w) {
  Eigen::VectorXd g(2 * w.size());
  g << w.real(), w.imag();
  return g;
}

struct GaussianExponent {
  Eigen::MatrixXd q;  // integrand exp(-x^T q x + g^T x + c)
  Eigen::VectorXd g;
  double c = 0.0;
};

// Tensor Gauss-Hermite on the principal axes of q. Each axis is shifted to
// the stationary point and rescaled; a non-positive axis is left unscaled so
// that growth under refinement exposes the divergence.
class AxisQuadrature {
 public:
  explicit AxisQuadrature(const GaussianExponent& e) : c_(e.c) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(e.q);
    lambda_ = eig.eigenvalues();
    g_ = eig.eigenvectors().transpose() * e.g;
  }

  double estimate(const GaussHermiteRule& rule) const {
    double log_total = c_;
    for (Eigen::Index k = 0; k < lambda_.size(); ++k) {
      const double lam = lambda_(k);
      const double g = g_(k);
      double shift = 0.0;
      double scale = 1.0;
      if (lam > 0.0) {
        shift = g / (2.0 * lam);
        scale = std::sqrt(2.0 / lam);
      }
      double sum = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = rule.nodes[i];
        const double t = shift + scale * u;
        sum += rule.weights[i] * std::exp(u * u - lam * t * t + g * t);
      }
      log_total += std::log(scale * sum);
    }
    return std::exp(log_total);
  }

 private:
  double c_;
  Eigen::VectorXd lambda_;
  Eigen::VectorXd g_;
};

}  // namespace

SchattenIntegrals schatten_integrals(const AffineSymbol& symbol, double p, const QuadratureSpec& spec,
                                     double tol_unit) {
  require_compact(symbol, tol_unit, "schatten_integrals");
  if (!(p > 0.0)) throw Error(ErrorCode::ShapeMismatch, "p must be positive");
  if (spec.orders.empty()) throw Error(ErrorCode::ShapeMismatch, "no quadrature orders given");
  const auto n = static_cast<Eigen::Index>(symbol.dimension());
  const auto& a = symbol.matrix();
  const auto& b = symbol.translation();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);

  // ||C_phi k_z||^p = exp(-(p/4) z^*(I - AA^*)z + (p/2) Re<B, z>)
  const GaussianExponent forward{(p / 4.0) * real_form(id - a * a.adjoint()), (p / 2.0) * real_linear(b), 0.0};
  // ||C_phi^* k_z||^p = exp(-(p/4) z^*(I - A^*A)z + (p/2) Re<z, A^*B> + (p/4)|B|^2)
  const GaussianExponent backward{(p / 4.0) * real_form(id - a.adjoint() * a),
                                  (p / 2.0) * real_linear(a.adjoint() * b), (p / 4.0) * b.squaredNorm()};
  const AxisQuadrature qf(forward);
  const AxisQuadrature qb(backward);

  SchattenIntegrals out;
  double prev_f = 0.0;
  double prev_b = 0.0;
  for (std::size_t level = 0; level < spec.orders.size(); ++level) {
    const GaussHermiteRule rule = gauss_hermite(spec.orders[level]);
    const double f = qf.estimate(rule);
    const double bk = qb.estimate(rule);
    if (!std::isfinite(f) || !std::isfinite(bk)) {
      throw Error(ErrorCode::QuadratureDivergence, "non-finite quadrature estimate");
    }
    out.int_cphi = f;
    out.int_cphi_star = bk;
    out.order_used = spec.orders[level];
    if (level > 0) {
      if (f > (1.0 + spec.growth_limit) * prev_f || bk > (1.0 + spec.growth_limit) * prev_b) {
        throw Error(ErrorCode::QuadratureDivergence,
                    "estimates grew by more than " + std::to_string(spec.growth_limit * 100) +
                        "% at order " + std::to_string(spec.orders[level]));
      }
      if (std::abs(f - prev_f) <= spec.converged_rel * f && std::abs(bk - prev_b) <= spec.converged_rel * bk) {
        out.converged = true;
        break;
      }
    }
    prev_f = f;
    prev_b = bk;
  }

  const double na = symbol.matrix_norm();
  const double c = std::pow(8.0 * std::numbers::pi / (p * (1.0 - na * na)), static_cast<double>(n));
  out.bound = c * std::exp(p * b.squaredNorm() / (1.0 - na));
  out.within_bound = out.int_cphi <= out.bound && out.int_cphi_star <= out.bound;
  return out;
}

bool schatten_membership(const AffineSymbol& symbol, double tol_unit) {
  require_bounded(symbol, tol_unit, "schatten_membership");
  return check_compact(symbol, tol_unit);
}

namespace {

std::size_t default_hs_degree(std::size_t n) {
  // largest N whose basis stays within a couple of thousand elements
  std::size_t degree = 0;
  while (graded_count(n, degree + 1) <= 2000 && degree < 400) ++degree;
  return degree;
}

}  // namespace

HilbertSchmidtEstimate hilbert_schmidt_estimate(const AffineSymbol& symbol, std::size_t max_degree,
                                                double tol_unit) {
  HilbertSchmidtEstimate est;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (!check_compact(symbol, tol_unit)) {
    est.value = kInf;
    return est;
  }
  const std::size_t degree = max_degree > 0 ? max_degree : default_hs_degree(symbol.dimension());
  const std::vector<double> shells = column_norms_by_shell(symbol, degree);

  // stop once three consecutive shells are negligible against the sum
  double sum = 0.0;
  std::size_t last = 0;
  int quiet = 0;
  for (std::size_t d = 0; d < shells.size(); ++d) {
    sum += shells[d];
    last = d;
    quiet = shells[d] <= 1e-17 * sum ? quiet + 1 : 0;
    if (quiet == 3) break;
  }
  est.partial_sum = sum;
  est.degree = last;

  double ratio = 0.0;
  for (std::size_t d = (2 * last + 2) / 3; d < last; ++d) {
    if (shells[d] > 0.0) ratio = std::max(ratio, shells[d + 1] / shells[d]);
  }
  est.decay_ratio = ratio;
  if (ratio >= 1.0) {
    est.value = kInf;
    return est;
  }
  est.value = sum + shells[last] * ratio / (1.0 - ratio);
  return est;
}

double hilbert_schmidt_norm_sq(const AffineSymbol& symbol, double tol_unit) {
  return hilbert_schmidt_estimate(symbol, 0, tol_unit).value;
}

double hilbert_schmidt_closed_form(const AffineSymbol& symbol, double tol_unit) {
  if (!check_compact(symbol, tol_unit)) return std::numeric_limits<double>::infinity();
  const auto n = static_cast<Eigen::Index>(symbol.dimension());
  const auto& a = symbol.matrix();
  const ComplexMatrix gap = ComplexMatrix::Identity(n, n) - a.adjoint() * a;
  const ComplexVector v = a.adjoint() * symbol.translation();
  const Eigen::LLT<ComplexMatrix> llt(gap);
  const double quad = inner(llt.solve(v), v).real();
  const double det = llt.matrixL().toDenseMatrix().diagonal().cwiseAbs2().prod();
  return std::exp(0.5 * symbol.translation().squaredNorm() + 0.5 * quad) / det;
}

}  // namespace fockop
