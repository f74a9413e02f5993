#include "fockop/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "fockop/analysis.hpp"
#include "fockop/error.hpp"
#include "fockop/lattice.hpp"
#include "fockop/spectrum.hpp"
#include "fockop/truncation.hpp"

namespace fockop {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

PiFraction PiFraction::reduced(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "angle tag with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return PiFraction{num / g, den / g};
}

double PiFraction::radians() const {
  return static_cast<double>(num) / static_cast<double>(den) * std::numbers::pi;
}

AngleSet AngleSet::floating(std::vector<double> thetas) {
  AngleSet s;
  s.thetas = std::move(thetas);
  return s;
}

namespace {

using Real = long double;
constexpr Real kPi = std::numbers::pi_v<long double>;
constexpr double kRelationResidual = 1e-10;

// Make the first nonzero angle coefficient positive.
void normalize_sign(std::vector<std::int64_t>& k) {
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    if (k[i] < 0)
      for (auto& c : k) c = -c;
    return;
  }
  if (!k.empty() && k[0] < 0)
    for (auto& c : k) c = -c;
}

}  // namespace

IndependenceVerdict rational_independence(const AngleSet& angles, std::int64_t max_coeff) {
  IndependenceVerdict out;
  const std::size_t m = angles.thetas.size();
  if (m == 0) {
    out.independent = Verdict::Yes;
    out.method = "empty angle set; pi alone is independent";
    return out;
  }
  // one exactly tagged angle p/q pi already gives -p pi + q theta = 0
  for (std::size_t i = 0; i < m; ++i) {
    if (!angles.is_exact(i)) continue;
    const PiFraction f = *angles.exact[i];
    std::vector<std::int64_t> k(m + 1, 0);
    k[0] = -f.num;
    k[i + 1] = f.den;
    out.independent = Verdict::No;
    out.relation = k;
    out.residual = 0.0;
    out.method = "exact rational multiple of pi";
    return out;
  }

  constexpr Real kScale = 1e12L;
  std::vector<Real> x(m + 1);
  x[0] = kPi;
  for (std::size_t i = 0; i < m; ++i) x[i + 1] = static_cast<Real>(angles.thetas[i]);
  IntegerBasis basis(m + 1, std::vector<std::int64_t>(m + 2, 0));
  for (std::size_t i = 0; i <= m; ++i) {
    basis[i][i] = 1;
    basis[i][m + 1] = static_cast<std::int64_t>(std::llround(kScale * x[i]));
  }
  lll_reduce(basis);

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& row : basis) {
    std::vector<std::int64_t> k(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(m + 1));
    std::int64_t size = 0;
    for (auto c : k) size = std::max<std::int64_t>(size, c < 0 ? -c : c);
    if (size == 0 || size > max_coeff) continue;
    Real r = 0;
    for (std::size_t i = 0; i <= m; ++i) r += static_cast<Real>(k[i]) * x[i];
    const double residual = static_cast<double>(std::fabs(r));
    if (residual < kRelationResidual && size < best) {
      best = size;
      normalize_sign(k);
      out.relation = k;
      out.residual = residual;
    }
  }
  out.method = "LLL integer relation search on (pi, theta) scaled by 1e12, coefficient bound " +
               std::to_string(max_coeff);
  out.independent = out.relation ? Verdict::No : Verdict::Unknown;
  return out;
}

namespace {

bool is_unitary(const AffineSymbol& symbol, double tol) {
  const auto& s = symbol.singular_values();
  return s(0) <= 1.0 + tol && s(s.size() - 1) >= 1.0 - tol;
}

std::vector<std::int64_t> reduce_relation(std::int64_t k0, std::int64_t k1) {
  const std::int64_t g = std::gcd(k0, k1);
  std::vector<std::int64_t> k{k0 / g, k1 / g};
  normalize_sign(k);
  return k;
}

CyclicityVerdict one_dimensional_unimodular(Complex a, const CyclicOptions& options) {
  CyclicityVerdict out;
  if (!options.exact_angles.empty() && options.exact_angles[0]) {
    const PiFraction f = *options.exact_angles[0];
    // order of exp(i pi p/q) is 2q / gcd(p, 2)
    const std::int64_t order = 2 * f.den / std::gcd<std::int64_t>(f.num, 2);
    out.verdict = Verdict::No;
    out.root_order = static_cast<std::uint64_t>(order) + 1;
    out.relation = reduce_relation(-f.num, f.den);
    out.rationale = "a is a root of unity of order " + std::to_string(order) + ", so a^" +
                    std::to_string(order + 1) + " = a";
    return out;
  }
  const Real theta = static_cast<Real>(positive_arg(a));
  const Real two_pi = 2 * kPi;
  for (std::uint64_t m = 2; m <= options.max_root_order; ++m) {
    const Real turns = static_cast<Real>(m - 1) * theta;
    const Real phase = std::fmod(turns, two_pi);
    const Real dist = std::min(phase, two_pi - phase);
    if (2 * std::sin(dist / 2) < kRelationResidual) {
      const auto j = static_cast<std::int64_t>(std::llround(turns / two_pi));
      out.verdict = Verdict::No;
      out.root_order = m;
      out.relation = reduce_relation(-2 * j, static_cast<std::int64_t>(m - 1));
      out.rationale = "|a^" + std::to_string(m) + " - a| < 1e-10";
      return out;
    }
  }
  const IndependenceVerdict ind =
      rational_independence(AngleSet::floating({static_cast<double>(theta)}), options.max_coeff);
  out.relation = ind.relation;
  if (ind.independent == Verdict::No) {
    out.verdict = Verdict::No;
    out.rationale = "theta is a rational multiple of pi (" + ind.method + ")";
  } else {
    out.verdict = Verdict::Unknown;
    out.rationale = "no root of unity of order <= " + std::to_string(options.max_root_order) +
                    " and no integer relation found; independence cannot be certified from floating input";
  }
  return out;
}

}  // namespace

CyclicityVerdict check_cyclic(const AffineSymbol& symbol, const CyclicOptions& options) {
  if (!check_bounded(symbol, options.tol_unit).bounded) {
    throw Error(ErrorCode::NotBounded, "check_cyclic requires a bounded composition operator");
  }
  const std::size_t n = symbol.dimension();
  const auto& sigma = symbol.singular_values();
  CyclicityVerdict out;
  if (sigma(sigma.size() - 1) < options.tol_unit) {
    out.verdict = Verdict::No;
    out.rationale = "A is not invertible, so every function in the range of C_phi is constant along ker A";
    return out;
  }
  if (n == 1) {
    const Complex a = symbol.matrix()(0, 0);
    if (std::abs(std::abs(a) - 1.0) <= options.tol_unit) return one_dimensional_unimodular(a, options);
    out.verdict = Verdict::Yes;
    out.rationale = "0 < |a| < 1: kernel functions are cyclic vectors";
    return out;
  }
  if (is_unitary(symbol, options.tol_unit)) {
    const std::vector<Complex> eig = eigenvalues(symbol.matrix());
    AngleSet angles;
    for (const Complex& l : eig) angles.thetas.push_back(positive_arg(l));
    angles.exact = options.exact_angles;
    angles.exact.resize(angles.thetas.size());
    const IndependenceVerdict ind = rational_independence(angles, options.max_coeff);
    out.relation = ind.relation;
    if (ind.independent == Verdict::No) {
      out.verdict = Verdict::No;
      out.rationale = "unitary A whose eigenvalue angles are rationally dependent with pi (" + ind.method + ")";
    } else {
      out.verdict = Verdict::Unknown;
      out.rationale = "unitary A; no integer relation among the eigenvalue angles and pi was found (" +
                      ind.method + "), but independence cannot be certified from floating input";
    }
    return out;
  }
  out.verdict = Verdict::Unknown;
  out.rationale = "invertible non-unitary A with n >= 2: cyclicity in this case is an open problem";
  return out;
}

bool check_supercyclic(const AffineSymbol& symbol, double tol_unit) {
  if (!check_bounded(symbol, tol_unit).bounded) {
    throw Error(ErrorCode::NotBounded, "check_supercyclic requires a bounded composition operator");
  }
  return false;
}

KernelOrbitPoint kernel_orbit(const AffineSymbol& symbol, const ComplexVector& z, std::size_t m,
                              OrbitDirection direction, double tol_unit) {
  if (!check_bounded(symbol, tol_unit).bounded) {
    throw Error(ErrorCode::NotBounded, "kernel_orbit requires a bounded composition operator");
  }
  if (static_cast<std::size_t>(z.size()) != symbol.dimension()) {
    throw Error(ErrorCode::ShapeMismatch, "orbit point has wrong length");
  }
  const AffineSymbol iterate = iterate_symbol(symbol, m);
  if (direction == OrbitDirection::Adjoint) return KernelOrbitPoint{iterate(z), Complex(1.0)};
  if (symbol.dimension() != 1) {
    throw Error(ErrorCode::ForwardOrbitUnsupported, "forward kernel orbits are only available for n = 1");
  }
  // K_z o phi_m = exp(<B_m, z>/2) K_{conj(a^m) z}, with B_m the translation of phi_m
  KernelOrbitPoint p;
  p.center = iterate.matrix().adjoint() * z;
  p.scale = std::exp(inner(iterate.translation(), z) / 2.0);
  return p;
}

DensityReport orbit_density_experiment(const AffineSymbol& symbol, const Polynomial& seed, std::size_t max_degree,
                                       std::size_t steps, double rank_tol) {
  if (!check_bounded(symbol).bounded) {
    throw Error(ErrorCode::NotBounded, "orbit_density_experiment requires a bounded composition operator");
  }
  const TruncatedOperator t = build_truncation(symbol, max_degree);
  DensityReport report;
  report.truncated_dimension = t.basis.size();
  report.span_dimension.assign(steps + 1, 0);

  const ComplexVector x = orthonormal_coordinates(seed, t.basis);
  const double xn = x.norm();
  if (xn == 0.0) return report;

  // Arnoldi with a second Gram-Schmidt pass
  std::vector<ComplexVector> q{x / xn};
  report.span_dimension[0] = 1;
  bool stalled = false;
  for (std::size_t k = 1; k <= steps; ++k) {
    if (!stalled && q.size() < report.truncated_dimension) {
      ComplexVector w = t.matrix * q.back();
      const double wn = w.norm();
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& v : q) w -= inner(w, v) * v;
      const double h = w.norm();
      if (wn < 1e-300 || h <= rank_tol * wn) {
        stalled = true;
      } else {
        q.push_back(w / h);
      }
    }
    report.span_dimension[k] = q.size();
  }
  report.reached = q.size();
  report.fraction = static_cast<double>(q.size()) / static_cast<double>(report.truncated_dimension);
  return report;
}

}  // namespace fockop
