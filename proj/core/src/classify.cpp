#include "fockop/classify.hpp"

namespace fockop {

ClassificationReport classify(const AffineSymbol& symbol, const CyclicOptions& options) {
  ClassificationReport r;
  const double tol = options.tol_unit;
  r.bounded = check_bounded(symbol, tol);
  if (!r.bounded.bounded) return r;
  r.compact = check_compact(symbol, tol);
  r.z0 = solve_z0(symbol, tol);
  r.norm = operator_norm(symbol, tol);
  r.essential_norm = essential_norm_certificate(symbol, tol);
  r.normal = check_normal(symbol);
  r.hyponormal = check_hyponormal(symbol);
  r.essentially_normal = check_essentially_normal(symbol);
  r.schatten_all_p = schatten_membership(symbol, tol);
  r.supercyclic = check_supercyclic(symbol, tol);
  r.cyclic = check_cyclic(symbol, options);
  return r;
}

}  // namespace fockop
