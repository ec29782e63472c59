#include "plab/pluecker.hpp"

namespace plab {

long arithmetic_genus(long d) {
  if (d < 1) throw DomainError("degree must be positive");
  return (d - 1) * (d - 2) / 2;
}

PlueckerInvariants dual_invariants(long d, long nu, long kappa) {
  if (d < 2) throw DomainError("degree must be at least 2");
  if (nu < 0 || kappa < 0) throw DomainError("node and cusp counts must be non-negative");
  PlueckerInvariants p{d, nu, kappa};
  p.m = d * (d - 1) - 2 * nu - 3 * kappa;
  p.f = 3 * d * (d - 2) - 6 * nu - 8 * kappa;
  p.g = arithmetic_genus(d) - nu - kappa;
  long twice_b = p.m * (p.m - 1) - d - 3 * p.f;
  auto where = "(d, nu, kappa) = (" + std::to_string(d) + ", " + std::to_string(nu) + ", " + std::to_string(kappa) + ")";
  if (p.m < 0) throw InfeasibleInvariants("negative class m = " + std::to_string(p.m) + " for " + where);
  if (p.f < 0) throw InfeasibleInvariants("negative flex count f = " + std::to_string(p.f) + " for " + where);
  if (p.g < 0) throw InfeasibleInvariants("negative genus g = " + std::to_string(p.g) + " for " + where);
  if (twice_b % 2 != 0)
    throw InfeasibleInvariants("fractional bitangent count b = " + std::to_string(twice_b) + "/2 for " + where);
  p.b = twice_b / 2;
  if (p.b < 0) throw InfeasibleInvariants("negative bitangent count b = " + std::to_string(p.b) + " for " + where);
  return p;
}

NodeCuspSolution solve_nodes_cusps(long d, long g, long m) {
  if (d < 2 || g < 0 || m < 2) throw DomainError("solve needs d >= 2, g >= 0, m >= 2");
  Integer s = arithmetic_genus(d) - g;  // nu + kappa
  Integer t = Integer(d) * (d - 1) - m;  // 2 nu + 3 kappa
  NodeCuspSolution r;
  r.kappa = t - 2 * s;
  r.nu = 3 * s - t;
  auto str = [](const Integer& x) { return x.get_str(); };
  if (sgn(s) == 0 && sgn(t) != 0) {
    r.violated_identity = std::to_string(m) + " = " + std::to_string(d * (d - 1));
    r.diagnostic = "nu=kappa=0 forced; m = d(d-1) reads " + r.violated_identity;
  } else if (sgn(r.nu) < 0 || sgn(r.kappa) < 0) {
    r.diagnostic = "nu+kappa=" + str(s) + " with 2nu+3kappa=" + str(t) + " has no non-negative solution (nu, kappa) = (" +
                   str(r.nu) + ", " + str(r.kappa) + ")";
  } else {
    r.feasible = true;
  }
  return r;
}

}  // namespace plab
