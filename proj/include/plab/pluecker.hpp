#pragma once

#include <string>

#include "plab/eisenstein.hpp"
#include "plab/errors.hpp"

namespace plab {

struct InfeasibleInvariants : Error {
  using Error::Error;
};

/// Numerical characters of a plane curve with only nodes and cusps.
/// Tacnodes enter nu as two nodes each.
struct PlueckerInvariants {
  long d = 0;
  long nu = 0;
  long kappa = 0;
  long m = 0;  // class
  long f = 0;  // flexes
  long b = 0;  // bitangents
  long g = 0;  // geometric genus
};

/// m, f, b, g from (d, nu, kappa).  Throws InfeasibleInvariants when a
/// derived value is negative or b is not an integer.
PlueckerInvariants dual_invariants(long d, long nu, long kappa);

/// Solution of nu + kappa = p_a(d) - g, 2 nu + 3 kappa = d(d-1) - m.
struct NodeCuspSolution {
  bool feasible = false;
  /// The exact solution of the linear system (integral since the system is
  /// unimodular), returned even when infeasible.
  Integer nu;
  Integer kappa;
  /// Why the solution is rejected, e.g. "nu=kappa=0 forced; m = d(d-1) reads 18 = 72".
  std::string diagnostic;
  /// The violated identity alone ("18 = 72"), empty otherwise.
  std::string violated_identity;
};

NodeCuspSolution solve_nodes_cusps(long d, long g, long m);

/// (d-1)(d-2)/2.
long arithmetic_genus(long d);

}  // namespace plab
