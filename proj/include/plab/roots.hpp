#pragma once

#include <utility>
#include <vector>

#include "plab/uni_poly.hpp"

namespace plab {

/// Roots of a univariate polynomial that lie in Q(rho).
struct RootSet {
  /// Distinct roots in canonical order, each with its multiplicity.
  std::vector<std::pair<Eis, int>> roots;
  /// Monic factors left after removing every Q(rho) root, with multiplicity.
  /// None of them has a root in Q(rho); they are squarefree but not
  /// necessarily irreducible.
  std::vector<std::pair<UniPoly, int>> unresolved;

  bool complete() const { return unresolved.empty(); }
  std::vector<Eis> values() const;
  int unresolved_degree() const;
};

/// All roots of p in Q(rho).  Throws DomainError for p = 0.
///
/// Each squarefree factor is reduced modulo a prime q = 1 (mod 3) under both
/// embeddings of rho, its simple roots are Hensel-lifted far enough to pin
/// down an Eisenstein integer of bounded size, and every reconstructed
/// candidate is verified by exact evaluation.
RootSet lambda_roots(const UniPoly& p);

/// Distinct Q(rho) roots of a squarefree polynomial, unsorted.
std::vector<Eis> squarefree_roots(const UniPoly& p);

}  // namespace plab
