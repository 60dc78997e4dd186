#pragma once

#include "catquot/action.hpp"
#include "catquot/complex.hpp"
#include "catquot/linalg.hpp"
#include "catquot/numeric.hpp"

#include <vector>

namespace catquot {

/// Boundary map from d-chains to (d-1)-chains: column s is
/// sum_i (-1)^i d_i(s), degenerate faces dropped. Empty for d <= 0.
IntegerMatrix boundary_matrix(const DeltaComplex &dc, int d);

struct HomologyResult {
  std::vector<int> betti;                  ///< rational Betti numbers
  std::vector<std::vector<Integer>> torsion; ///< coefficients > 1 per dimension
  Integer euler = 0;
  Integer reduced_euler = -1;

  int betti_at(int d) const {
    return d >= 0 && d < static_cast<int>(betti.size()) ? betti[d] : 0;
  }
  /// Reduced Betti number; the empty complex has a single class in
  /// dimension -1.
  int reduced_betti(int d) const;
};

HomologyResult homology(const DeltaComplex &dc);

/// Alternating sum of simplex counts; 0 for the empty complex.
Integer euler(const DeltaComplex &dc);
Integer reduced_euler(const DeltaComplex &dc);

/// A basis of H_i(D; Q): boundaries of dimension i first (kept implicit),
/// then cycle representatives chosen greedily from the null space basis.
struct HomologyBasis {
  int dim = 0;
  RationalMatrix boundaries; ///< columns span im ∂_{i+1}
  RationalMatrix classes;    ///< columns are cycle representatives
};

HomologyBasis homology_basis(const DeltaComplex &dc, int i);

/// Matrix of a simplex permutation on H_i in the given basis. The map must
/// send nondegenerate simplices to nondegenerate simplices preserving face
/// order, so it acts on chains without signs.
RationalMatrix homology_action_matrix(const HomologyBasis &basis,
                                      const SimplicialMap &f);

/// γ_i(g) on H_i(Δ(K); Q) for every group element, in a common basis.
std::vector<RationalMatrix> induced_homology_action(const ActionGroup &a, int i);

Rational trace(const RationalMatrix &m);

/// (1/|G|) Σ_g tr γ_i(g). Throws InternalError if the average is not a
/// nonnegative integer.
Integer trivial_multiplicity(const ActionGroup &a, int i);

} // namespace catquot
