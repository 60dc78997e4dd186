#pragma once

#include "catquot/action.hpp"
#include "catquot/category.hpp"
#include "catquot/conditions.hpp"
#include "catquot/error.hpp"
#include "catquot/numeric.hpp"

#include <string>
#include <vector>

namespace catquot {

/// Both sides of an exact identity, with the terms that produced them.
struct IdentityReport {
  std::string name;
  Rational left = 0;
  Rational right = 0;
  bool equal = false;
  std::vector<std::string> breakdown;
};

/// Raised when an identity needs condition (C) and the action violates it.
class ConditionRefused : public PreconditionError {
public:
  explicit ConditionRefused(ConditionReport report);
  const ConditionReport &report() const noexcept { return report_; }

private:
  ConditionReport report_;
};

/// χ(Δ(K)/G) against the average of χ(Δ(K_g)). Needs a loopfree K only.
IdentityReport burnside_euler(const ActionGroup &a);

/// μ(K/G) against the average of μ(K_g), with μ(∅) = -1.
IdentityReport mobius_quotient(const ActionGroup &a);

/// β_i(Δ(K/G)) against the trivial-character multiplicity on H_i(Δ(K)).
IdentityReport betti_multiplicity(const ActionGroup &a, int i);

/// A bounded poset with an integer label per element. Labels must strictly
/// decrease going up.
struct LabeledLattice {
  Poset poset;
  std::vector<int> dim;
  int bottom = -1;
  int top = -1;
};

/// Locates 0̂ and 1̂ and checks the labels. Throws InputError.
LabeledLattice make_labeled_lattice(Poset p, std::vector<int> dim);

/// Lattice sum over orbits of elements above 0̂.
///
/// left:  (1/|G|) Σ_g Σ_{x > 0̂, gx = x} tr(g | H̃_{i-dim x-1}(Δ(0̂,x)))
/// right: Σ_{orbit reps x > 0̂} β̃_{i-dim x-1}(Δ((0̂,x)/Stab x))
///
/// The action must fix 0̂ and 1̂ and satisfy condition (C) on the open
/// interval (0̂,1̂) and on each (0̂,x) under Stab x; ConditionRefused otherwise.
/// The breakdown also lists β̃_i of the quotient of (0̂,1̂) itself.
IdentityReport gm_quotient(const LabeledLattice &l, const ActionGroup &a, int i);

} // namespace catquot
