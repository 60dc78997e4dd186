#pragma once

#include "catquot/action.hpp"
#include "catquot/category.hpp"
#include "catquot/formulas.hpp"

#include <memory>
#include <vector>

namespace catquot {

/// A poset together with a group acting on its category.
struct PosetAction {
  Poset poset;
  std::shared_ptr<const FiniteCategory> category;
  ActionGroup action;
};

/// Action generated by object permutations of a poset.
PosetAction poset_action(const Poset &p, const std::vector<std::vector<int>> &perms);

/// Bd(P) with the action induced by a group acting on P.
struct SubdivisionAction {
  Subdivision subdivision;
  PosetAction induced;
};

SubdivisionAction subdivide(const Poset &p, const ActionGroup &a);

/// {a, b} > {c, d}, with the swap a<->b, c<->d.
PosetAction bowtie();

/// Subsets of {0..n-1} (element = bitmask) under inclusion with the symmetric
/// group permuting the ground set.
PosetAction boolean_lattice(int n);

/// Ordinal sum of `levels` two-element antichains; level k holds 2k and
/// 2k+1 and sits above level k-1. The group is the even-weight subgroup of
/// the swaps of the individual levels.
PosetAction stacked_antichains(int levels);

/// Partitions of {1,2,3} by refinement with S_3: 0 is the discrete
/// partition, 1..3 the partitions with one block of two, 4 the single
/// block. Labels are the braid arrangement dimensions 3, 2, 2, 2, 1.
struct LatticeAction {
  LabeledLattice lattice;
  std::shared_ptr<const FiniteCategory> category;
  ActionGroup action;
};

LatticeAction partition_lattice_3();

} // namespace catquot
