#pragma once

#include "catquot/action.hpp"
#include "catquot/category.hpp"

#include <vector>

namespace catquot {

/// The colimit K/G in Cat together with the projection K -> K/G.
///
/// Objects of K/G are the object orbits (numbered by least representative).
/// Morphism ids of K/G: identities first (identity of class i is i), then
/// the nonidentity classes sorted by least member.
struct QuotientCategory {
  FiniteCategory category;
  std::vector<ObjectId> obj_class;   ///< object of K -> object of K/G
  std::vector<MorphismId> mor_class; ///< morphism of K -> morphism of K/G
  /// Same data as obj_class/mor_class, packaged as a functor.
  CatFunctor projection;
};

/// Least equivalence on morphisms containing m ~ g·m and closed under
/// composition, computed by union-find with congruence passes to a fixpoint.
/// The result is validated; a failed self-check throws InternalError.
QuotientCategory quotient_category(const FiniteCategory &c, const ActionGroup &a);

/// Quotient in the category of posets: orbits ordered by the
/// reflexive-transitive closure of {Ga >= Gb : a >= g·b for some g}. `a` must
/// act on category_from_poset(p). Throws InputError with a cycle of orbits if
/// the closure is not antisymmetric.
Poset poset_quotient(const Poset &p, const ActionGroup &a);

bool is_quotient_poset(const QuotientCategory &q);

} // namespace catquot
