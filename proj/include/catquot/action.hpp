#pragma once

#include "catquot/category.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace catquot {

/// A functor whose object and morphism maps are bijections.
using CatAutomorphism = CatFunctor;

/// Index into the element table of an ActionGroup.
using GroupElement = int;

/// A finite group acting faithfully on a finite category. Elements are stored
/// as the automorphisms they induce; element 0 is the identity. The product
/// g*h acts as "h first, then g".
class ActionGroup {
public:
  /// `elements` must be distinct automorphisms of `target`, closed under
  /// composition, with the identity first. Throws InternalError otherwise.
  ActionGroup(std::shared_ptr<const FiniteCategory> target,
              std::vector<CatAutomorphism> elements);

  int order() const noexcept { return static_cast<int>(elements_.size()); }
  const FiniteCategory &target() const noexcept { return *target_; }
  const std::shared_ptr<const FiniteCategory> &target_ptr() const noexcept {
    return target_;
  }

  const CatAutomorphism &element(GroupElement g) const { return elements_[g]; }
  const std::vector<CatAutomorphism> &elements() const noexcept {
    return elements_;
  }

  ObjectId act_object(GroupElement g, ObjectId x) const {
    return elements_[g].obj_map[x];
  }
  MorphismId act_morphism(GroupElement g, MorphismId m) const {
    return elements_[g].mor_map[m];
  }

  GroupElement mult(GroupElement g, GroupElement h) const {
    return mult_[static_cast<std::size_t>(g) * elements_.size() + h];
  }
  GroupElement inverse(GroupElement g) const { return inv_[g]; }
  static constexpr GroupElement identity() noexcept { return 0; }

  std::optional<GroupElement> find(const CatAutomorphism &a) const;

private:
  std::shared_ptr<const FiniteCategory> target_;
  std::vector<CatAutomorphism> elements_;
  std::vector<GroupElement> mult_;
  std::vector<GroupElement> inv_;
};

/// Functor laws plus bijectivity on objects and morphisms.
ValidationReport validate_automorphism(const FiniteCategory &c,
                                       const CatAutomorphism &a);

CatAutomorphism identity_automorphism(const FiniteCategory &c);

/// For a category with at most one morphism between any two objects, the
/// morphism map is forced by the object permutation. Throws InputError when
/// the permutation is not order preserving.
CatAutomorphism automorphism_from_object_permutation(const FiniteCategory &c,
                                                     const std::vector<int> &perm);

inline constexpr std::size_t kDefaultMaxGroupOrder = 100000;

/// Closure of the generators under composition. Elements are numbered in
/// breadth-first discovery order starting with the identity, so identical
/// inputs give identical tables. Throws InputError when a generator is not an
/// automorphism or the closure exceeds `max_order`.
ActionGroup generate_action(std::shared_ptr<const FiniteCategory> c,
                            const std::vector<CatAutomorphism> &generators,
                            std::size_t max_order = kDefaultMaxGroupOrder);
ActionGroup generate_action(const FiniteCategory &c,
                            const std::vector<CatAutomorphism> &generators,
                            std::size_t max_order = kDefaultMaxGroupOrder);

/// Partition of objects or morphisms; classes are sorted and numbered by
/// their least member, which is the canonical representative.
struct Partition {
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;

  int size() const noexcept { return static_cast<int>(classes.size()); }
  int representative(int c) const { return classes[c].front(); }
};

Partition object_orbits(const ActionGroup &a);
Partition morphism_orbits(const ActionGroup &a);

/// Group elements fixing x (sorted; always contains the identity).
std::vector<GroupElement> object_stabilizer(const ActionGroup &a, ObjectId x);
std::vector<GroupElement> morphism_stabilizer(const ActionGroup &a,
                                              MorphismId m);

/// Stabilizers as actions on the same target; elements keep the parent's
/// relative order.
ActionGroup stabilizer_of_object(const ActionGroup &a, ObjectId x);
ActionGroup stabilizer_of_morphism(const ActionGroup &a, MorphismId m);

/// The subgroup generated by the listed elements (trivial for an empty list).
ActionGroup subgroup_action(const ActionGroup &a,
                            const std::vector<GroupElement> &generators);

/// Checks that a set of element indices is a subgroup (contains the identity
/// and is closed under products; finiteness gives inverses).
bool is_subgroup(const ActionGroup &a, const std::vector<GroupElement> &subset);

struct HorizontalReport {
  bool horizontal = true;
  /// (g, x) with g·x != x and a morphism between x and g·x.
  std::optional<std::pair<GroupElement, ObjectId>> witness;
};

HorizontalReport is_horizontal(const ActionGroup &a);

/// K_g: objects and morphisms fixed by g.
Subcategory fixed_subcategory(const FiniteCategory &c, const CatAutomorphism &g);

struct RestrictedAction {
  Subcategory sub;
  ActionGroup action;
  /// parent element -> element of `action` inducing the same automorphism
  std::vector<GroupElement> element_image;
};

/// Restriction to the full subcategory on a setwise-stable set of objects.
/// Elements acting identically on the subcategory collapse to one element.
/// Throws PreconditionError when the set is not stable.
RestrictedAction restrict_action(const ActionGroup &a,
                                 const std::vector<ObjectId> &objects);

} // namespace catquot
