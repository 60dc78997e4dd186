#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace catquot {

/// Dense object index in [0, n_objects).
using ObjectId = int;
/// Dense morphism index in [0, n_morphisms). Ids below n_objects are the
/// identities: the identity of object i is morphism i.
using MorphismId = int;

inline constexpr MorphismId kUndefined = -1;

struct Endpoints {
  ObjectId source;
  ObjectId target;
  friend bool operator==(const Endpoints &, const Endpoints &) = default;
};

struct Violation {
  std::string law;
  std::vector<int> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// A finite category stored as explicit data with a fully materialized
/// composition table. compose(f, g) is "g then f" and is defined exactly when
/// source(f) == target(g).
///
/// Construction only checks index ranges; the category laws are checked by
/// validate_category(). Table entries may be kUndefined, which validation
/// reports as a non-total composition.
class FiniteCategory {
public:
  FiniteCategory() = default;

  /// `morphisms` lists the endpoints of every morphism; its first n_objects
  /// entries must be the identities (i, i). `composition` is row-major
  /// n_morphisms x n_morphisms, entry [f][g] = f∘g or kUndefined.
  FiniteCategory(int n_objects, std::vector<Endpoints> morphisms,
                 std::vector<MorphismId> composition);

  /// Convenience constructor from the nonidentity morphisms (receiving ids
  /// n_objects, n_objects+1, ...) and explicit composites (f, g, f∘g).
  /// Composites involving an identity are filled in automatically.
  static FiniteCategory
  from_parts(int n_objects, const std::vector<Endpoints> &nonidentity,
             const std::vector<std::tuple<MorphismId, MorphismId, MorphismId>>
                 &composites);

  int n_objects() const noexcept { return n_objects_; }
  int n_morphisms() const noexcept {
    return static_cast<int>(morphisms_.size());
  }

  ObjectId source(MorphismId m) const { return morphisms_[m].source; }
  ObjectId target(MorphismId m) const { return morphisms_[m].target; }
  const Endpoints &endpoints(MorphismId m) const { return morphisms_[m]; }
  bool is_identity(MorphismId m) const noexcept { return m < n_objects_; }
  static MorphismId identity(ObjectId x) noexcept { return x; }

  /// f∘g, or kUndefined when source(f) != target(g) or the entry is missing.
  MorphismId compose(MorphismId f, MorphismId g) const {
    return composition_[static_cast<std::size_t>(f) * morphisms_.size() + g];
  }
  bool composable(MorphismId f, MorphismId g) const {
    return source(f) == target(g);
  }

  /// M(x, y): all morphisms x -> y in increasing id order.
  const std::vector<MorphismId> &hom(ObjectId x, ObjectId y) const {
    return hom_[static_cast<std::size_t>(x) * n_objects_ + y];
  }
  /// Nonidentity morphisms with the given source, increasing id order.
  const std::vector<MorphismId> &outgoing(ObjectId x) const {
    return outgoing_[x];
  }
  /// Nonidentity morphisms with the given target, increasing id order.
  const std::vector<MorphismId> &incoming(ObjectId y) const {
    return incoming_[y];
  }

  const std::vector<Endpoints> &morphisms() const noexcept {
    return morphisms_;
  }
  const std::vector<MorphismId> &composition_table() const noexcept {
    return composition_;
  }

  friend bool operator==(const FiniteCategory &a, const FiniteCategory &b) {
    return a.n_objects_ == b.n_objects_ && a.morphisms_ == b.morphisms_ &&
           a.composition_ == b.composition_;
  }

private:
  int n_objects_ = 0;
  std::vector<Endpoints> morphisms_;
  std::vector<MorphismId> composition_;
  std::vector<std::vector<MorphismId>> hom_;
  std::vector<std::vector<MorphismId>> outgoing_;
  std::vector<std::vector<MorphismId>> incoming_;
};

/// A finite partial order. greater(a, b) means a > b.
class Poset {
public:
  Poset() = default;

  /// Builds the reflexive-transitive closure of the pairs (a, b) read as
  /// a > b. Throws InputError naming a cycle if the closure is not
  /// antisymmetric.
  static Poset from_relations(int n,
                              const std::vector<std::pair<int, int>> &greater);

  /// Takes an explicit leq matrix (row-major, leq[a*n+b] means a <= b) and
  /// throws InputError if it is not reflexive, antisymmetric and transitive.
  static Poset from_matrix(int n, std::vector<char> leq);

  int size() const noexcept { return n_; }
  bool leq(int a, int b) const { return leq_[index(a, b)] != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool greater(int a, int b) const { return less(b, a); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// Pairs (a, b) with a > b in lexicographic order.
  std::vector<std::pair<int, int>> strict_relations() const;
  /// Cover relations a ⋗ b in lexicographic order.
  std::vector<std::pair<int, int>> covers() const;
  /// Number of elements of the longest chain (0 for the empty poset).
  int height() const;

  friend bool operator==(const Poset &, const Poset &) = default;

private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * n_ + b;
  }
  int n_ = 0;
  std::vector<char> leq_;
};

/// A functor given by its object and morphism maps.
struct CatFunctor {
  std::vector<ObjectId> obj_map;
  std::vector<MorphismId> mor_map;
  friend bool operator==(const CatFunctor &, const CatFunctor &) = default;
  friend auto operator<=>(const CatFunctor &, const CatFunctor &) = default;
};

/// A subcategory together with its embedding into the parent.
struct Subcategory {
  FiniteCategory category;
  std::vector<ObjectId> objects;     ///< sub object id -> parent object id
  std::vector<MorphismId> morphisms; ///< sub morphism id -> parent morphism id
};

ValidationReport validate_category(const FiniteCategory &c);

/// Checks that `f` is a functor from `from` to `to`.
ValidationReport validate_functor(const FiniteCategory &from,
                                  const FiniteCategory &to, const CatFunctor &f);

/// The category with one morphism a -> b for every a >= b. Nonidentity
/// morphism ids follow strict_relations() order.
FiniteCategory category_from_poset(const Poset &p);

struct LoopfreeReport {
  bool loopfree = true;
  /// Offending pair (x, y); x == y flags a nonidentity endomorphism.
  std::optional<std::pair<ObjectId, ObjectId>> witness;
};

LoopfreeReport is_loopfree(const FiniteCategory &c);
bool is_poset_category(const FiniteCategory &c);

/// Reflexive-transitive closure of {x >= y : M(x, y) nonempty}. Throws
/// PreconditionError on a non-loopfree category.
Poset underlying_order(const FiniteCategory &c);

/// Length of the longest composable chain of nonidentity morphisms. Throws
/// PreconditionError when the category has a nonidentity cycle.
int longest_chain(const FiniteCategory &c);

/// The subcategory on the given objects and morphisms (parent ids). The
/// morphism set must contain the identities of the objects and be closed
/// under composition; InternalError otherwise.
Subcategory make_subcategory(const FiniteCategory &c,
                             const std::vector<ObjectId> &objects,
                             const std::vector<MorphismId> &morphisms);

/// Full subcategory on a set of objects.
Subcategory induced_subcategory(const FiniteCategory &c,
                                const std::vector<ObjectId> &objects);

struct Subdivision {
  Poset poset;
  /// chains[i] lists the elements of the i-th chain from top to bottom.
  std::vector<std::vector<int>> chains;
};

/// Poset of nonempty chains ordered by inclusion. Chains are numbered by
/// size, then lexicographically.
Subdivision barycentric_subdivision(const Poset &p);

/// Subposet on the given elements (listed in the order they get renumbered).
Poset subposet(const Poset &p, const std::vector<int> &elements);

} // namespace catquot
