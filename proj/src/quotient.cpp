#include "catquot/quotient.hpp"

#include "catquot/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace catquot {

namespace {

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// Keeps the smaller root; returns true on an actual merge.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    parent_[b] = a;
    return true;
  }

private:
  std::vector<int> parent_;
};

} // namespace

QuotientCategory quotient_category(const FiniteCategory &c,
                                   const ActionGroup &a) {
  const int n_mor = c.n_morphisms();
  UnionFind uf(n_mor);
  for (GroupElement g = 0; g < a.order(); ++g)
    for (MorphismId m = 0; m < n_mor; ++m)
      uf.unite(m, a.act_morphism(g, m));

  std::vector<std::pair<MorphismId, MorphismId>> composable;
  for (ObjectId y = 0; y < c.n_objects(); ++y)
    for (ObjectId x = 0; x < c.n_objects(); ++x)
      for (MorphismId g : c.hom(x, y))
        for (ObjectId z = 0; z < c.n_objects(); ++z)
          for (MorphismId f : c.hom(y, z))
            composable.emplace_back(f, g);

  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::pair<int, int>, MorphismId> composite_of;
    for (const auto &[f, g] : composable) {
      const MorphismId fg = c.compose(f, g);
      auto [it, fresh] = composite_of.emplace(
          std::pair{uf.find(f), uf.find(g)}, fg);
      if (!fresh && uf.unite(it->second, fg))
        changed = true;
    }
  }

  QuotientCategory q;
  const Partition orbits = object_orbits(a);
  q.obj_class = orbits.class_of;

  // group morphisms by root
  std::map<int, std::vector<MorphismId>> members;
  for (MorphismId m = 0; m < n_mor; ++m)
    members[uf.find(m)].push_back(m);

  const int n_obj_q = orbits.size();
  std::vector<int> root_id(n_mor, -1);
  std::vector<std::vector<MorphismId>> classes(n_obj_q);
  std::vector<std::pair<MorphismId, int>> nonid; // (least member, root)
  for (const auto &[root, ms] : members) {
    ObjectId ident = -1;
    for (MorphismId m : ms)
      if (c.is_identity(m)) {
        const ObjectId cls = orbits.class_of[m];
        if (ident >= 0 && ident != cls)
          throw InternalError("quotient: identities of different orbits merged "
                              "(morphisms " +
                              std::to_string(ms.front()) + ", " +
                              std::to_string(m) + ")");
        ident = cls;
      }
    if (ident >= 0) {
      root_id[root] = ident;
      classes[ident] = ms;
    } else {
      nonid.emplace_back(ms.front(), root);
    }
  }
  for (ObjectId i = 0; i < n_obj_q; ++i)
    if (classes[i].empty())
      throw InternalError("quotient: orbit without identity class");
  std::sort(nonid.begin(), nonid.end());
  for (const auto &[least, root] : nonid) {
    root_id[root] = static_cast<int>(classes.size());
    classes.push_back(members[root]);
  }

  q.mor_class.resize(n_mor);
  for (MorphismId m = 0; m < n_mor; ++m)
    q.mor_class[m] = root_id[uf.find(m)];

  const std::size_t k = classes.size();
  std::vector<Endpoints> ends(k);
  for (std::size_t i = 0; i < k; ++i) {
    const MorphismId rep = classes[i].front();
    ends[i] = {q.obj_class[c.source(rep)], q.obj_class[c.target(rep)]};
    for (MorphismId m : classes[i])
      if (q.obj_class[c.source(m)] != ends[i].source ||
          q.obj_class[c.target(m)] != ends[i].target)
        throw InternalError("quotient: class of morphism " +
                            std::to_string(rep) +
                            " has members with different endpoint orbits (" +
                            std::to_string(m) + ")");
  }

  // [x]∘[y] = [x∘y] for representatives aligned inside the G-stable classes
  std::vector<MorphismId> table(k * k, kUndefined);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (ends[i].source != ends[j].target)
        continue;
      const MorphismId x = classes[i].front();
      for (MorphismId y : classes[j])
        if (c.target(y) == c.source(x)) {
          table[i * k + j] = q.mor_class[c.compose(x, y)];
          break;
        }
      if (table[i * k + j] == kUndefined)
        throw InternalError("quotient: no aligned representatives for classes " +
                            std::to_string(i) + ", " + std::to_string(j));
    }

  q.category = FiniteCategory(n_obj_q, std::move(ends), std::move(table));
  q.projection = {q.obj_class, q.mor_class};

  const ValidationReport laws = validate_category(q.category);
  if (!laws.ok())
    throw InternalError("quotient: result violates " + laws.violations[0].law);
  for (const auto &[f, g] : composable)
    if (q.category.compose(q.mor_class[f], q.mor_class[g]) !=
        q.mor_class[c.compose(f, g)])
      throw InternalError("quotient: composition depends on representatives (" +
                          std::to_string(f) + ", " + std::to_string(g) + ")");
  return q;
}

Poset poset_quotient(const Poset &p, const ActionGroup &a) {
  const Partition orbits = object_orbits(a);
  std::vector<std::pair<int, int>> rel;
  for (const auto &[x, y] : p.strict_relations()) {
    const int cx = orbits.class_of[x], cy = orbits.class_of[y];
    if (cx == cy)
      throw InputError("poset quotient is not a poset: orbit " +
                       std::to_string(cx) + " is comparable to itself");
    rel.emplace_back(cx, cy);
  }
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  try {
    return Poset::from_relations(orbits.size(), rel);
  } catch (const InputError &e) {
    throw InputError(std::string("poset quotient is not a poset: ") + e.what());
  }
}

bool is_quotient_poset(const QuotientCategory &q) {
  return is_poset_category(q.category);
}

} // namespace catquot
