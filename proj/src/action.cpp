#include "catquot/action.hpp"

#include "catquot/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace catquot {

namespace {

CatAutomorphism compose_automorphisms(const CatAutomorphism &g,
                                      const CatAutomorphism &h) {
  CatAutomorphism out;
  out.obj_map.resize(h.obj_map.size());
  out.mor_map.resize(h.mor_map.size());
  for (std::size_t x = 0; x < h.obj_map.size(); ++x)
    out.obj_map[x] = g.obj_map[h.obj_map[x]];
  for (std::size_t m = 0; m < h.mor_map.size(); ++m)
    out.mor_map[m] = g.mor_map[h.mor_map[m]];
  return out;
}

std::string describe(const ValidationReport &r) {
  std::string out;
  for (const auto &v : r.violations) {
    if (!out.empty())
      out += "; ";
    out += v.law;
    for (int w : v.witness)
      out += " " + std::to_string(w);
  }
  return out;
}

} // namespace

ActionGroup::ActionGroup(std::shared_ptr<const FiniteCategory> target,
                         std::vector<CatAutomorphism> elements)
    : target_(std::move(target)), elements_(std::move(elements)) {
  if (elements_.empty() || elements_[0] != identity_automorphism(*target_))
    throw InternalError("action group: element 0 must be the identity");
  std::map<std::vector<MorphismId>, GroupElement> index;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (!index.emplace(elements_[i].mor_map, static_cast<int>(i)).second)
      throw InternalError("action group: duplicate element");
  const std::size_t n = elements_.size();
  mult_.resize(n * n);
  inv_.assign(n, -1);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const auto it =
          index.find(compose_automorphisms(elements_[g], elements_[h]).mor_map);
      if (it == index.end())
        throw InternalError("action group: elements not closed under product");
      mult_[g * n + h] = it->second;
      if (it->second == 0)
        inv_[g] = static_cast<int>(h);
    }
}

std::optional<GroupElement> ActionGroup::find(const CatAutomorphism &a) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].mor_map == a.mor_map)
      return static_cast<int>(i);
  return std::nullopt;
}

ValidationReport validate_automorphism(const FiniteCategory &c,
                                       const CatAutomorphism &a) {
  ValidationReport r = validate_functor(c, c, a);
  if (!r.ok())
    return r;
  std::vector<char> seen(c.n_objects(), 0);
  for (int x = 0; x < c.n_objects(); ++x) {
    if (seen[a.obj_map[x]]) {
      r.violations.push_back({"automorphism not bijective on objects", {x}});
      return r;
    }
    seen[a.obj_map[x]] = 1;
  }
  std::vector<char> seen_m(c.n_morphisms(), 0);
  for (int m = 0; m < c.n_morphisms(); ++m) {
    if (seen_m[a.mor_map[m]]) {
      r.violations.push_back({"automorphism not bijective on morphisms", {m}});
      return r;
    }
    seen_m[a.mor_map[m]] = 1;
  }
  return r;
}

CatAutomorphism identity_automorphism(const FiniteCategory &c) {
  CatAutomorphism a;
  a.obj_map.resize(c.n_objects());
  a.mor_map.resize(c.n_morphisms());
  for (int x = 0; x < c.n_objects(); ++x)
    a.obj_map[x] = x;
  for (int m = 0; m < c.n_morphisms(); ++m)
    a.mor_map[m] = m;
  return a;
}

CatAutomorphism automorphism_from_object_permutation(const FiniteCategory &c,
                                                     const std::vector<int> &perm) {
  if (perm.size() != static_cast<std::size_t>(c.n_objects()))
    throw InputError("permutation has " + std::to_string(perm.size()) +
                     " entries, expected " + std::to_string(c.n_objects()));
  for (int v : perm)
    if (v < 0 || v >= c.n_objects())
      throw InputError("permutation entry " + std::to_string(v) +
                       " out of range");
  CatAutomorphism a;
  a.obj_map = perm;
  a.mor_map.resize(c.n_morphisms());
  for (int m = 0; m < c.n_morphisms(); ++m) {
    const auto &image = c.hom(perm[c.source(m)], perm[c.target(m)]);
    if (c.hom(c.source(m), c.target(m)).size() != 1)
      throw InputError("morphism map cannot be inferred: parallel morphisms "
                       "between " +
                       std::to_string(c.source(m)) + " and " +
                       std::to_string(c.target(m)));
    if (image.size() != 1)
      throw InputError("permutation is not order preserving: no unique image "
                       "for morphism " +
                       std::to_string(m));
    a.mor_map[m] = image.front();
  }
  return a;
}

ActionGroup generate_action(std::shared_ptr<const FiniteCategory> c,
                            const std::vector<CatAutomorphism> &generators,
                            std::size_t max_order) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const ValidationReport r = validate_automorphism(*c, generators[i]);
    if (!r.ok())
      throw InputError("generator " + std::to_string(i) +
                       " is not an automorphism: " + describe(r));
  }
  std::vector<CatAutomorphism> elements{identity_automorphism(*c)};
  std::map<std::vector<MorphismId>, int> seen{{elements[0].mor_map, 0}};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int e = queue.front();
    queue.pop_front();
    for (const auto &s : generators) {
      CatAutomorphism next = compose_automorphisms(s, elements[e]);
      if (seen.count(next.mor_map))
        continue;
      if (elements.size() >= max_order)
        throw InputError("group closure exceeds the size bound of " +
                         std::to_string(max_order));
      seen.emplace(next.mor_map, static_cast<int>(elements.size()));
      queue.push_back(static_cast<int>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  return ActionGroup(std::move(c), std::move(elements));
}

ActionGroup generate_action(const FiniteCategory &c,
                            const std::vector<CatAutomorphism> &generators,
                            std::size_t max_order) {
  return generate_action(std::make_shared<const FiniteCategory>(c), generators,
                         max_order);
}

namespace {

Partition orbits_of(const ActionGroup &a, int n, bool objects) {
  Partition p;
  p.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (p.class_of[x] >= 0)
      continue;
    std::vector<int> orbit;
    for (GroupElement g = 0; g < a.order(); ++g)
      orbit.push_back(objects ? a.act_object(g, x) : a.act_morphism(g, x));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (int y : orbit)
      p.class_of[y] = p.size();
    p.classes.push_back(std::move(orbit));
  }
  return p;
}

} // namespace

Partition object_orbits(const ActionGroup &a) {
  return orbits_of(a, a.target().n_objects(), true);
}

Partition morphism_orbits(const ActionGroup &a) {
  return orbits_of(a, a.target().n_morphisms(), false);
}

std::vector<GroupElement> object_stabilizer(const ActionGroup &a, ObjectId x) {
  std::vector<GroupElement> out;
  for (GroupElement g = 0; g < a.order(); ++g)
    if (a.act_object(g, x) == x)
      out.push_back(g);
  return out;
}

std::vector<GroupElement> morphism_stabilizer(const ActionGroup &a,
                                              MorphismId m) {
  std::vector<GroupElement> out;
  for (GroupElement g = 0; g < a.order(); ++g)
    if (a.act_morphism(g, m) == m)
      out.push_back(g);
  return out;
}

namespace {

ActionGroup from_subset(const ActionGroup &a,
                        const std::vector<GroupElement> &subset) {
  std::vector<CatAutomorphism> elems;
  for (GroupElement g : subset)
    elems.push_back(a.element(g));
  return ActionGroup(a.target_ptr(), std::move(elems));
}

} // namespace

ActionGroup stabilizer_of_object(const ActionGroup &a, ObjectId x) {
  return from_subset(a, object_stabilizer(a, x));
}

ActionGroup stabilizer_of_morphism(const ActionGroup &a, MorphismId m) {
  return from_subset(a, morphism_stabilizer(a, m));
}

ActionGroup subgroup_action(const ActionGroup &a,
                            const std::vector<GroupElement> &generators) {
  std::vector<CatAutomorphism> gens;
  for (GroupElement g : generators)
    gens.push_back(a.element(g));
  return generate_action(a.target_ptr(), gens);
}

bool is_subgroup(const ActionGroup &a, const std::vector<GroupElement> &subset) {
  std::vector<char> in(a.order(), 0);
  for (GroupElement g : subset) {
    if (g < 0 || g >= a.order())
      return false;
    in[g] = 1;
  }
  if (!in[ActionGroup::identity()])
    return false;
  for (GroupElement g : subset)
    for (GroupElement h : subset)
      if (!in[a.mult(g, h)])
        return false;
  return true;
}

HorizontalReport is_horizontal(const ActionGroup &a) {
  const FiniteCategory &c = a.target();
  for (GroupElement g = 0; g < a.order(); ++g)
    for (ObjectId x = 0; x < c.n_objects(); ++x) {
      const ObjectId gx = a.act_object(g, x);
      if (gx != x && (!c.hom(x, gx).empty() || !c.hom(gx, x).empty()))
        return {false, std::pair{g, x}};
    }
  return {};
}

Subcategory fixed_subcategory(const FiniteCategory &c,
                              const CatAutomorphism &g) {
  std::vector<ObjectId> objects;
  for (ObjectId x = 0; x < c.n_objects(); ++x)
    if (g.obj_map[x] == x)
      objects.push_back(x);
  std::vector<MorphismId> mors;
  for (MorphismId m = 0; m < c.n_morphisms(); ++m)
    if (g.mor_map[m] == m)
      mors.push_back(m);
  return make_subcategory(c, objects, mors);
}

RestrictedAction restrict_action(const ActionGroup &a,
                                 const std::vector<ObjectId> &objects) {
  const FiniteCategory &c = a.target();
  std::vector<char> in(c.n_objects(), 0);
  for (ObjectId x : objects)
    in[x] = 1;
  for (GroupElement g = 0; g < a.order(); ++g)
    for (ObjectId x : objects)
      if (!in[a.act_object(g, x)])
        throw PreconditionError("restrict_action: object set is not stable (" +
                                std::to_string(x) + " is moved outside by "
                                "element " + std::to_string(g) + ")");
  Subcategory sub = induced_subcategory(c, objects);

  std::vector<int> obj_index(c.n_objects(), -1), mor_index(c.n_morphisms(), -1);
  for (std::size_t i = 0; i < sub.objects.size(); ++i)
    obj_index[sub.objects[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < sub.morphisms.size(); ++i)
    mor_index[sub.morphisms[i]] = static_cast<int>(i);

  std::vector<CatAutomorphism> elems;
  std::map<std::vector<MorphismId>, GroupElement> seen;
  std::vector<GroupElement> image(a.order());
  for (GroupElement g = 0; g < a.order(); ++g) {
    CatAutomorphism r;
    for (ObjectId x : sub.objects)
      r.obj_map.push_back(obj_index[a.act_object(g, x)]);
    for (MorphismId m : sub.morphisms)
      r.mor_map.push_back(mor_index[a.act_morphism(g, m)]);
    auto [it, fresh] =
        seen.emplace(r.mor_map, static_cast<GroupElement>(elems.size()));
    if (fresh)
      elems.push_back(std::move(r));
    image[g] = it->second;
  }
  auto target = std::make_shared<const FiniteCategory>(sub.category);
  return {std::move(sub), ActionGroup(std::move(target), std::move(elems)),
          std::move(image)};
}

} // namespace catquot
