#include "catquot/category.hpp"

#include "catquot/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace catquot {

FiniteCategory::FiniteCategory(int n_objects, std::vector<Endpoints> morphisms,
                               std::vector<MorphismId> composition)
    : n_objects_(n_objects), morphisms_(std::move(morphisms)),
      composition_(std::move(composition)) {
  const int n_mor = static_cast<int>(morphisms_.size());
  if (n_objects_ < 0 || n_mor < n_objects_)
    throw InputError("category: fewer morphisms than objects");
  if (composition_.size() != static_cast<std::size_t>(n_mor) * n_mor)
    throw InputError("category: composition table has wrong size");
  for (int m = 0; m < n_mor; ++m) {
    const auto [s, t] = morphisms_[m];
    if (s < 0 || s >= n_objects_ || t < 0 || t >= n_objects_)
      throw InputError("category: morphism " + std::to_string(m) +
                       " has an endpoint out of range");
    if (m < n_objects_ && (s != m || t != m))
      throw InputError("category: morphism " + std::to_string(m) +
                       " must be the identity of object " + std::to_string(m));
  }
  for (MorphismId h : composition_)
    if (h != kUndefined && (h < 0 || h >= n_mor))
      throw InputError("category: composite out of range");

  hom_.assign(static_cast<std::size_t>(n_objects_) * n_objects_, {});
  outgoing_.assign(n_objects_, {});
  incoming_.assign(n_objects_, {});
  for (int m = 0; m < n_mor; ++m) {
    const auto [s, t] = morphisms_[m];
    hom_[static_cast<std::size_t>(s) * n_objects_ + t].push_back(m);
    if (m >= n_objects_) {
      outgoing_[s].push_back(m);
      incoming_[t].push_back(m);
    }
  }
}

FiniteCategory FiniteCategory::from_parts(
    int n_objects, const std::vector<Endpoints> &nonidentity,
    const std::vector<std::tuple<MorphismId, MorphismId, MorphismId>>
        &composites) {
  std::vector<Endpoints> mors;
  mors.reserve(n_objects + nonidentity.size());
  for (int x = 0; x < n_objects; ++x)
    mors.push_back({x, x});
  mors.insert(mors.end(), nonidentity.begin(), nonidentity.end());
  const std::size_t n_mor = mors.size();
  std::vector<MorphismId> table(n_mor * n_mor, kUndefined);
  for (std::size_t m = 0; m < n_mor; ++m) {
    const auto [s, t] = mors[m];
    if (s < 0 || s >= n_objects || t < 0 || t >= n_objects)
      throw InputError("category: morphism " + std::to_string(m) +
                       " has an endpoint out of range");
    table[static_cast<std::size_t>(t) * n_mor + m] = static_cast<int>(m);
    table[m * n_mor + s] = static_cast<int>(m);
  }
  for (const auto &[f, g, h] : composites) {
    const auto in_range = [&](int v) {
      return v >= 0 && static_cast<std::size_t>(v) < n_mor;
    };
    if (!in_range(f) || !in_range(g) || !in_range(h))
      throw InputError("category: composite refers to an unknown morphism");
    table[static_cast<std::size_t>(f) * n_mor + g] = h;
  }
  return FiniteCategory(n_objects, std::move(mors), std::move(table));
}

// ---------------------------------------------------------------------------
// Poset

Poset Poset::from_relations(int n,
                            const std::vector<std::pair<int, int>> &greater) {
  if (n < 0)
    throw InputError("poset: negative size");
  Poset p;
  p.n_ = n;
  p.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    p.leq_[p.index(a, a)] = 1;
  for (const auto &[a, b] : greater) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw InputError("poset: relation " + std::to_string(a) + " > " +
                       std::to_string(b) + " out of range");
    if (a == b)
      throw InputError("poset: relation " + std::to_string(a) + " > " +
                       std::to_string(a) + " is not strict");
    p.leq_[p.index(b, a)] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.leq_[p.index(i, k)])
        for (int j = 0; j < n; ++j)
          if (p.leq_[p.index(k, j)])
            p.leq_[p.index(i, j)] = 1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (p.leq(a, b) && p.leq(b, a))
        throw InputError("poset: relations are not antisymmetric (" +
                         std::to_string(a) + " and " + std::to_string(b) +
                         " lie on a cycle)");
  return p;
}

Poset Poset::from_matrix(int n, std::vector<char> leq) {
  if (n < 0 || leq.size() != static_cast<std::size_t>(n) * n)
    throw InputError("poset: matrix has wrong size");
  Poset p;
  p.n_ = n;
  p.leq_ = std::move(leq);
  for (int a = 0; a < n; ++a) {
    if (!p.leq(a, a))
      throw InputError("poset: not reflexive at " + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      if (a != b && p.leq(a, b) && p.leq(b, a))
        throw InputError("poset: not antisymmetric at " + std::to_string(a) +
                         ", " + std::to_string(b));
      for (int c = 0; c < n; ++c)
        if (p.leq(a, b) && p.leq(b, c) && !p.leq(a, c))
          throw InputError("poset: not transitive at " + std::to_string(a) +
                           ", " + std::to_string(b) + ", " +
                           std::to_string(c));
    }
  }
  return p;
}

std::vector<std::pair<int, int>> Poset::strict_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (greater(a, b))
        out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (const auto &[a, b] : strict_relations()) {
    bool cover = true;
    for (int c = 0; c < n_ && cover; ++c)
      if (greater(a, c) && greater(c, b))
        cover = false;
    if (cover)
      out.emplace_back(a, b);
  }
  return out;
}

int Poset::height() const {
  // longest[a] = elements of the longest chain with top a
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> below(n_, 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      below[a] += less(b, a) ? 1 : 0;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return below[a] < below[b]; });
  std::vector<int> longest(n_, 1);
  int best = 0;
  for (int a : order) {
    for (int b = 0; b < n_; ++b)
      if (less(b, a))
        longest[a] = std::max(longest[a], longest[b] + 1);
    best = std::max(best, longest[a]);
  }
  return best;
}

Poset subposet(const Poset &p, const std::vector<int> &elements) {
  const int k = static_cast<int>(elements.size());
  std::vector<char> leq(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      leq[static_cast<std::size_t>(i) * k + j] =
          p.leq(elements[i], elements[j]) ? 1 : 0;
  return Poset::from_matrix(k, std::move(leq));
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_category(const FiniteCategory &c) {
  ValidationReport report;
  auto fail = [&](std::string law, std::vector<int> witness) {
    report.violations.push_back({std::move(law), std::move(witness)});
  };
  const int n_mor = c.n_morphisms();
  bool total = true;
  for (int f = 0; f < n_mor; ++f)
    for (int g = 0; g < n_mor; ++g) {
      const MorphismId h = c.compose(f, g);
      if (!c.composable(f, g)) {
        if (h != kUndefined)
          fail("composition defined on non-composable pair", {f, g});
        continue;
      }
      if (h == kUndefined) {
        fail("composition not total", {f, g});
        total = false;
        continue;
      }
      if (c.source(h) != c.source(g) || c.target(h) != c.target(f))
        fail("composition endpoints", {f, g, h});
    }
  for (int m = 0; m < n_mor; ++m) {
    if (c.compose(c.identity(c.target(m)), m) != m)
      fail("left identity", {m});
    if (c.compose(m, c.identity(c.source(m))) != m)
      fail("right identity", {m});
  }
  if (!total || !report.ok())
    return report;
  // associativity over composable triples (h first, then g, then f)
  for (int f = 0; f < n_mor; ++f)
    for (int g = 0; g < n_mor; ++g) {
      if (!c.composable(f, g))
        continue;
      const MorphismId fg = c.compose(f, g);
      for (int h = 0; h < n_mor; ++h) {
        if (!c.composable(g, h))
          continue;
        if (c.compose(fg, h) != c.compose(f, c.compose(g, h)))
          fail("associativity", {f, g, h});
      }
    }
  return report;
}

ValidationReport validate_functor(const FiniteCategory &from,
                                  const FiniteCategory &to,
                                  const CatFunctor &f) {
  ValidationReport report;
  auto fail = [&](std::string law, std::vector<int> witness) {
    report.violations.push_back({std::move(law), std::move(witness)});
  };
  if (f.obj_map.size() != static_cast<std::size_t>(from.n_objects()) ||
      f.mor_map.size() != static_cast<std::size_t>(from.n_morphisms())) {
    fail("functor map size", {});
    return report;
  }
  for (int x = 0; x < from.n_objects(); ++x)
    if (f.obj_map[x] < 0 || f.obj_map[x] >= to.n_objects())
      fail("functor object out of range", {x});
  for (int m = 0; m < from.n_morphisms(); ++m)
    if (f.mor_map[m] < 0 || f.mor_map[m] >= to.n_morphisms())
      fail("functor morphism out of range", {m});
  if (!report.ok())
    return report;
  for (int x = 0; x < from.n_objects(); ++x)
    if (f.mor_map[x] != to.identity(f.obj_map[x]))
      fail("functor preserves identities", {x});
  for (int m = 0; m < from.n_morphisms(); ++m) {
    const MorphismId fm = f.mor_map[m];
    if (to.source(fm) != f.obj_map[from.source(m)] ||
        to.target(fm) != f.obj_map[from.target(m)])
      fail("functor preserves endpoints", {m});
  }
  if (!report.ok())
    return report;
  for (int a = 0; a < from.n_morphisms(); ++a)
    for (int b = 0; b < from.n_morphisms(); ++b) {
      if (!from.composable(a, b))
        continue;
      const MorphismId ab = from.compose(a, b);
      if (ab == kUndefined)
        continue;
      if (f.mor_map[ab] != to.compose(f.mor_map[a], f.mor_map[b]))
        fail("functor preserves composition", {a, b});
    }
  return report;
}

// ---------------------------------------------------------------------------
// Posets as categories

FiniteCategory category_from_poset(const Poset &p) {
  const int n = p.size();
  std::vector<Endpoints> nonid;
  std::map<std::pair<int, int>, MorphismId> id_of;
  for (int x = 0; x < n; ++x)
    id_of[{x, x}] = x;
  for (const auto &[a, b] : p.strict_relations()) {
    id_of[{a, b}] = n + static_cast<int>(nonid.size());
    nonid.push_back({a, b});
  }
  std::vector<std::tuple<MorphismId, MorphismId, MorphismId>> comps;
  // f: a -> b after g: c -> a gives c -> b
  for (const auto &[f_ends, f] : id_of)
    for (const auto &[g_ends, g] : id_of) {
      if (g_ends.second != f_ends.first)
        continue;
      comps.emplace_back(f, g, id_of.at({g_ends.first, f_ends.second}));
    }
  return FiniteCategory::from_parts(n, nonid, comps);
}

LoopfreeReport is_loopfree(const FiniteCategory &c) {
  const int n = c.n_objects();
  for (int x = 0; x < n; ++x) {
    if (c.hom(x, x).size() > 1)
      return {false, std::pair{x, x}};
    for (int y = x + 1; y < n; ++y)
      if (!c.hom(x, y).empty() && !c.hom(y, x).empty())
        return {false, std::pair{x, y}};
  }
  return {};
}

bool is_poset_category(const FiniteCategory &c) {
  for (int x = 0; x < c.n_objects(); ++x)
    for (int y = 0; y < c.n_objects(); ++y)
      if (c.hom(x, y).size() > 1)
        return false;
  return is_loopfree(c).loopfree;
}

Poset underlying_order(const FiniteCategory &c) {
  if (!is_loopfree(c).loopfree)
    throw PreconditionError("underlying_order: category is not loopfree");
  std::vector<std::pair<int, int>> rel;
  for (int m = c.n_objects(); m < c.n_morphisms(); ++m)
    rel.emplace_back(c.source(m), c.target(m));
  return Poset::from_relations(c.n_objects(), rel);
}

int longest_chain(const FiniteCategory &c) {
  if (!is_loopfree(c).loopfree)
    throw PreconditionError(
        "longest_chain: category has a nonidentity cycle (chains unbounded)");
  const int n = c.n_objects();
  // memoized longest path (in morphisms) starting at x
  std::vector<int> memo(n, -1);
  std::function<int(int)> from = [&](int x) {
    if (memo[x] >= 0)
      return memo[x];
    int best = 0;
    for (MorphismId m : c.outgoing(x))
      best = std::max(best, 1 + from(c.target(m)));
    return memo[x] = best;
  };
  int best = 0;
  for (int x = 0; x < n; ++x)
    best = std::max(best, from(x));
  return best;
}

Subcategory make_subcategory(const FiniteCategory &c,
                             const std::vector<ObjectId> &objects,
                             const std::vector<MorphismId> &morphisms) {
  std::vector<int> obj_index(c.n_objects(), -1);
  for (std::size_t i = 0; i < objects.size(); ++i)
    obj_index[objects[i]] = static_cast<int>(i);
  std::vector<MorphismId> nonid;
  for (MorphismId m : morphisms)
    if (!c.is_identity(m))
      nonid.push_back(m);
  std::sort(nonid.begin(), nonid.end());
  nonid.erase(std::unique(nonid.begin(), nonid.end()), nonid.end());

  Subcategory sub;
  sub.objects = objects;
  for (ObjectId x : objects)
    sub.morphisms.push_back(c.identity(x));
  sub.morphisms.insert(sub.morphisms.end(), nonid.begin(), nonid.end());

  std::vector<int> mor_index(c.n_morphisms(), -1);
  std::vector<Endpoints> ends;
  for (std::size_t i = 0; i < sub.morphisms.size(); ++i) {
    const MorphismId m = sub.morphisms[i];
    mor_index[m] = static_cast<int>(i);
    const int s = obj_index[c.source(m)], t = obj_index[c.target(m)];
    if (s < 0 || t < 0)
      throw InternalError("subcategory: morphism " + std::to_string(m) +
                          " leaves the object set");
    ends.push_back({s, t});
  }
  const std::size_t k = sub.morphisms.size();
  std::vector<MorphismId> table(k * k, kUndefined);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const MorphismId f = sub.morphisms[i], g = sub.morphisms[j];
      if (!c.composable(f, g))
        continue;
      const MorphismId h = c.compose(f, g);
      if (h == kUndefined)
        continue;
      if (mor_index[h] < 0)
        throw InternalError("subcategory: not closed under composition");
      table[i * k + j] = mor_index[h];
    }
  sub.category = FiniteCategory(static_cast<int>(objects.size()),
                                std::move(ends), std::move(table));
  return sub;
}

Subcategory induced_subcategory(const FiniteCategory &c,
                                const std::vector<ObjectId> &objects) {
  std::vector<MorphismId> mors;
  for (ObjectId x : objects)
    for (ObjectId y : objects)
      for (MorphismId m : c.hom(x, y))
        mors.push_back(m);
  return make_subcategory(c, objects, mors);
}

Subdivision barycentric_subdivision(const Poset &p) {
  const int n = p.size();
  std::vector<std::vector<int>> chains;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int top) {
    current.push_back(top);
    chains.push_back(current);
    for (int b = 0; b < n; ++b)
      if (p.greater(top, b))
        extend(b);
    current.pop_back();
  };
  for (int a = 0; a < n; ++a)
    extend(a);
  std::sort(chains.begin(), chains.end(), [](const auto &x, const auto &y) {
    if (x.size() != y.size())
      return x.size() < y.size();
    return x < y;
  });

  const int k = static_cast<int>(chains.size());
  std::vector<std::vector<int>> sorted = chains;
  for (auto &ch : sorted)
    std::sort(ch.begin(), ch.end());
  std::vector<char> leq(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      leq[static_cast<std::size_t>(i) * k + j] =
          std::includes(sorted[j].begin(), sorted[j].end(), sorted[i].begin(),
                        sorted[i].end())
              ? 1
              : 0;
  return {Poset::from_matrix(k, std::move(leq)), std::move(chains)};
}

} // namespace catquot
