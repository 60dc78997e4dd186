#include "catquot/conditions.hpp"

#include "catquot/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catquot {

namespace {

/// Fixed-size set of group elements.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(int n, bool full = false)
      : n_(n), words_((n + 63) / 64, full ? ~std::uint64_t{0} : 0) {
    if (full && n % 64 != 0)
      words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  }
  void insert(int g) { words_[g / 64] |= std::uint64_t{1} << (g % 64); }
  bool contains(int g) const { return (words_[g / 64] >> (g % 64)) & 1U; }
  ElementSet &operator&=(const ElementSet &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  template <class F> void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ActionTables {
  Partition mor_orbits;
  std::vector<ElementSet> mor_stab;
};

ActionTables tables_for(const ActionGroup &a) {
  ActionTables t;
  t.mor_orbits = morphism_orbits(a);
  const int n_mor = a.target().n_morphisms();
  t.mor_stab.assign(n_mor, ElementSet(a.order()));
  for (GroupElement g = 0; g < a.order(); ++g)
    for (MorphismId m = 0; m < n_mor; ++m)
      if (a.act_morphism(g, m) == m)
        t.mor_stab[m].insert(g);
  return t;
}

/// All morphisms with source x in increasing id order (identity first).
std::vector<std::vector<MorphismId>> morphisms_from(const FiniteCategory &c) {
  std::vector<std::vector<MorphismId>> out(c.n_objects());
  for (ObjectId x = 0; x < c.n_objects(); ++x) {
    out[x].push_back(c.identity(x));
    for (MorphismId m : c.outgoing(x))
      out[x].push_back(m);
  }
  return out;
}

/// Depth-first search over literal chains of a fixed length starting at a
/// given first morphism; returns the first failing (chain, m_a, m_b).
class ChainSearch {
public:
  ChainSearch(const FiniteCategory &c, const ActionGroup &a,
              const ActionTables &tables,
              const std::vector<std::vector<MorphismId>> &from, int length)
      : c_(c), a_(a), tables_(tables), from_(from), length_(length) {}

  std::optional<std::vector<int>> first_failure(MorphismId first) {
    chain_.assign(1, first);
    return extend(tables_.mor_stab[first]);
  }

private:
  std::optional<std::vector<int>> extend(const ElementSet &stab) {
    if (static_cast<int>(chain_.size()) == length_)
      return check_end(stab);
    for (MorphismId m : from_[c_.target(chain_.back())]) {
      ElementSet next = stab;
      next &= tables_.mor_stab[m];
      chain_.push_back(m);
      auto w = extend(next);
      chain_.pop_back();
      if (w)
        return w;
    }
    return std::nullopt;
  }

  std::optional<std::vector<int>> check_end(const ElementSet &stab) {
    const ObjectId end = c_.target(chain_.back());
    const auto &outs = c_.outgoing(end);
    for (MorphismId ma : outs) {
      std::vector<char> reached(c_.n_morphisms(), 0);
      stab.for_each([&](int g) { reached[a_.act_morphism(g, ma)] = 1; });
      const int orbit = tables_.mor_orbits.class_of[ma];
      for (MorphismId mb : outs) {
        if (mb == ma || tables_.mor_orbits.class_of[mb] != orbit ||
            reached[mb])
          continue;
        std::vector<int> w = chain_;
        w.push_back(ma);
        w.push_back(mb);
        return w;
      }
    }
    return std::nullopt;
  }

  const FiniteCategory &c_;
  const ActionGroup &a_;
  const ActionTables &tables_;
  const std::vector<std::vector<MorphismId>> &from_;
  int length_;
  std::vector<MorphismId> chain_;
};

ConditionReport ct_report(int t, std::optional<std::vector<int>> witness) {
  ConditionReport r;
  r.condition = "C" + std::to_string(t);
  r.t = t;
  if (witness) {
    r.verdict = false;
    r.witness = std::move(*witness);
  }
  return r;
}

void require_level(int t) {
  if (t < 2)
    throw PreconditionError("condition (C_t) needs t >= 2, got " +
                            std::to_string(t));
}

} // namespace

ConditionReport check_R(const FiniteCategory &c, const ActionGroup &a) {
  const Partition orbits = morphism_orbits(a);
  ConditionReport r;
  r.condition = "R";
  for (MorphismId x = 0; x < c.n_morphisms(); ++x) {
    const ObjectId end = c.target(x);
    std::vector<MorphismId> next{c.identity(end)};
    next.insert(next.end(), c.outgoing(end).begin(), c.outgoing(end).end());
    for (MorphismId ya : next)
      for (MorphismId yb : next) {
        if (yb <= ya || orbits.class_of[ya] != orbits.class_of[yb])
          continue;
        if (orbits.class_of[c.compose(ya, x)] !=
            orbits.class_of[c.compose(yb, x)]) {
          r.verdict = false;
          r.witness = {x, ya, yb};
          return r;
        }
      }
  }
  return r;
}

ConditionReport check_Ct_serial(const FiniteCategory &c, const ActionGroup &a,
                                int t) {
  require_level(t);
  const ActionTables tables = tables_for(a);
  const auto from = morphisms_from(c);
  ChainSearch search(c, a, tables, from, t - 1);
  for (MorphismId m1 = 0; m1 < c.n_morphisms(); ++m1)
    if (auto w = search.first_failure(m1))
      return ct_report(t, std::move(w));
  return ct_report(t, std::nullopt);
}

ConditionReport check_Ct(const FiniteCategory &c, const ActionGroup &a,
                         int t) {
  require_level(t);
  const ActionTables tables = tables_for(a);
  const auto from = morphisms_from(c);
  const int n_mor = c.n_morphisms();
  std::vector<std::optional<std::vector<int>>> found(n_mor);
  // Once some m_1 fails, larger starting morphisms cannot give the least
  // witness; `bound` lets threads skip them.
  std::atomic<int> bound{std::numeric_limits<int>::max()};
#pragma omp parallel
  {
    ChainSearch search(c, a, tables, from, t - 1);
#pragma omp for schedule(dynamic, 1)
    for (MorphismId m1 = 0; m1 < n_mor; ++m1) {
      if (m1 > bound.load(std::memory_order_relaxed))
        continue;
      found[m1] = search.first_failure(m1);
      if (found[m1]) {
        int current = bound.load(std::memory_order_relaxed);
        while (m1 < current && !bound.compare_exchange_weak(current, m1))
          ;
      }
    }
  }
  for (MorphismId m1 = 0; m1 < n_mor; ++m1)
    if (found[m1])
      return ct_report(t, std::move(found[m1]));
  return ct_report(t, std::nullopt);
}

ConditionReport check_C(const FiniteCategory &c, const ActionGroup &a) {
  if (!is_loopfree(c).loopfree)
    throw PreconditionError(
        "condition (C) needs a loopfree category (chains are unbounded)");
  const int top = std::max(2, longest_chain(c) + 1);
  ConditionReport r;
  r.condition = "C";
  for (int t = 2; t <= top; ++t) {
    ConditionReport level = check_Ct(c, a, t);
    if (!level.verdict && r.verdict) {
      r.verdict = false;
      r.t = t;
      r.witness = level.witness;
    }
    r.per_level.push_back(std::move(level));
  }
  return r;
}

namespace {

void require_family(const FiniteCategory &c, const ActionGroup &a,
                    const SubgroupFamily &family) {
  if (family.size() != static_cast<std::size_t>(c.n_morphisms()))
    throw PreconditionError("family must have one subgroup per morphism (" +
                            std::to_string(c.n_morphisms()) + "), got " +
                            std::to_string(family.size()));
  for (MorphismId m = 0; m < c.n_morphisms(); ++m) {
    if (!std::is_sorted(family[m].begin(), family[m].end()))
      throw PreconditionError("family member of morphism " +
                              std::to_string(m) + " is not sorted");
    if (!is_subgroup(a, family[m]))
      throw PreconditionError("family member of morphism " +
                              std::to_string(m) + " is not a subgroup");
    for (GroupElement g : family[m])
      if (a.act_morphism(g, m) != m)
        throw PreconditionError("family member of morphism " +
                                std::to_string(m) +
                                " is not inside its stabilizer (element " +
                                std::to_string(g) + ")");
  }
}

bool contains_all(const std::vector<GroupElement> &outer,
                  const std::vector<GroupElement> &inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

std::optional<ConditionReport>
containment_failure(const FiniteCategory &c, const SubgroupFamily &family) {
  for (MorphismId m = 0; m < c.n_morphisms(); ++m) {
    const ObjectId src = c.source(m);
    const auto &s_src = family[c.identity(src)];
    if (!contains_all(s_src, family[m])) {
      ConditionReport r;
      r.verdict = false;
      r.witness = {m, c.identity(src)};
      r.detail = "part 1";
      return r;
    }
    for (MorphismId into : c.incoming(src))
      if (!contains_all(family[into], s_src)) {
        ConditionReport r;
        r.verdict = false;
        r.witness = {m, into};
        r.detail = "part 1";
        return r;
      }
  }
  return std::nullopt;
}

} // namespace

ConditionReport check_S(const FiniteCategory &c, const ActionGroup &a,
                        const SubgroupFamily &family) {
  require_family(c, a, family);
  if (auto fail = containment_failure(c, family)) {
    fail->condition = "S";
    return *fail;
  }
  ConditionReport r;
  r.condition = "S";
  for (MorphismId m = 0; m < c.n_morphisms(); ++m) {
    const ObjectId src = c.source(m);
    std::vector<char> by_family(c.n_morphisms(), 0);
    for (GroupElement g : family[c.identity(src)])
      by_family[a.act_morphism(g, m)] = 1;
    std::vector<MorphismId> by_stab;
    for (GroupElement g : object_stabilizer(a, src))
      by_stab.push_back(a.act_morphism(g, m));
    std::sort(by_stab.begin(), by_stab.end());
    for (MorphismId mb : by_stab)
      if (!by_family[mb]) {
        r.verdict = false;
        r.witness = {m, mb};
        r.detail = "part 2";
        return r;
      }
  }
  return r;
}

ConditionReport check_strong_S(const FiniteCategory &c, const ActionGroup &a) {
  const SubgroupFamily family = stabilizer_family(a);
  ConditionReport r;
  if (auto fail = containment_failure(c, family))
    r = *fail;
  r.condition = "strong-S";
  return r;
}

ConditionReport check_SR(const FiniteCategory &c, const ActionGroup &a) {
  if (!is_loopfree(c).loopfree)
    throw PreconditionError("condition (SR) needs a loopfree category");
  const Partition obj = object_orbits(a);
  const Partition mor = morphism_orbits(a);
  ConditionReport r;
  r.condition = "SR";
  for (MorphismId x = 0; x < c.n_morphisms(); ++x) {
    const ObjectId src = c.source(x);
    std::vector<MorphismId> same_source{c.identity(src)};
    same_source.insert(same_source.end(), c.outgoing(src).begin(),
                       c.outgoing(src).end());
    for (MorphismId y : same_source) {
      if (y <= x)
        continue;
      if (obj.class_of[c.target(x)] == obj.class_of[c.target(y)] &&
          mor.class_of[x] != mor.class_of[y]) {
        r.verdict = false;
        r.witness = {x, y};
        return r;
      }
    }
  }
  return r;
}

ConditionReport check_SRP(const Poset &p, const ActionGroup &a) {
  const Partition obj = object_orbits(a);
  ConditionReport r;
  r.condition = "SRP";
  const int n = p.size();
  for (int top = 0; top < n; ++top) {
    const auto stab = object_stabilizer(a, top);
    for (int b = 0; b < n; ++b) {
      if (!p.leq(b, top))
        continue;
      std::vector<char> reached(n, 0);
      for (GroupElement g : stab)
        reached[a.act_object(g, b)] = 1;
      for (int c = 0; c < n; ++c)
        if (p.leq(c, top) && obj.class_of[c] == obj.class_of[b] &&
            !reached[c]) {
          r.verdict = false;
          r.witness = {top, b, c};
          return r;
        }
    }
  }
  return r;
}

SubgroupFamily stabilizer_family(const ActionGroup &a) {
  SubgroupFamily f(a.target().n_morphisms());
  for (MorphismId m = 0; m < a.target().n_morphisms(); ++m)
    f[m] = morphism_stabilizer(a, m);
  return f;
}

SubgroupFamily trivial_family(const ActionGroup &a) {
  return SubgroupFamily(a.target().n_morphisms(),
                        std::vector<GroupElement>{ActionGroup::identity()});
}

SubgroupFamily upset_family(const ActionGroup &a) {
  const FiniteCategory &c = a.target();
  SubgroupFamily f(c.n_morphisms());
  for (MorphismId m = 0; m < c.n_morphisms(); ++m) {
    const ObjectId t = c.target(m);
    for (GroupElement g = 0; g < a.order(); ++g) {
      if (a.act_morphism(g, m) != m)
        continue;
      bool fixes_up = true;
      for (ObjectId x = 0; x < c.n_objects() && fixes_up; ++x)
        if (!c.hom(x, t).empty() && a.act_object(g, x) != x)
          fixes_up = false;
      if (fixes_up)
        f[m].push_back(g);
    }
  }
  return f;
}

} // namespace catquot
