#pragma once

// Bounded posets built from fuzz instances, for the lattice sum identity.

#include "catquot/formulas.hpp"
#include "catquot/fuzz.hpp"
#include "catquot/named.hpp"

#include <algorithm>
#include <vector>

namespace testlat {

using namespace catquot;

struct BoundedInstance {
  LabeledLattice lattice;
  std::vector<std::vector<int>> generators;
};

/// Adjoins 0̂ (id n) and 1̂ (id n+1) to the instance's poset; every
/// generator fixes both. An element is labeled by the length of the longest
/// chain from it up to 1̂, so labels drop going up.
inline BoundedInstance bounded(const Instance &inst) {
  const int n = inst.poset.size();
  auto rels = inst.poset.strict_relations();
  for (int x = 0; x < n; ++x) {
    rels.emplace_back(x, n);
    rels.emplace_back(n + 1, x);
  }
  rels.emplace_back(n + 1, n);
  Poset p = Poset::from_relations(n + 2, rels);

  std::vector<int> depth(n + 2, 0);
  // process elements from the top down: a larger element has more below it
  std::vector<int> order(n + 2);
  for (int x = 0; x < n + 2; ++x)
    order[x] = x;
  auto below = [&](int x) {
    int k = 0;
    for (int y = 0; y < n + 2; ++y)
      k += p.less(y, x);
    return k;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return below(a) > below(b); });
  for (int x : order)
    for (int y = 0; y < n + 2; ++y)
      if (p.less(x, y))
        depth[x] = std::max(depth[x], depth[y] + 1);

  BoundedInstance b{make_labeled_lattice(std::move(p), depth), {}};
  for (auto g : inst.generators) {
    g.push_back(n);
    g.push_back(n + 1);
    b.generators.push_back(std::move(g));
  }
  return b;
}

} // namespace testlat
