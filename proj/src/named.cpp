#include "catquot/named.hpp"

#include <map>
#include <numeric>
#include <utility>

namespace catquot {

PosetAction poset_action(const Poset &p, const std::vector<std::vector<int>> &perms) {
  auto c = std::make_shared<const FiniteCategory>(category_from_poset(p));
  std::vector<CatAutomorphism> gens;
  for (const auto &perm : perms)
    gens.push_back(automorphism_from_object_permutation(*c, perm));
  ActionGroup a = generate_action(c, gens);
  return {p, std::move(c), std::move(a)};
}

SubdivisionAction subdivide(const Poset &p, const ActionGroup &a) {
  Subdivision bd = barycentric_subdivision(p);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < bd.chains.size(); ++i)
    index.emplace(bd.chains[i], static_cast<int>(i));
  std::vector<std::vector<int>> perms;
  for (GroupElement g = 1; g < a.order(); ++g) {
    std::vector<int> perm;
    for (const auto &ch : bd.chains) {
      std::vector<int> img;
      for (int x : ch)
        img.push_back(a.act_object(g, x));
      perm.push_back(index.at(img));
    }
    perms.push_back(std::move(perm));
  }
  PosetAction induced = poset_action(bd.poset, perms);
  return {std::move(bd), std::move(induced)};
}

PosetAction bowtie() {
  const Poset p = Poset::from_relations(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  return poset_action(p, {{1, 0, 3, 2}});
}

PosetAction boolean_lattice(int n) {
  const int size = 1 << n;
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (a != b && (a & b) == b)
        rel.emplace_back(a, b);
  const Poset p = Poset::from_relations(size, rel);

  // adjacent transpositions of the ground set
  std::vector<std::vector<int>> perms;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> perm(size);
    for (int s = 0; s < size; ++s) {
      const int bi = (s >> i) & 1, bj = (s >> (i + 1)) & 1;
      perm[s] = (s & ~(3 << i)) | (bi << (i + 1)) | (bj << i);
    }
    perms.push_back(std::move(perm));
  }
  return poset_action(p, perms);
}

PosetAction stacked_antichains(int levels) {
  const int n = 2 * levels;
  std::vector<std::pair<int, int>> rel;
  for (int k = 1; k < levels; ++k)
    for (int a : {2 * k, 2 * k + 1})
      for (int b : {2 * k - 2, 2 * k - 1})
        rel.emplace_back(a, b);
  const Poset p = Poset::from_relations(n, rel);

  std::vector<std::vector<int>> perms;
  for (int k = 0; k + 1 < levels; ++k) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int j : {k, k + 1})
      std::swap(perm[2 * j], perm[2 * j + 1]);
    perms.push_back(std::move(perm));
  }
  return poset_action(p, perms);
}

LatticeAction partition_lattice_3() {
  Poset p = Poset::from_relations(
      5, {{1, 0}, {2, 0}, {3, 0}, {4, 1}, {4, 2}, {4, 3}});
  PosetAction pa = poset_action(p, {{0, 2, 1, 3, 4}, {0, 1, 3, 2, 4}});
  return {make_labeled_lattice(std::move(p), {3, 2, 2, 2, 1}),
          std::move(pa.category), std::move(pa.action)};
}

} // namespace catquot
