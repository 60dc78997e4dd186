#include "catquot/error.hpp"
#include "catquot/fuzz.hpp"
#include "catquot/named.hpp"
#include "catquot/quotient.hpp"

#include <doctest.h>

using namespace catquot;

namespace {

/// Least congruence containing the orbit relation, by iterating a boolean
/// relation matrix to a fixpoint.
std::vector<std::vector<char>> brute_congruence(const FiniteCategory &c, const ActionGroup &a) {
  const int n = c.n_morphisms();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int m = 0; m < n; ++m)
    for (int g = 0; g < a.order(); ++g)
      r[m][a.act_morphism(g, m)] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (r[i][k] && r[k][j] && !r[i][j])
            r[i][j] = changed = true;
    for (int f = 0; f < n; ++f)
      for (int g = 0; g < n; ++g) {
        if (!c.composable(f, g))
          continue;
        for (int f2 = 0; f2 < n; ++f2)
          for (int g2 = 0; g2 < n; ++g2)
            if (r[f][f2] && r[g][g2] && c.composable(f2, g2)) {
              const int h = c.compose(f, g), h2 = c.compose(f2, g2);
              if (!r[h][h2])
                r[h][h2] = r[h2][h] = changed = true;
            }
      }
  }
  return r;
}

void check_against_oracle(const FiniteCategory &c, const ActionGroup &a) {
  const QuotientCategory q = quotient_category(c, a);
  const auto r = brute_congruence(c, a);
  for (int x = 0; x < c.n_morphisms(); ++x)
    for (int y = 0; y < c.n_morphisms(); ++y)
      CHECK((q.mor_class[x] == q.mor_class[y]) == static_cast<bool>(r[x][y]));
  CHECK(validate_category(q.category).ok());
  CHECK(validate_functor(c, q.category, q.projection).ok());
}

} // namespace

TEST_CASE("quotient by the trivial group is the category itself") {
  const PosetAction p = poset_action(boolean_lattice(2).poset, {});
  const auto q = quotient_category(*p.category, p.action);
  CHECK(q.category == *p.category);
  CHECK(is_quotient_poset(q));
}

TEST_CASE("bowtie quotient has two parallel morphisms") {
  const PosetAction b = bowtie();
  const auto q = quotient_category(*b.category, b.action);
  CHECK(q.category.n_objects() == 2);
  CHECK(q.category.n_morphisms() == 4);
  CHECK(q.category.hom(0, 1).size() == 2);
  CHECK(q.mor_class[4] != q.mor_class[5]);
  CHECK_FALSE(is_quotient_poset(q));
  check_against_oracle(*b.category, b.action);
}

TEST_CASE("cube modulo S_3 is the 4-chain") {
  const PosetAction b3 = boolean_lattice(3);
  const auto q = quotient_category(*b3.category, b3.action);
  CHECK(q.category.n_objects() == 4);
  CHECK(q.category.n_morphisms() == 10);
  CHECK(is_quotient_poset(q));
  CHECK(longest_chain(q.category) == 3);
  check_against_oracle(*b3.category, b3.action);
}

TEST_CASE("poset quotients") {
  SUBCASE("trivial group") {
    const PosetAction p = poset_action(bowtie().poset, {});
    CHECK(poset_quotient(p.poset, p.action) == p.poset);
  }
  SUBCASE("bowtie") {
    const PosetAction b = bowtie();
    CHECK(poset_quotient(b.poset, b.action) == Poset::from_relations(2, {{0, 1}}));
  }
  SUBCASE("swapped antichain") {
    const PosetAction p = poset_action(Poset::from_relations(2, {}), {{1, 0}});
    CHECK(poset_quotient(p.poset, p.action).size() == 1);
  }
}

TEST_CASE("quotients agree with the brute-force congruence on random instances") {
  FuzzConfig cfg;
  cfg.max_elements = 6;
  for (int k = 0; k < 40; ++k) {
    const Instance inst = random_instance(11, k, cfg);
    const PosetAction p = poset_action(inst.poset, inst.generators);
    CAPTURE(k);
    check_against_oracle(*p.category, p.action);
  }
}
