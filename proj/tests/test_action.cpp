#include "catquot/action.hpp"
#include "catquot/error.hpp"
#include "catquot/named.hpp"

#include <doctest.h>

#include <algorithm>

using namespace catquot;

TEST_CASE("group generation") {
  SUBCASE("no generators") {
    const auto c = std::make_shared<const FiniteCategory>(
        category_from_poset(bowtie().poset));
    CHECK(generate_action(c, {}).order() == 1);
  }
  SUBCASE("bowtie swap") { CHECK(bowtie().action.order() == 2); }
  SUBCASE("symmetric group on the cube") { CHECK(boolean_lattice(3).action.order() == 6); }
  SUBCASE("order bound") {
    const PosetAction b4 = boolean_lattice(4);
    std::vector<CatAutomorphism> gens(b4.action.elements().begin() + 1,
                                      b4.action.elements().end());
    CHECK_THROWS_AS(generate_action(b4.category, gens, 5), InputError);
  }
}

TEST_CASE("group tables obey the group laws") {
  const ActionGroup &a = boolean_lattice(3).action;
  for (int g = 0; g < a.order(); ++g) {
    CHECK(a.mult(g, a.inverse(g)) == 0);
    CHECK(a.mult(0, g) == g);
    for (int h = 0; h < a.order(); ++h)
      for (int k = 0; k < a.order(); ++k)
        CHECK(a.mult(a.mult(g, h), k) == a.mult(g, a.mult(h, k)));
  }
  // g*h acts as h first, then g
  for (int g = 0; g < a.order(); ++g)
    for (int h = 0; h < a.order(); ++h)
      for (int x = 0; x < 8; ++x)
        CHECK(a.act_object(a.mult(g, h), x) == a.act_object(g, a.act_object(h, x)));
}

TEST_CASE("orbits") {
  SUBCASE("trivial group") {
    const PosetAction p = poset_action(bowtie().poset, {});
    CHECK(object_orbits(p.action).size() == 4);
  }
  SUBCASE("bowtie") {
    const auto o = object_orbits(bowtie().action);
    REQUIRE(o.size() == 2);
    CHECK(o.classes[0] == std::vector<int>{0, 1});
    CHECK(o.classes[1] == std::vector<int>{2, 3});
  }
  SUBCASE("cube orbits are cardinality classes") {
    const auto o = object_orbits(boolean_lattice(3).action);
    REQUIRE(o.size() == 4);
    for (const auto &cls : o.classes)
      for (int x : cls)
        CHECK(__builtin_popcount(x) == __builtin_popcount(cls.front()));
  }
}

TEST_CASE("stabilizers") {
  const PosetAction b3 = boolean_lattice(3);
  CHECK(object_stabilizer(b3.action, 3).size() == 2); // {0,1}
  CHECK(object_stabilizer(bowtie().action, 0).size() == 1);
  CHECK(object_stabilizer(poset_action(bowtie().poset, {}).action, 2).size() == 1);
  // orbit-stabilizer on every object
  const auto orbits = object_orbits(b3.action);
  for (int x = 0; x < 8; ++x)
    CHECK(orbits.classes[orbits.class_of[x]].size() * object_stabilizer(b3.action, x).size() ==
          static_cast<std::size_t>(b3.action.order()));
}

TEST_CASE("horizontal actions") {
  CHECK(is_horizontal(bowtie().action).horizontal);
  CHECK(is_horizontal(boolean_lattice(3).action).horizontal);

  // mutually inverse morphisms between two objects, exchanged by the swap
  const auto c = std::make_shared<const FiniteCategory>(
      FiniteCategory::from_parts(2, {{0, 1}, {1, 0}}, {{2, 3, 1}, {3, 2, 0}}));
  const CatAutomorphism swap{{1, 0}, {1, 0, 3, 2}};
  REQUIRE(validate_automorphism(*c, swap).ok());
  const auto r = is_horizontal(generate_action(c, {swap}));
  CHECK_FALSE(r.horizontal);
}

TEST_CASE("fixed subcategories") {
  const PosetAction b3 = boolean_lattice(3);
  CHECK(fixed_subcategory(*b3.category, b3.action.element(0)).category.n_objects() == 8);
  const PosetAction b = bowtie();
  CHECK(fixed_subcategory(*b.category, b.action.element(1)).category.n_objects() == 0);

  // transposition of the first two ground elements
  const auto g = b3.action.find(automorphism_from_object_permutation(
      *b3.category, {0, 2, 1, 3, 4, 6, 5, 7}));
  REQUIRE(g);
  const Subcategory f = fixed_subcategory(*b3.category, b3.action.element(*g));
  CHECK(f.objects == std::vector<int>{0, 3, 4, 7});
  CHECK(is_poset_category(f.category));
}

TEST_CASE("restriction and subgroups") {
  const PosetAction b3 = boolean_lattice(3);
  const ActionGroup stab = stabilizer_of_object(b3.action, 3);
  const RestrictedAction r = restrict_action(stab, {0, 1, 2, 3});
  CHECK(r.sub.category.n_objects() == 4);
  CHECK(r.action.order() == 2);
  CHECK(validate_category(r.sub.category).ok());
  CHECK_THROWS_AS(restrict_action(b3.action, {0, 1, 2, 3}), PreconditionError);

  std::vector<GroupElement> all(b3.action.order());
  for (int g = 0; g < b3.action.order(); ++g)
    all[g] = g;
  CHECK(subgroup_action(b3.action, all).order() == 6);
  CHECK(subgroup_action(b3.action, {1}).order() == 2);
  CHECK(is_subgroup(b3.action, object_stabilizer(b3.action, 1)));
}

TEST_CASE("non order preserving permutations are rejected") {
  const auto c = category_from_poset(Poset::from_relations(2, {{0, 1}}));
  CHECK_THROWS_AS(automorphism_from_object_permutation(c, {1, 0}), InputError);
}
