#include "catquot/category.hpp"
#include "catquot/error.hpp"
#include "catquot/named.hpp"
#include "catquot/quotient.hpp"

#include <doctest.h>

using namespace catquot;

namespace {

Poset two_chain() { return Poset::from_relations(2, {{0, 1}}); }

Poset bowtie_poset() { return bowtie().poset; }

/// Two objects and mutually inverse morphisms 2: 0 -> 1 and 3: 1 -> 0.
FiniteCategory iso_pair() {
  return FiniteCategory::from_parts(2, {{0, 1}, {1, 0}}, {{2, 3, 1}, {3, 2, 0}});
}

} // namespace

TEST_CASE("terminal category validates") {
  const FiniteCategory one = FiniteCategory::from_parts(1, {}, {});
  CHECK(validate_category(one).ok());
  CHECK(one.n_morphisms() == 1);
}

TEST_CASE("broken left identity is reported with its witness") {
  // 0 -> 1 via morphism 2, then overwrite id_1 ∘ m
  FiniteCategory good = FiniteCategory::from_parts(2, {{0, 1}}, {});
  auto table = good.composition_table();
  const int n = good.n_morphisms();
  table[1 * n + 2] = 1; // claim id_1 ∘ m = id_1
  const FiniteCategory bad(2, good.morphisms(), table);
  const auto r = validate_category(bad);
  REQUIRE_FALSE(r.ok());
  bool found = false;
  for (const auto &v : r.violations)
    if (v.law == "left identity" && !v.witness.empty() && v.witness[0] == 2)
      found = true;
  CHECK(found);
}

TEST_CASE("missing composite makes composition non-total") {
  const FiniteCategory c = FiniteCategory::from_parts(3, {{2, 1}, {1, 0}, {2, 0}}, {});
  const auto r = validate_category(c);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().law == "composition not total");
}

TEST_CASE("poset categories") {
  SUBCASE("one element") {
    const auto c = category_from_poset(Poset::from_relations(1, {}));
    CHECK(c.n_objects() == 1);
    CHECK(c.n_morphisms() == 1);
  }
  SUBCASE("two-chain") {
    const auto c = category_from_poset(two_chain());
    CHECK(c.n_morphisms() == 3);
    CHECK(c.source(2) == 0);
    CHECK(c.target(2) == 1);
  }
  SUBCASE("bowtie") {
    const auto c = category_from_poset(bowtie_poset());
    CHECK(c.n_objects() == 4);
    CHECK(c.n_morphisms() == 8);
    CHECK(validate_category(c).ok());
    CHECK(is_loopfree(c).loopfree);
    CHECK(is_poset_category(c));
    CHECK(longest_chain(c) == 1);
  }
}

TEST_CASE("loopfree detection") {
  const auto c = iso_pair();
  REQUIRE(validate_category(c).ok());
  const auto r = is_loopfree(c);
  CHECK_FALSE(r.loopfree);
  REQUIRE(r.witness);
  CHECK(*r.witness == std::pair<int, int>{0, 1});
  CHECK_THROWS_AS(underlying_order(c), PreconditionError);
  CHECK_THROWS_AS(longest_chain(c), PreconditionError);
}

TEST_CASE("bowtie quotient is loopfree but not a poset") {
  const PosetAction b = bowtie();
  const auto q = quotient_category(*b.category, b.action);
  CHECK(is_loopfree(q.category).loopfree);
  CHECK_FALSE(is_poset_category(q.category));
  // its underlying order is the 2-chain
  CHECK(underlying_order(q.category) == two_chain());
}

TEST_CASE("underlying order of a disjoint union of points is an antichain") {
  const FiniteCategory c = FiniteCategory::from_parts(2, {}, {});
  const Poset p = underlying_order(c);
  CHECK(p.size() == 2);
  CHECK_FALSE(p.comparable(0, 1));
}

TEST_CASE("cyclic relations are rejected") {
  CHECK_THROWS_AS(Poset::from_relations(2, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Poset::from_relations(1, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Poset::from_matrix(2, {1, 1, 1, 1}), InputError);
}

TEST_CASE("barycentric subdivision") {
  SUBCASE("two-chain") {
    const auto bd = barycentric_subdivision(two_chain());
    CHECK(bd.poset.size() == 3);
    // the two-element chain sits above both singletons
    int top = -1;
    for (int i = 0; i < 3; ++i)
      if (bd.chains[i].size() == 2)
        top = i;
    REQUIRE(top >= 0);
    for (int i = 0; i < 3; ++i)
      if (i != top)
        CHECK(bd.poset.greater(top, i));
  }
  SUBCASE("bowtie") {
    CHECK(barycentric_subdivision(bowtie_poset()).poset.size() == 8);
  }
  SUBCASE("antichain") {
    const auto bd = barycentric_subdivision(Poset::from_relations(3, {}));
    CHECK(bd.poset.size() == 3);
    CHECK(bd.poset.strict_relations().empty());
  }
}

TEST_CASE("subcategories keep identities first") {
  const auto c = category_from_poset(boolean_lattice(2).poset);
  const Subcategory s = induced_subcategory(c, {1, 3});
  CHECK(s.category.n_objects() == 2);
  CHECK(s.category.n_morphisms() == 3);
  CHECK(s.morphisms[0] == 1);
  CHECK(s.morphisms[1] == 3);
  CHECK(validate_category(s.category).ok());
}
