#include "catquot/complex.hpp"
#include "catquot/error.hpp"
#include "catquot/fuzz.hpp"
#include "catquot/named.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace catquot;

TEST_CASE("nerve simplex counts") {
  SUBCASE("two-chain") {
    const auto c = category_from_poset(Poset::from_relations(2, {{0, 1}}));
    CHECK(nerve(c).complex.f_vector() == std::vector<int>{2, 1});
  }
  SUBCASE("bowtie") {
    CHECK(nerve(*bowtie().category).complex.f_vector() == std::vector<int>{4, 4});
  }
  SUBCASE("cube") {
    CHECK(nerve(*boolean_lattice(3).category).complex.f_vector() ==
          std::vector<int>{8, 19, 18, 6});
  }
  SUBCASE("max_dim truncates") {
    CHECK(nerve(*boolean_lattice(3).category, 1).complex.f_vector() ==
          std::vector<int>{8, 19});
  }
}

TEST_CASE("nerve faces") {
  const auto c = category_from_poset(boolean_lattice(2).poset);
  const Nerve n = nerve(c);
  CHECK(n.complex.validate().ok());
  // chain 3 -> 1 -> 0 in the square: inner face is the composite
  for (int i = 0; i < n.complex.count(2); ++i) {
    const auto &ch = n.chains[2][i];
    const auto &f = n.complex.faces(2, i);
    CHECK(n.chains[1][f[0]] == std::vector<int>{ch[1]});
    CHECK(n.chains[1][f[1]] == std::vector<int>{c.compose(ch[1], ch[0])});
    CHECK(n.chains[1][f[2]] == std::vector<int>{ch[0]});
    CHECK(n.find(2, ch) == i);
  }
  CHECK(n.find(2, {0, 0}) == -1);
}

TEST_CASE("nerve of a category with a cycle") {
  const auto c = FiniteCategory::from_parts(2, {{0, 1}, {1, 0}}, {{2, 3, 1}, {3, 2, 0}});
  CHECK_THROWS_AS(nerve(c), PreconditionError);
  CHECK(nerve(c, 1).complex.f_vector() == std::vector<int>{2, 2});
}

TEST_CASE("orbit complex of the bowtie") {
  const PosetAction b = bowtie();
  const OrbitComplex o = nerve_quotient(*b.category, b.action);
  CHECK(o.complex.f_vector() == std::vector<int>{2, 2});
  CHECK(o.complex.validate().ok());
}

TEST_CASE("canonical map on named examples") {
  SUBCASE("bowtie is bijective") {
    const PosetAction b = bowtie();
    for (const auto &d : lambda_skeleton_report(*b.category, b.action)) {
      CHECK(d.surjective);
      CHECK(d.injective);
    }
  }
  SUBCASE("three stacked levels") {
    const PosetAction p = stacked_antichains(3);
    const auto r = lambda_skeleton_report(*p.category, p.action);
    REQUIRE(r.size() == 3);
    CHECK(r[0].injective);
    CHECK(r[1].injective);
    CHECK_FALSE(r[2].injective);
    CHECK(injective_on_skeleton(r, 1));
    CHECK_FALSE(injective_on_skeleton(r, 2));
  }
}

TEST_CASE("canonical map agrees with counting chains") {
  FuzzConfig cfg;
  cfg.max_elements = 6;
  for (int k = 0; k < 60; ++k) {
    const Instance inst = random_instance(3, k, cfg);
    const PosetAction p = poset_action(inst.poset, inst.generators);
    const auto r = lambda_skeleton_report(*p.category, p.action);
    for (const auto &d : r) {
      CAPTURE(k);
      CAPTURE(d.dim);
      const auto [orbits, qchains] = oracle::lambda_counts(*p.category, p.action, d.dim);
      CHECK(d.surjective);
      CHECK(d.injective == (orbits == qchains));
    }
  }
}

TEST_CASE("fixed subcomplexes") {
  SUBCASE("bowtie swap fixes nothing") {
    const PosetAction b = bowtie();
    const Nerve n = nerve(*b.category);
    const auto f = fixed_subcomplex(n.complex, induced_map(n, b.action.element(1)));
    CHECK(f.complex.dimension() == -1);
  }
  SUBCASE("a transposition of the cube") {
    const PosetAction b3 = boolean_lattice(3);
    const auto g = b3.action.find(automorphism_from_object_permutation(
        *b3.category, {0, 2, 1, 3, 4, 6, 5, 7}));
    REQUIRE(g);
    const Nerve n = nerve(*b3.category);
    const auto f = fixed_subcomplex(n.complex, induced_map(n, b3.action.element(*g)));
    // nerve of {0 < 3, 4 < 7}
    CHECK(f.complex.f_vector() == std::vector<int>{4, 5, 2});
    CHECK(f.complex.validate().ok());
  }
}

TEST_CASE("delta complex validation") {
  DeltaComplex d;
  d.add_simplex(0, {});
  d.add_simplex(0, {});
  d.add_simplex(1, {1, 0});
  CHECK(d.validate().ok());
  d.add_simplex(1, {2, 0});
  CHECK_FALSE(d.validate().ok());
}
