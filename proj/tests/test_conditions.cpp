#include "catquot/conditions.hpp"
#include "catquot/error.hpp"
#include "catquot/fuzz.hpp"
#include "catquot/named.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace catquot;

TEST_CASE("condition R") {
  CHECK(check_R(*bowtie().category, bowtie().action).verdict);
  const PosetAction t = poset_action(boolean_lattice(2).poset, {});
  CHECK(check_R(*t.category, t.action).verdict);
}

TEST_CASE("bowtie") {
  const PosetAction b = bowtie();
  const auto &c = *b.category;
  CHECK(check_C(c, b.action).verdict);

  const auto sr = check_SR(c, b.action);
  CHECK_FALSE(sr.verdict);
  CHECK(sr.witness == std::vector<int>{4, 5});

  const auto srp = check_SRP(b.poset, b.action);
  CHECK_FALSE(srp.verdict);
  CHECK(srp.witness == std::vector<int>{0, 2, 3});
}

TEST_CASE("cube with S_3") {
  const PosetAction b3 = boolean_lattice(3);
  const auto &c = *b3.category;
  const auto &a = b3.action;
  CHECK(check_C(c, a).verdict);
  CHECK(check_SR(c, a).verdict);
  CHECK(check_SRP(b3.poset, a).verdict);

  // Young subgroups of the subsets form a family satisfying (S)
  CHECK(check_S(c, a, upset_family(a)).verdict);
  // the stabilizer family breaks the containment part
  const auto stab = check_S(c, a, stabilizer_family(a));
  CHECK_FALSE(stab.verdict);
  CHECK(stab.detail == "part 1");
  CHECK_FALSE(check_strong_S(c, a).verdict);
}

TEST_CASE("Young family on the cube is the setwise Young subgroup") {
  const PosetAction b3 = boolean_lattice(3);
  const auto &a = b3.action;
  const auto fam = upset_family(a);
  // for an identity morphism of subset A: permutations fixing every superset
  // of A, i.e. those moving only elements inside A
  for (int x = 0; x < 8; ++x) {
    std::vector<GroupElement> young;
    for (int g = 0; g < a.order(); ++g) {
      bool inside = true;
      for (int bit = 0; bit < 3; ++bit)
        if (!(x >> bit & 1) && a.act_object(g, 1 << bit) != (1 << bit))
          inside = false;
      if (inside)
        young.push_back(g);
    }
    CHECK(fam[x] == young);
  }
}

TEST_CASE("trivial actions satisfy everything") {
  const PosetAction t = poset_action(boolean_lattice(2).poset, {});
  CHECK(check_Ct(*t.category, t.action, 2).verdict);
  CHECK(check_S(*t.category, t.action, trivial_family(t.action)).verdict);
  CHECK(check_strong_S(*t.category, t.action).verdict);
  CHECK(check_SR(*t.category, t.action).verdict);
}

TEST_CASE("swapped antichain satisfies strong S") {
  const PosetAction p = poset_action(Poset::from_relations(2, {}), {{1, 0}});
  CHECK(check_strong_S(*p.category, p.action).verdict);
}

TEST_CASE("stacked antichains with the even-weight group") {
  // Three levels: already C_2 fails. The chain "first level up to the
  // second" is fixed only by the identity, yet both top elements lie in one
  // orbit.
  const PosetAction p3 = stacked_antichains(3);
  CHECK(p3.action.order() == 4);
  const auto c2 = check_Ct(*p3.category, p3.action, 2);
  CHECK_FALSE(c2.verdict);
  CHECK(c2.witness.size() == 3);
  const auto c = check_C(*p3.category, p3.action);
  CHECK_FALSE(c.verdict);
  CHECK(*c.t == 2);

  // Four levels: C_2 holds and C_3 is the first failure.
  const PosetAction p4 = stacked_antichains(4);
  CHECK(check_Ct(*p4.category, p4.action, 2).verdict);
  const auto c3 = check_Ct(*p4.category, p4.action, 3);
  CHECK_FALSE(c3.verdict);
  CHECK(c3.witness.size() == 4);
  CHECK(*check_C(*p4.category, p4.action).t == 3);

  // from three levels on, C_t holds exactly up to t = levels - 2; two
  // levels have no chain long enough to fail
  for (int levels = 2; levels <= 5; ++levels) {
    const PosetAction p = stacked_antichains(levels);
    for (int t = 2; t <= levels + 1; ++t)
      CHECK(check_Ct(*p.category, p.action, t).verdict == (levels == 2 || t <= levels - 2));
  }
}

TEST_CASE("invalid family is a precondition error") {
  const PosetAction b = bowtie();
  SubgroupFamily fam = trivial_family(b.action);
  fam[0] = {0, 1}; // the swap does not fix object 0
  CHECK_THROWS_AS(check_S(*b.category, b.action, fam), PreconditionError);
}

TEST_CASE("check_Ct agrees with the literal definition") {
  FuzzConfig cfg;
  int failures_seen = 0;
  std::vector<PosetAction> sample{stacked_antichains(3), stacked_antichains(4), bowtie()};
  for (int k = 0; k < 200; ++k) {
    const Instance inst = random_instance(5, k, cfg);
    sample.push_back(poset_action(inst.poset, inst.generators));
  }
  for (std::size_t k = 0; k < sample.size(); ++k) {
    const PosetAction &p = sample[k];
    for (int t = 2; t <= 4; ++t) {
      CAPTURE(k);
      CAPTURE(t);
      const bool expected = oracle::condition_ct(*p.category, p.action, t);
      const auto par = check_Ct(*p.category, p.action, t);
      const auto ser = check_Ct_serial(*p.category, p.action, t);
      CHECK(par.verdict == expected);
      CHECK(ser.verdict == expected);
      CHECK(par.witness == ser.witness);
      failures_seen += !expected;
    }
  }
  // the sample must exercise both verdicts
  CHECK(failures_seen > 0);
}

TEST_CASE("failing witnesses really violate the condition") {
  const PosetAction p = stacked_antichains(4);
  const auto r = check_Ct(*p.category, p.action, 3);
  REQUIRE_FALSE(r.verdict);
  const auto &w = r.witness;
  const int ma = w[w.size() - 2], mb = w.back();
  const auto &a = p.action;
  bool same_orbit = false;
  for (int g = 0; g < a.order(); ++g) {
    if (a.act_morphism(g, ma) != mb)
      continue;
    same_orbit = true;
    bool fixes_chain = true;
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
      fixes_chain = fixes_chain && a.act_morphism(g, w[i]) == w[i];
    CHECK_FALSE(fixes_chain);
  }
  CHECK(same_orbit);
}
