#include "catquot/formulas.hpp"

#include "catquot/complex.hpp"
#include "catquot/error.hpp"
#include "catquot/homology.hpp"
#include "catquot/mobius.hpp"
#include "catquot/quotient.hpp"

#include <string>

namespace catquot {

namespace {

std::string witness_text(const ConditionReport &r) {
  std::string s = r.condition + " fails";
  if (r.t)
    s += " at t=" + std::to_string(*r.t);
  if (!r.witness.empty()) {
    s += ", witness";
    for (int w : r.witness)
      s += " " + std::to_string(w);
  }
  return s;
}

void require_loopfree(const FiniteCategory &c, const char *who) {
  if (!is_loopfree(c).loopfree)
    throw PreconditionError(std::string(who) + ": category is not loopfree");
}

void require_C(const ActionGroup &a) {
  ConditionReport r = check_C(a.target(), a);
  if (!r.verdict)
    throw ConditionRefused(std::move(r));
}

IdentityReport finish(IdentityReport r) {
  r.equal = r.left == r.right;
  return r;
}

} // namespace

ConditionRefused::ConditionRefused(ConditionReport report)
    : PreconditionError("condition (C) does not hold: " + witness_text(report)),
      report_(std::move(report)) {}

IdentityReport burnside_euler(const ActionGroup &a) {
  const FiniteCategory &c = a.target();
  require_loopfree(c, "euler averaging");
  IdentityReport r;
  r.name = "euler";
  r.left = Rational(euler(nerve_quotient(c, a).complex));
  Rational sum = 0;
  for (GroupElement g = 0; g < a.order(); ++g) {
    const Integer chi = euler(nerve(fixed_subcategory(c, a.element(g)).category).complex);
    r.breakdown.push_back("fixed " + std::to_string(g) + " euler " + to_string(chi));
    sum += chi;
  }
  r.right = sum / a.order();
  return finish(std::move(r));
}

IdentityReport mobius_quotient(const ActionGroup &a) {
  const FiniteCategory &c = a.target();
  require_loopfree(c, "mobius averaging");
  require_C(a);
  IdentityReport r;
  r.name = "mobius";
  r.left = Rational(mobius(quotient_category(c, a).category));
  Rational sum = 0;
  for (GroupElement g = 0; g < a.order(); ++g) {
    const Integer mu = mobius(fixed_subcategory(c, a.element(g)).category);
    r.breakdown.push_back("fixed " + std::to_string(g) + " mobius " + to_string(mu));
    sum += mu;
  }
  r.right = sum / a.order();
  return finish(std::move(r));
}

IdentityReport betti_multiplicity(const ActionGroup &a, int i) {
  const FiniteCategory &c = a.target();
  require_loopfree(c, "betti multiplicity");
  require_C(a);
  IdentityReport r;
  r.name = "betti";
  const QuotientCategory q = quotient_category(c, a);
  r.left = homology(nerve(q.category).complex).betti_at(i);
  Rational sum = 0;
  const auto action = induced_homology_action(a, i);
  for (GroupElement g = 0; g < a.order(); ++g) {
    const Rational tr = trace(action[g]);
    r.breakdown.push_back("trace " + std::to_string(g) + " " + to_string(tr));
    sum += tr;
  }
  r.right = sum / a.order();
  return finish(std::move(r));
}

LabeledLattice make_labeled_lattice(Poset p, std::vector<int> dim) {
  const int n = p.size();
  if (n == 0)
    throw InputError("lattice: no elements");
  if (static_cast<int>(dim.size()) != n)
    throw InputError("lattice: expected one dim label per element");
  LabeledLattice l;
  for (int x = 0; x < n; ++x) {
    bool is_bottom = true, is_top = true;
    for (int y = 0; y < n; ++y) {
      is_bottom = is_bottom && p.leq(x, y);
      is_top = is_top && p.leq(y, x);
    }
    if (is_bottom)
      l.bottom = x;
    if (is_top)
      l.top = x;
  }
  if (l.bottom < 0)
    throw InputError("lattice: no minimum element");
  if (l.top < 0)
    throw InputError("lattice: no maximum element");
  for (auto [a, b] : p.strict_relations())
    if (dim[a] >= dim[b])
      throw InputError("lattice: dim must strictly decrease going up (" +
                       std::to_string(a) + " > " + std::to_string(b) + ")");
  l.poset = std::move(p);
  l.dim = std::move(dim);
  return l;
}

namespace {

std::vector<ObjectId> open_interval(const LabeledLattice &l, int x) {
  std::vector<ObjectId> out;
  for (int y = 0; y < l.poset.size(); ++y)
    if (l.poset.less(l.bottom, y) && l.poset.less(y, x))
      out.push_back(y);
  return out;
}

/// Trace of each element of `a` on H̃_k of the nerve of its target.
std::vector<Rational> reduced_traces(const ActionGroup &a, int k) {
  const bool empty = a.target().n_objects() == 0;
  std::vector<Rational> out(a.order(), 0);
  if (k == -1) {
    if (empty)
      std::fill(out.begin(), out.end(), Rational(1));
    return out;
  }
  if (k < -1 || empty)
    return out;
  const auto action = induced_homology_action(a, k);
  for (GroupElement g = 0; g < a.order(); ++g)
    out[g] = trace(action[g]) - (k == 0 ? 1 : 0);
  return out;
}

} // namespace

IdentityReport gm_quotient(const LabeledLattice &l, const ActionGroup &a, int i) {
  const int n = l.poset.size();
  if (a.target().n_objects() != n)
    throw InputError("lattice action: object count does not match the lattice");
  for (GroupElement g = 0; g < a.order(); ++g)
    if (a.act_object(g, l.bottom) != l.bottom || a.act_object(g, l.top) != l.top)
      throw InputError("lattice action: group must fix the bottom and top");

  IdentityReport r;
  r.name = "gm";

  const RestrictedAction proper = restrict_action(a, open_interval(l, l.top));
  {
    ConditionReport c = check_C(proper.action.target(), proper.action);
    if (!c.verdict)
      throw ConditionRefused(std::move(c));
    const auto q = quotient_category(proper.action.target(), proper.action);
    r.breakdown.push_back(
        "proper-part-quotient reduced_betti " +
        std::to_string(homology(nerve(q.category).complex).reduced_betti(i)));
  }

  const Partition orbits = object_orbits(a);
  Rational left = 0, right = 0;
  for (const auto &orbit : orbits.classes) {
    const int rep = orbit.front();
    if (rep == l.bottom)
      continue;
    const int k = i - l.dim[rep] - 1;
    const ActionGroup stab = stabilizer_of_object(a, rep);
    const RestrictedAction local = restrict_action(stab, open_interval(l, rep));
    ConditionReport c = check_C(local.action.target(), local.action);
    if (!c.verdict)
      throw ConditionRefused(std::move(c));

    // quotient side
    const auto q = quotient_category(local.action.target(), local.action);
    const int summand = homology(nerve(q.category).complex).reduced_betti(k);
    right += summand;
    r.breakdown.push_back("orbit " + std::to_string(rep) + " size " +
                          std::to_string(orbit.size()) + " dim " +
                          std::to_string(l.dim[rep]) + " summand " +
                          std::to_string(summand));

    // representation side, element by element over the whole orbit
    for (int x : orbit) {
      const ActionGroup sx = stabilizer_of_object(a, x);
      const RestrictedAction lx = restrict_action(sx, open_interval(l, x));
      const auto traces = reduced_traces(lx.action, k);
      for (GroupElement g = 0; g < sx.order(); ++g)
        left += traces[lx.element_image[g]];
    }
  }
  r.left = left / a.order();
  r.right = right;
  return finish(std::move(r));
}

} // namespace catquot
