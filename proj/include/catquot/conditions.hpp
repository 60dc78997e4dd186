#pragma once

#include "catquot/action.hpp"
#include "catquot/category.hpp"

#include <optional>
#include <string>
#include <vector>

namespace catquot {

/// Verdict of one combinatorial condition. A failing report carries the
/// lexicographically least witness (ids of morphisms, objects or group
/// elements, as documented per check).
struct ConditionReport {
  std::string condition;
  bool verdict = true;
  std::vector<int> witness;
  std::optional<int> t;
  std::string detail;
  /// check_C only: one report per level t.
  std::vector<ConditionReport> per_level;
};

/// One subgroup (sorted element indices) per morphism id; identities stand
/// for their objects.
using SubgroupFamily = std::vector<std::vector<GroupElement>>;

/// Condition (R). Witness (x, y_a, y_b): x is followed by y_a and y_b, the
/// latter share an orbit, but the composites do not.
ConditionReport check_R(const FiniteCategory &c, const ActionGroup &a);

/// Condition (C_t), t >= 2, enumerating literal chains m_1, ..., m_{t-1}
/// over all morphisms (identities included). Witness (m_1, ..., m_{t-1},
/// m_a, m_b). The enumeration is split across OpenMP threads by m_1; the
/// reported witness is the same as check_Ct_serial's.
ConditionReport check_Ct(const FiniteCategory &c, const ActionGroup &a, int t);

/// Single-threaded reference for check_Ct.
ConditionReport check_Ct_serial(const FiniteCategory &c, const ActionGroup &a,
                                int t);

/// (C_t) for t in [2, L+1], L = longest_chain(c); reports the first failing
/// level. Requires a loopfree category (otherwise chains are unbounded).
ConditionReport check_C(const FiniteCategory &c, const ActionGroup &a);

/// Condition (S) for an explicit family. Throws PreconditionError if a
/// member is not a subgroup of the stabilizer of its morphism.
/// detail is "part 1" or "part 2"; part 1 witnesses are (m, source(m)) or
/// (m, m'), part 2 witnesses are (m, m_b) with m_b in the Stab(source)-orbit
/// of m but not in the S_source-orbit.
ConditionReport check_S(const FiniteCategory &c, const ActionGroup &a,
                        const SubgroupFamily &family);

/// Condition (S) with S_m = Stab(m), checking only the containments.
ConditionReport check_strong_S(const FiniteCategory &c, const ActionGroup &a);

/// Condition (SR) on a loopfree category. Witness (x, y).
ConditionReport check_SR(const FiniteCategory &c, const ActionGroup &a);

/// Condition (SRP); `a` acts on category_from_poset(p). Witness (a, b, c).
ConditionReport check_SRP(const Poset &p, const ActionGroup &a);

/// S_m = Stab(m).
SubgroupFamily stabilizer_family(const ActionGroup &a);
/// S_m = {e}.
SubgroupFamily trivial_family(const ActionGroup &a);
/// S_m = elements fixing every object above target(m) (every x with
/// M(x, target(m)) nonempty) and fixing m. Always satisfies part (1) on a
/// poset; part (2) may fail.
SubgroupFamily upset_family(const ActionGroup &a);

} // namespace catquot
