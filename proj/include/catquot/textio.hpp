#pragma once

#include "catquot/action.hpp"
#include "catquot/category.hpp"
#include "catquot/conditions.hpp"
#include "catquot/formulas.hpp"
#include "catquot/quotient.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace catquot {

// Line-oriented text formats. `#` starts a comment; blank lines are ignored.
// Malformed input throws ParseError carrying the 1-based line number.
//
//   category:  objects <n> | mor <id> <src> <tgt> | comp <f> <g> <f∘g>
//   poset:     elements <n> | rel <a> <b>            (a > b)
//   lattice:   poset lines | dim <element> <value>
//   action:    gen obj <images...> [gen mor <images...>]
//   family:    sub <morphism> <group elements...>
//   instance:  poset lines followed by action lines (fuzz replay)
//
// The parsers check syntax and index ranges. Category laws are left to
// validate_category so that a missing composite can be reported as such.

FiniteCategory parse_category(std::string_view text);
Poset parse_poset(std::string_view text);
LabeledLattice parse_lattice(std::string_view text);

/// One automorphism per `gen obj` line. A `gen mor` line (images of all
/// morphism ids, identities included) may follow it; without one the
/// morphism map is derived from the object permutation.
std::vector<CatAutomorphism> parse_generators(std::string_view text,
                                              const FiniteCategory &c);

/// Family indexed by morphism; morphisms without a `sub` line get the
/// trivial subgroup. Element ids refer to the numbering of `a`.
SubgroupFamily parse_family(std::string_view text, const ActionGroup &a);

struct Instance {
  Poset poset;
  std::vector<std::vector<int>> generators; ///< object permutations
};

Instance parse_instance(std::string_view text);

std::string format_category(const FiniteCategory &c);
std::string format_poset(const Poset &p);
std::string format_instance(const Instance &inst);

/// Category text of K/G followed by `class <member> <class>` lines for the
/// morphisms of K.
std::string format_quotient(const QuotientCategory &q);

std::string read_file(const std::string &path);

} // namespace catquot
