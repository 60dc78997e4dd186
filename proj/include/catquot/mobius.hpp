#pragma once

#include "catquot/category.hpp"
#include "catquot/numeric.hpp"

#include <vector>

namespace catquot {

/// μ(K) = χ̃(Δ(K)). Throws PreconditionError when K has a nonidentity cycle
/// (its nerve is then infinite).
Integer mobius(const FiniteCategory &c);

/// Morphism-counting recursion with a terminal 0̂ and an initial 1̂ adjoined:
/// μ(0̂,0̂) = 1 and μ(0̂,x) = -Σ_{y<x} |Hom(x,y)| μ(0̂,y).
struct MobiusTable {
  Integer bottom_to_top;           ///< μ(0̂,1̂)
  std::vector<Integer> from_bottom; ///< μ(0̂,x) per object of K
};

/// Throws PreconditionError on non-loopfree input.
MobiusTable mobius_recursive(const FiniteCategory &c);

} // namespace catquot
