#include "catquot/mobius.hpp"

#include "catquot/complex.hpp"
#include "catquot/error.hpp"
#include "catquot/homology.hpp"

#include <algorithm>
#include <numeric>

namespace catquot {

Integer mobius(const FiniteCategory &c) {
  if (!is_loopfree(c).loopfree)
    throw PreconditionError("mobius: category has a nonidentity cycle");
  return reduced_euler(nerve(c).complex);
}

MobiusTable mobius_recursive(const FiniteCategory &c) {
  if (!is_loopfree(c).loopfree)
    throw PreconditionError("mobius recursion: category is not loopfree");
  const Poset order = underlying_order(c);
  const int n = c.n_objects();

  // a linear extension: fewer elements below first
  std::vector<int> below(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (order.less(y, x))
        ++below[x];
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  std::stable_sort(seq.begin(), seq.end(),
                   [&](int a, int b) { return below[a] < below[b]; });

  MobiusTable t;
  t.from_bottom.assign(n, 0);
  for (int x : seq) {
    Integer sum = 1; // y = 0̂, one morphism x -> 0̂
    for (int y = 0; y < n; ++y)
      if (order.less(y, x))
        sum += static_cast<long>(c.hom(x, y).size()) * t.from_bottom[y];
    t.from_bottom[x] = -sum;
  }
  Integer top = 1;
  for (int y = 0; y < n; ++y)
    top += t.from_bottom[y];
  t.bottom_to_top = -top;
  return t;
}

} // namespace catquot
