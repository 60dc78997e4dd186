#include "catquot/homology.hpp"

#include "catquot/error.hpp"

#include <string>

namespace catquot {

IntegerMatrix boundary_matrix(const DeltaComplex &dc, int d) {
  if (d <= 0)
    return IntegerMatrix(0, dc.count(0));
  IntegerMatrix m(dc.count(d - 1), dc.count(d));
  for (int s = 0; s < dc.count(d); ++s) {
    const auto &faces = dc.faces(d, s);
    for (int i = 0; i <= d; ++i)
      if (faces[i] != kDegenerateFace)
        m(faces[i], s) += (i % 2 == 0) ? 1 : -1;
  }
  return m;
}

namespace {

RationalMatrix to_rational(const IntegerMatrix &m) {
  RationalMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      r(i, j) = Rational(m(i, j));
  return r;
}

} // namespace

int HomologyResult::reduced_betti(int d) const {
  const bool empty = betti.empty() || betti_at(0) == 0;
  if (d == -1)
    return empty ? 1 : 0;
  if (d == 0 && !empty)
    return betti_at(0) - 1;
  return betti_at(d);
}

HomologyResult homology(const DeltaComplex &dc) {
  HomologyResult h;
  const int top = dc.dimension();
  std::vector<int> ranks(top + 2, 0);
  h.torsion.assign(top + 1, {});
  for (int d = 1; d <= top; ++d) {
    const auto inv = smith_invariants(boundary_matrix(dc, d));
    ranks[d] = static_cast<int>(inv.size());
    for (const auto &v : inv)
      if (v > 1)
        h.torsion[d - 1].push_back(v);
  }
  for (int d = 0; d <= top; ++d)
    h.betti.push_back(dc.count(d) - ranks[d] - ranks[d + 1]);
  h.euler = euler(dc);
  h.reduced_euler = h.euler - 1;
  return h;
}

Integer euler(const DeltaComplex &dc) {
  Integer chi = 0;
  for (int d = 0; d <= dc.dimension(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * dc.count(d);
  return chi;
}

Integer reduced_euler(const DeltaComplex &dc) { return euler(dc) - 1; }

HomologyBasis homology_basis(const DeltaComplex &dc, int i) {
  HomologyBasis basis;
  basis.dim = i;
  const int n = dc.count(i);
  const RationalMatrix cycles = null_space(to_rational(boundary_matrix(dc, i)));
  const RationalMatrix bounds = to_rational(boundary_matrix(dc, i + 1));
  const int nb = dc.count(i + 1) > 0 ? bounds.cols() : 0;

  // reduce [∂_{i+1} | Z] once: pivots in the first block span the
  // boundaries, pivots in the second block complete them to the cycles
  RationalMatrix joint(n, nb + cycles.cols());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < nb; ++c)
      joint(r, c) = bounds(r, c);
    for (int c = 0; c < cycles.cols(); ++c)
      joint(r, nb + c) = cycles(r, c);
  }
  RationalMatrix reduced = joint;
  const std::vector<int> pivots = row_reduce(reduced);
  std::vector<int> bcols, hcols;
  for (int p : pivots)
    (p < nb ? bcols : hcols).push_back(p);

  basis.boundaries = RationalMatrix(n, static_cast<int>(bcols.size()));
  basis.classes = RationalMatrix(n, static_cast<int>(hcols.size()));
  for (int r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < bcols.size(); ++k)
      basis.boundaries(r, static_cast<int>(k)) = joint(r, bcols[k]);
    for (std::size_t k = 0; k < hcols.size(); ++k)
      basis.classes(r, static_cast<int>(k)) = joint(r, hcols[k]);
  }
  return basis;
}

RationalMatrix homology_action_matrix(const HomologyBasis &basis,
                                      const SimplicialMap &f) {
  const int n = basis.classes.rows();
  const int nb = basis.boundaries.cols(), nh = basis.classes.cols();
  if (nh == 0)
    return RationalMatrix(0, 0);
  const auto &perm = f.map[basis.dim];
  RationalMatrix image(n, nh);
  for (int c = 0; c < nh; ++c)
    for (int s = 0; s < n; ++s)
      if (basis.classes(s, c) != 0) {
        if (perm[s] == kDegenerateFace)
          throw InternalError("homology action: map sends a simplex to a "
                              "degenerate one");
        image(perm[s], c) += basis.classes(s, c);
      }
  RationalMatrix full(n, nb + nh);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < nb; ++c)
      full(r, c) = basis.boundaries(r, c);
    for (int c = 0; c < nh; ++c)
      full(r, nb + c) = basis.classes(r, c);
  }
  const RationalMatrix coords = solve(full, image);
  RationalMatrix m(nh, nh);
  for (int r = 0; r < nh; ++r)
    for (int c = 0; c < nh; ++c)
      m(r, c) = coords(nb + r, c);
  return m;
}

std::vector<RationalMatrix> induced_homology_action(const ActionGroup &a, int i) {
  const Nerve n = nerve(a.target());
  const HomologyBasis basis = homology_basis(n.complex, i);
  std::vector<RationalMatrix> out;
  out.reserve(a.order());
  for (GroupElement g = 0; g < a.order(); ++g) {
    const SimplicialMap f = induced_map(n, a.element(g));
    if (i >= static_cast<int>(f.map.size()))
      out.emplace_back(0, 0);
    else
      out.push_back(homology_action_matrix(basis, f));
  }
  return out;
}

Rational trace(const RationalMatrix &m) {
  Rational t = 0;
  for (int k = 0; k < m.rows() && k < m.cols(); ++k)
    t += m(k, k);
  return t;
}

Integer trivial_multiplicity(const ActionGroup &a, int i) {
  Rational sum = 0;
  for (const auto &m : induced_homology_action(a, i))
    sum += trace(m);
  const Rational avg = sum / a.order();
  if (!is_integral(avg) || avg < 0)
    throw InternalError("trivial multiplicity: average trace " + to_string(avg) +
                        " in dimension " + std::to_string(i) +
                        " is not a nonnegative integer");
  return boost::multiprecision::numerator(avg);
}

} // namespace catquot
