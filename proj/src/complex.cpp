#include "catquot/complex.hpp"

#include "catquot/error.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace catquot {

int DeltaComplex::dimension() const noexcept {
  for (int d = static_cast<int>(faces_.size()) - 1; d >= 0; --d)
    if (!faces_[d].empty())
      return d;
  return -1;
}

int DeltaComplex::add_simplex(int d, std::vector<int> faces) {
  if (d < 0 || faces.size() != static_cast<std::size_t>(d == 0 ? 0 : d + 1))
    throw InternalError("delta complex: a " + std::to_string(d) +
                        "-simplex needs " + std::to_string(d == 0 ? 0 : d + 1) +
                        " faces");
  if (faces_.size() <= static_cast<std::size_t>(d))
    faces_.resize(d + 1);
  faces_[d].push_back(std::move(faces));
  return static_cast<int>(faces_[d].size()) - 1;
}

std::vector<int> DeltaComplex::f_vector() const {
  std::vector<int> f;
  for (int d = 0; d <= dimension(); ++d)
    f.push_back(count(d));
  return f;
}

ValidationReport DeltaComplex::validate() const {
  ValidationReport r;
  for (int d = 1; d <= dimension(); ++d)
    for (int s = 0; s < count(d); ++s)
      for (int f : faces(d, s))
        if (f != kDegenerateFace && (f < 0 || f >= count(d - 1)))
          r.violations.push_back({"face index out of range", {d, s}});
  if (!r.ok())
    return r;
  for (int d = 2; d <= dimension(); ++d)
    for (int s = 0; s < count(d); ++s) {
      const auto &fs = faces(d, s);
      for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
          const int fj = fs[j], fi = fs[i];
          if (fj == kDegenerateFace || fi == kDegenerateFace)
            continue;
          const int lhs = faces(d - 1, fj)[i];
          const int rhs = faces(d - 1, fi)[j - 1];
          if (lhs != rhs && lhs != kDegenerateFace && rhs != kDegenerateFace)
            r.violations.push_back({"face identity", {d, s, i, j}});
        }
    }
  return r;
}

// ---------------------------------------------------------------------------

int Nerve::find(int d, const std::vector<int> &chain) const {
  if (d < 0 || d >= static_cast<int>(index.size()))
    return -1;
  const auto it = index[d].find(chain);
  return it == index[d].end() ? -1 : it->second;
}

Nerve nerve(const FiniteCategory &c, std::optional<int> max_dim) {
  const bool loopfree = is_loopfree(c).loopfree;
  if (!loopfree && (!max_dim || *max_dim > 1))
    throw PreconditionError(
        "nerve: category is not loopfree, so chains of nonidentity morphisms "
        "are unbounded; pass max_dim <= 1");
  const int top = max_dim ? *max_dim : longest_chain(c);

  Nerve n;
  if (c.n_objects() == 0 || top < 0)
    return n;
  n.chains.resize(1);
  for (ObjectId x = 0; x < c.n_objects(); ++x)
    n.chains[0].push_back({x});

  // chains of length d extend chains of length d-1 at the end; keep lex order
  for (int d = 1; d <= top; ++d) {
    std::vector<std::vector<int>> next;
    if (d == 1) {
      for (MorphismId m = c.n_objects(); m < c.n_morphisms(); ++m)
        next.push_back({m});
    } else {
      for (const auto &ch : n.chains[d - 1])
        for (MorphismId m : c.outgoing(c.target(ch.back()))) {
          auto longer = ch;
          longer.push_back(m);
          next.push_back(std::move(longer));
        }
    }
    if (next.empty())
      break;
    std::sort(next.begin(), next.end());
    n.chains.push_back(std::move(next));
  }

  n.index.resize(n.chains.size());
  for (std::size_t d = 0; d < n.chains.size(); ++d)
    for (std::size_t i = 0; i < n.chains[d].size(); ++i)
      n.index[d].emplace(n.chains[d][i], static_cast<int>(i));

  for (std::size_t d = 0; d < n.chains.size(); ++d)
    for (const auto &ch : n.chains[d]) {
      std::vector<int> faces;
      if (d == 1) {
        faces = {c.target(ch[0]), c.source(ch[0])};
      } else if (d >= 2) {
        for (std::size_t i = 0; i <= d; ++i) {
          std::vector<int> face;
          bool degenerate = false;
          for (std::size_t k = 0; k < d; ++k) {
            if (i == 0 && k == 0)
              continue;
            if (i == d && k == d - 1)
              continue;
            if (i > 0 && i < d && k == i - 1) {
              const MorphismId comp = c.compose(ch[k + 1], ch[k]);
              if (c.is_identity(comp))
                degenerate = true;
              face.push_back(comp);
              ++k;
              continue;
            }
            face.push_back(ch[k]);
          }
          faces.push_back(degenerate ? kDegenerateFace
                                     : n.find(static_cast<int>(d) - 1, face));
        }
      }
      n.complex.add_simplex(static_cast<int>(d), std::move(faces));
    }
  return n;
}

SimplicialMap induced_map(const Nerve &n, const CatAutomorphism &g) {
  SimplicialMap f;
  f.map.resize(n.chains.size());
  for (std::size_t d = 0; d < n.chains.size(); ++d)
    for (const auto &ch : n.chains[d]) {
      std::vector<int> image;
      for (int v : ch)
        image.push_back(d == 0 ? g.obj_map[v] : g.mor_map[v]);
      const int idx = n.find(static_cast<int>(d), image);
      if (idx < 0)
        throw InternalError("induced map: image chain missing from the nerve");
      f.map[d].push_back(idx);
    }
  return f;
}

OrbitComplex orbit_complex(const Nerve &n, const ActionGroup &a) {
  std::vector<SimplicialMap> maps;
  for (GroupElement g = 0; g < a.order(); ++g)
    maps.push_back(induced_map(n, a.element(g)));

  OrbitComplex q;
  const int dims = static_cast<int>(n.chains.size());
  q.orbit_of.resize(dims);
  q.representative.resize(dims);
  for (int d = 0; d < dims; ++d) {
    const int count = n.complex.count(d);
    q.orbit_of[d].assign(count, -1);
    for (int s = 0; s < count; ++s) {
      if (q.orbit_of[d][s] >= 0)
        continue;
      const int orbit = static_cast<int>(q.representative[d].size());
      q.representative[d].push_back(s);
      for (const auto &f : maps)
        q.orbit_of[d][f.map[d][s]] = orbit;
    }
  }
  for (int d = 0; d < dims; ++d)
    for (int rep : q.representative[d]) {
      std::vector<int> faces;
      if (d > 0)
        for (int f : n.complex.faces(d, rep))
          faces.push_back(f == kDegenerateFace ? kDegenerateFace
                                               : q.orbit_of[d - 1][f]);
      q.complex.add_simplex(d, std::move(faces));
    }
  return q;
}

OrbitComplex nerve_quotient(const FiniteCategory &c, const ActionGroup &a,
                            std::optional<int> max_dim) {
  return orbit_complex(nerve(c, max_dim), a);
}

CanonicalLambda canonical_lambda(const FiniteCategory &c, const ActionGroup &a,
                                 std::optional<int> max_dim) {
  CanonicalLambda l;
  l.nerve = nerve(c, max_dim);
  const int top = static_cast<int>(l.nerve.chains.size()) - 1;
  l.orbits = orbit_complex(l.nerve, a);
  l.quotient = quotient_category(c, a);
  l.quotient_nerve = nerve(l.quotient.category, std::max(top, 0));

  l.map.map.resize(l.nerve.chains.size());
  for (int d = 0; d <= top; ++d)
    for (int rep : l.orbits.representative[d]) {
      const auto &ch = l.nerve.chains[d][rep];
      std::vector<int> image;
      bool degenerate = false;
      for (int v : ch) {
        const int cls = d == 0 ? l.quotient.obj_class[v] : l.quotient.mor_class[v];
        if (d > 0 && l.quotient.category.is_identity(cls))
          degenerate = true;
        image.push_back(cls);
      }
      l.map.map[d].push_back(degenerate ? kDegenerateFace
                                        : l.quotient_nerve.find(d, image));
      if (!degenerate && l.map.map[d].back() < 0)
        throw InternalError("lambda: image chain missing from the quotient "
                            "nerve");
    }

  // λ commutes with faces
  for (int d = 1; d <= top; ++d)
    for (int s = 0; s < l.orbits.complex.count(d); ++s) {
      const int img = l.map.map[d][s];
      if (img == kDegenerateFace)
        continue;
      const auto &src_faces = l.orbits.complex.faces(d, s);
      const auto &dst_faces = l.quotient_nerve.complex.faces(d, img);
      for (int i = 0; i <= d; ++i) {
        const int sf = src_faces[i];
        const int mapped = sf == kDegenerateFace ? kDegenerateFace
                                                 : l.map.map[d - 1][sf];
        if (mapped != dst_faces[i])
          throw InternalError("lambda: does not commute with face " +
                              std::to_string(i) + " in dimension " +
                              std::to_string(d));
      }
    }
  for (const auto &dim : lambda_report(l))
    if (!dim.surjective)
      throw InternalError("lambda: not surjective in dimension " +
                          std::to_string(dim.dim));
  return l;
}

std::vector<LambdaDimension> lambda_report(const CanonicalLambda &l) {
  std::vector<LambdaDimension> out;
  const int top = static_cast<int>(l.nerve.chains.size()) - 1;
  for (int d = 0; d <= top; ++d) {
    std::vector<int> hits(l.quotient_nerve.complex.count(d), 0);
    bool injective = true;
    for (int img : l.map.map[d]) {
      if (img == kDegenerateFace) {
        injective = false;
        continue;
      }
      if (hits[img]++ > 0)
        injective = false;
    }
    const bool surjective =
        std::all_of(hits.begin(), hits.end(), [](int h) { return h > 0; });
    out.push_back({d, surjective, injective});
  }
  return out;
}

std::vector<LambdaDimension> lambda_skeleton_report(const FiniteCategory &c,
                                                    const ActionGroup &a,
                                                    std::optional<int> max_dim) {
  return lambda_report(canonical_lambda(c, a, max_dim));
}

bool injective_on_skeleton(const std::vector<LambdaDimension> &report, int t) {
  for (const auto &d : report)
    if (d.dim <= t && !d.injective)
      return false;
  return true;
}

Subcomplex fixed_subcomplex(const DeltaComplex &dc, const SimplicialMap &f) {
  Subcomplex sub;
  const int top = dc.dimension();
  std::vector<std::vector<int>> new_index(top + 1);
  sub.simplices.resize(top + 1);
  for (int d = 0; d <= top; ++d) {
    new_index[d].assign(dc.count(d), -1);
    for (int s = 0; s < dc.count(d); ++s)
      if (f.map[d][s] == s) {
        new_index[d][s] = static_cast<int>(sub.simplices[d].size());
        sub.simplices[d].push_back(s);
      }
  }
  while (!sub.simplices.empty() && sub.simplices.back().empty())
    sub.simplices.pop_back();
  for (std::size_t d = 0; d < sub.simplices.size(); ++d)
    for (int s : sub.simplices[d]) {
      std::vector<int> faces;
      if (d > 0)
        for (int face : dc.faces(static_cast<int>(d), s)) {
          if (face == kDegenerateFace) {
            faces.push_back(kDegenerateFace);
            continue;
          }
          const int idx = new_index[d - 1][face];
          if (idx < 0)
            throw InternalError("fixed subcomplex: face of a fixed simplex is "
                                "not fixed");
          faces.push_back(idx);
        }
      sub.complex.add_simplex(static_cast<int>(d), std::move(faces));
    }
  return sub;
}

} // namespace catquot
