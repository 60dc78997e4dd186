#pragma once

#include "catquot/action.hpp"
#include "catquot/category.hpp"
#include "catquot/quotient.hpp"

#include <map>
#include <optional>
#include <vector>

namespace catquot {

inline constexpr int kDegenerateFace = -1;

/// A semi-simplicial complex holding nondegenerate simplices only. Each
/// d-simplex (d >= 1) lists its d+1 faces d_0, ..., d_d as indices into
/// dimension d-1; kDegenerateFace marks a face that is degenerate in the
/// ambient simplicial set (it contributes nothing to the normalized
/// boundary).
class DeltaComplex {
public:
  /// Highest dimension with at least one simplex; -1 for the empty complex.
  int dimension() const noexcept;
  int count(int d) const {
    return d >= 0 && d < static_cast<int>(faces_.size())
               ? static_cast<int>(faces_[d].size())
               : 0;
  }
  const std::vector<int> &faces(int d, int i) const { return faces_[d][i]; }

  /// Appends a d-simplex; returns its index.
  int add_simplex(int d, std::vector<int> faces);

  /// Simplex counts for dimensions 0..dimension().
  std::vector<int> f_vector() const;

  /// Face indices in range and d_i d_j = d_{j-1} d_i for i < j.
  ValidationReport validate() const;

  friend bool operator==(const DeltaComplex &, const DeltaComplex &) = default;

private:
  std::vector<std::vector<std::vector<int>>> faces_;
};

/// Per-dimension map of simplex indices; kDegenerateFace marks a simplex sent
/// to a degenerate one.
struct SimplicialMap {
  std::vector<std::vector<int>> map;
};

/// Δ(K) in the normalized model. The d-simplices (d >= 1) are the composable
/// chains (m_1, ..., m_d) of nonidentity morphisms, target(m_i) =
/// source(m_{i+1}), numbered in lexicographic order; 0-simplices are the
/// objects. d_0 drops m_1, d_d drops m_d, inner faces compose neighbours.
struct Nerve {
  DeltaComplex complex;
  /// chains[d][i]: {object} for d = 0, the morphism chain otherwise.
  std::vector<std::vector<std::vector<int>>> chains;

  /// Index of a chain in dimension d, or -1.
  int find(int d, const std::vector<int> &chain) const;

  std::vector<std::map<std::vector<int>, int>> index;
};

/// Builds Δ(K) up to `max_dim` (default: the longest chain). A category with
/// a nonidentity cycle has unbounded chains: only max_dim <= 1 is accepted
/// for it, anything else throws PreconditionError.
Nerve nerve(const FiniteCategory &c, std::optional<int> max_dim = std::nullopt);

/// Δ(g) for an automorphism g of K.
SimplicialMap induced_map(const Nerve &n, const CatAutomorphism &g);

/// Δ(K)/G: orbits of simplices with faces induced from representatives.
struct OrbitComplex {
  DeltaComplex complex;
  std::vector<std::vector<int>> orbit_of;       ///< nerve simplex -> orbit
  std::vector<std::vector<int>> representative; ///< orbit -> least simplex
};

OrbitComplex orbit_complex(const Nerve &n, const ActionGroup &a);
OrbitComplex nerve_quotient(const FiniteCategory &c, const ActionGroup &a,
                            std::optional<int> max_dim = std::nullopt);

/// The canonical map λ: Δ(K)/G -> Δ(K/G), G(n_1, ..., n_d) |-> ([n_1], ...,
/// [n_d]). Construction checks that λ commutes with faces and is surjective
/// in every dimension, throwing InternalError otherwise.
struct CanonicalLambda {
  Nerve nerve;                ///< Δ(K)
  OrbitComplex orbits;        ///< Δ(K)/G
  QuotientCategory quotient;  ///< K/G
  Nerve quotient_nerve;       ///< Δ(K/G)
  SimplicialMap map;          ///< orbit index -> Δ(K/G) index
};

CanonicalLambda canonical_lambda(const FiniteCategory &c, const ActionGroup &a,
                                 std::optional<int> max_dim = std::nullopt);

struct LambdaDimension {
  int dim;
  bool surjective;
  bool injective;
};

/// One entry per dimension 0..max_dim.
std::vector<LambdaDimension> lambda_report(const CanonicalLambda &lambda);
std::vector<LambdaDimension>
lambda_skeleton_report(const FiniteCategory &c, const ActionGroup &a,
                       std::optional<int> max_dim = std::nullopt);

/// λ injective on all simplices of dimension <= t.
bool injective_on_skeleton(const std::vector<LambdaDimension> &report, int t);

/// Subcomplex of simplices fixed by a simplicial automorphism.
struct Subcomplex {
  DeltaComplex complex;
  std::vector<std::vector<int>> simplices; ///< sub index -> parent index
};

Subcomplex fixed_subcomplex(const DeltaComplex &d, const SimplicialMap &f);

} // namespace catquot
