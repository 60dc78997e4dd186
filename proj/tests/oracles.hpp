#pragma once

// Reference computations used only by the tests. Each one follows the
// definition directly, shares no code path with the library routine it
// checks, and is only fast enough for the small instances used here.

#include "catquot/action.hpp"
#include "catquot/category.hpp"
#include "catquot/complex.hpp"
#include "catquot/quotient.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using namespace catquot;

/// Composable chains m_1, ..., m_len with target(m_i) = source(m_{i+1}),
/// identities allowed.
inline void for_each_chain(const FiniteCategory &c, int len,
                           const std::function<void(const std::vector<int> &)> &fn) {
  std::vector<int> chain;
  std::function<void()> rec = [&] {
    if (static_cast<int>(chain.size()) == len) {
      fn(chain);
      return;
    }
    for (int m = 0; m < c.n_morphisms(); ++m)
      if (chain.empty() || c.source(m) == c.target(chain.back())) {
        chain.push_back(m);
        rec();
        chain.pop_back();
      }
  };
  rec();
}

/// Condition (C_t) straight from its statement.
inline bool condition_ct(const FiniteCategory &c, const ActionGroup &a, int t) {
  bool holds = true;
  for_each_chain(c, t - 1, [&](const std::vector<int> &chain) {
    if (!holds)
      return;
    const int x = c.target(chain.back());
    for (int ma = 0; ma < c.n_morphisms(); ++ma)
      for (int mb = 0; mb < c.n_morphisms(); ++mb) {
        if (c.source(ma) != x || c.source(mb) != x)
          continue;
        bool same_orbit = false, transported = false;
        for (int g = 0; g < a.order(); ++g) {
          if (a.act_morphism(g, ma) != mb)
            continue;
          same_orbit = true;
          bool fixes = true;
          for (int m : chain)
            fixes = fixes && a.act_morphism(g, m) == m;
          transported = transported || fixes;
        }
        if (same_orbit && !transported)
          holds = false;
      }
  });
  return holds;
}

/// Number of G-orbits of nondegenerate d-chains of K, and number of
/// nondegenerate d-chains of K/G. λ is injective in dimension d iff these
/// agree (it is always onto).
inline std::pair<int, int> lambda_counts(const FiniteCategory &c, const ActionGroup &a,
                                         int d) {
  std::set<std::vector<int>> chains, orbits;
  for_each_chain(c, d, [&](const std::vector<int> &ch) {
    for (int m : ch)
      if (c.is_identity(m))
        return;
    chains.insert(ch);
  });
  for (const auto &ch : chains) {
    std::vector<int> least = ch;
    for (int g = 0; g < a.order(); ++g) {
      std::vector<int> img;
      for (int m : ch)
        img.push_back(a.act_morphism(g, m));
      least = std::min(least, img);
    }
    orbits.insert(least);
  }
  const FiniteCategory q = quotient_category(c, a).category;
  int qchains = 0;
  for_each_chain(q, d, [&](const std::vector<int> &ch) {
    for (int m : ch)
      if (q.is_identity(m))
        return;
    ++qchains;
  });
  return {static_cast<int>(orbits.size()), qchains};
}

/// Rank of an integer matrix modulo a large prime.
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> m) {
  constexpr std::int64_t p = 1000003;
  auto inv = [](std::int64_t v) {
    std::int64_t r = 1, e = p - 2;
    v %= p;
    while (e) {
      if (e & 1)
        r = r * v % p;
      v = v * v % p;
      e >>= 1;
    }
    return r;
  };
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (auto &row : m)
    for (auto &v : row)
      v = ((v % p) + p) % p;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c]) {
        piv = r;
        break;
      }
    if (piv < 0)
      continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t iv = inv(m[rank][c]);
    for (int r = 0; r < rows; ++r)
      if (r != rank && m[r][c]) {
        const std::int64_t f = m[r][c] * iv % p;
        for (int k = c; k < cols; ++k)
          m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
      }
    ++rank;
  }
  return rank;
}

/// Betti numbers of a delta complex from ranks mod p of its boundaries.
inline std::vector<int> betti_mod_p(const DeltaComplex &dc) {
  const int top = dc.dimension();
  std::vector<int> rank(top + 2, 0);
  for (int d = 1; d <= top; ++d) {
    std::vector<std::vector<std::int64_t>> m(dc.count(d - 1),
                                             std::vector<std::int64_t>(dc.count(d), 0));
    for (int s = 0; s < dc.count(d); ++s)
      for (int i = 0; i <= d; ++i)
        if (dc.faces(d, s)[i] >= 0)
          m[dc.faces(d, s)[i]][s] += i % 2 ? -1 : 1;
    rank[d] = rank_mod_p(m);
  }
  std::vector<int> b;
  for (int d = 0; d <= top; ++d)
    b.push_back(dc.count(d) - rank[d] - rank[d + 1]);
  return b;
}

/// Classical Möbius value μ(0̂, 1̂) of a poset with both bounds adjoined,
/// from the incidence algebra recursion over intervals.
inline long poset_mobius(const Poset &p) {
  const int n = p.size();
  // element n is 0̂ (below all), n+1 is 1̂ (above all)
  auto leq = [&](int a, int b) {
    if (a == b || a == n || b == n + 1)
      return true;
    if (a == n + 1 || b == n)
      return false;
    return p.leq(a, b);
  };
  std::vector<long> mu(n + 2, 0);
  std::vector<char> done(n + 2, 0);
  std::function<long(int)> from_bottom = [&](int x) -> long {
    if (done[x])
      return mu[x];
    long s = 0;
    if (x != n)
      for (int y = 0; y < n + 2; ++y)
        if (y != x && leq(n, y) && leq(y, x))
          s += from_bottom(y);
    mu[x] = x == n ? 1 : -s;
    done[x] = 1;
    return mu[x];
  };
  return from_bottom(n + 1);
}

} // namespace oracle
