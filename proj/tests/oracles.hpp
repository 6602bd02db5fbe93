#pragma once

// Brute-force references. Deliberately naive and independent of the library
// algorithms: they only share the encodings (Subset bits, one-line images).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "pwpoly/geomoracle.hpp"
#include "pwpoly/weyl.hpp"

namespace oracle {

using pwpoly::Family;
using pwpoly::RSType;
using pwpoly::SignedPermutation;
using pwpoly::Subset;

// W as image vectors over the ground set: permutations of [n] times sign masks,
// D keeps even sign counts.
inline std::vector<std::vector<int>> group(const RSType& t)
{
  const int n = t.n;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    const int masks = t.family == Family::A ? 1 : 1 << n;
    for (int m = 0; m < masks; ++m) {
      if (t.family == Family::D && __builtin_popcount(static_cast<unsigned>(m)) % 2)
        continue;
      std::vector<int> img(static_cast<std::size_t>(t.ground_size()));
      for (int i = 1; i <= n; ++i) {
        int v = p[static_cast<std::size_t>(i - 1)];
        if ((m >> (i - 1)) & 1)
          v = 2 * n + 1 - v;
        img[static_cast<std::size_t>(i - 1)] = v;
        if (t.has_bars())
          img[static_cast<std::size_t>(2 * n - i)] = 2 * n + 1 - v;
      }
      out.push_back(img);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<SignedPermutation> group_elements(const RSType& t)
{
  std::vector<SignedPermutation> out;
  for (auto& g : group(t))
    out.emplace_back(g);
  return out;
}

inline int descents(const std::vector<int>& p)
{
  int d = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    d += p[i] > p[i + 1];
  return d;
}

// coefficients of the descent generating function over S_m
inline std::vector<std::int64_t> eulerian(int m)
{
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::int64_t> c(static_cast<std::size_t>(std::max(m, 1)), 0);
  do
    ++c[static_cast<std::size_t>(descents(p))];
  while (std::next_permutation(p.begin(), p.end()));
  return c;
}

inline bool signed_subset(unsigned bits, int n)
{
  if (!bits)
    return false;
  for (int i = 1; i <= n; ++i)
    if (((bits >> (i - 1)) & 1) && ((bits >> (2 * n - i)) & 1))
      return false;
  return true;
}

// facet labels of the full polytope by scanning every mask
inline std::vector<Subset> base_family(const RSType& t)
{
  std::vector<Subset> out;
  const int g = t.ground_size();
  for (unsigned m = 1; m < (1u << g); ++m) {
    const int sz = __builtin_popcount(m);
    bool ok = false;
    switch (t.family) {
    case Family::A:
      ok = sz < t.n;
      break;
    case Family::B:
    case Family::C:
      ok = signed_subset(m, t.n);
      break;
    case Family::D:
      ok = signed_subset(m, t.n) && sz != t.n - 1;
      break;
    }
    if (ok)
      out.push_back(Subset{m});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// closure of the generators s_k, k in K, as a set of image vectors
inline std::set<std::vector<int>> parabolic(const pwpoly::ParabolicK& pk)
{
  std::vector<std::vector<int>> gens;
  for (int k : pk.K)
    gens.push_back(pwpoly::simple_reflection(pk.type, k).images());
  std::vector<int> id(static_cast<std::size_t>(pk.type.ground_size()));
  std::iota(id.begin(), id.end(), 1);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> todo{id};
  while (!todo.empty()) {
    auto w = todo.back();
    todo.pop_back();
    for (const auto& s : gens) {
      std::vector<int> sw(w.size());
      for (std::size_t i = 0; i < w.size(); ++i)
        sw[i] = s[static_cast<std::size_t>(w[i] - 1)];
      if (seen.insert(sw).second)
        todo.push_back(sw);
    }
  }
  return seen;
}

// orbits of the ground set under the generators, by union-find
inline std::set<unsigned> orbits(const pwpoly::ParabolicK& pk)
{
  const int g = pk.type.ground_size();
  std::vector<int> parent(static_cast<std::size_t>(g + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (int k : pk.K) {
    auto s = pwpoly::simple_reflection(pk.type, k);
    for (int e = 1; e <= g; ++e)
      parent[static_cast<std::size_t>(find(e))] = find(s(e));
  }
  std::map<int, unsigned> parts;
  for (int e = 1; e <= g; ++e)
    parts[find(e)] |= 1u << (e - 1);
  std::set<unsigned> out;
  for (auto& [r, bits] : parts)
    out.insert(bits);
  return out;
}

// min over the vertex orbit of <e_I, x>
inline pwpoly::Rational min_over_orbit(Subset I, const pwpoly::AnchorPoint& anchor)
{
  const auto normal = pwpoly::subset_normal(I, anchor.type);
  bool first = true;
  pwpoly::Rational best;
  for (const auto& u : group_elements(anchor.type)) {
    auto v = pwpoly::dot(normal, pwpoly::orbit_point(u, anchor));
    if (first || v < best)
      best = v;
    first = false;
  }
  return best;
}

// d-vertex cliques by testing every d-subset of vertices
inline std::vector<std::uint64_t> clique_counts(const pwpoly::IntersectionGraph& g, int max_size)
{
  std::vector<std::uint64_t> c(static_cast<std::size_t>(max_size) + 2, 0);
  const auto n = g.size();
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    ++c[std::min(pick.size(), c.size() - 1)];
    if (static_cast<int>(pick.size()) > max_size)
      return;
    for (std::size_t v = from; v < n; ++v) {
      bool ok = true;
      for (auto u : pick)
        ok = ok && g.adjacent(u, v);
      if (!ok)
        continue;
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return c;  // last slot counts anything larger than max_size
}

// type A Precup polynomial straight from the permutation characterisation
inline std::vector<std::int64_t> precup_typeA(int n, const std::vector<int>& K)
{
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::int64_t> h(static_cast<std::size_t>(n), 0);
  do {
    std::vector<int> inv(static_cast<std::size_t>(n + 1));
    for (int i = 0; i < n; ++i)
      inv[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])] = i + 1;
    bool in = true;
    for (int k : K)
      in = in && inv[static_cast<std::size_t>(k)] - inv[static_cast<std::size_t>(k + 1)] <= 1;
    if (in)
      ++h[static_cast<std::size_t>(descents(w))];
  } while (std::next_permutation(w.begin(), w.end()));
  while (!h.empty() && h.back() == 0)
    h.pop_back();
  return h;
}

// w acting on E coordinates, written out directly
inline pwpoly::RVec act(const std::vector<int>& w, const pwpoly::RVec& v)
{
  const int n = static_cast<int>(v.size());
  pwpoly::RVec r(v.size());
  for (int i = 1; i <= n; ++i) {
    const int j = w[static_cast<std::size_t>(i - 1)];
    if (j <= n)
      r[static_cast<std::size_t>(j - 1)] += v[static_cast<std::size_t>(i - 1)];
    else
      r[static_cast<std::size_t>(2 * n - j)] -= v[static_cast<std::size_t>(i - 1)];
  }
  return r;
}

// for the standard positive systems of A-D a root is positive iff its first
// nonzero coordinate is
inline bool positive(const pwpoly::RVec& r)
{
  for (const auto& x : r)
    if (x != 0)
      return x > 0;
  return false;
}

inline std::vector<int> inverse(const std::vector<int>& w)
{
  std::vector<int> inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    inv[static_cast<std::size_t>(w[i] - 1)] = static_cast<int>(i) + 1;
  return inv;
}

// Σ t^{d(w)} over W(K), every group element tested from scratch
inline std::vector<std::int64_t> precup(const pwpoly::ParabolicK& pk)
{
  const auto rs = pwpoly::build_root_system(pk.type);
  std::vector<std::int64_t> h(static_cast<std::size_t>(rs.rank()) + 1, 0);
  for (const auto& w : group(pk.type)) {
    const auto inv = inverse(w);
    bool in = true;
    for (int k : pk.K) {
      auto r = act(inv, rs.simple_roots[static_cast<std::size_t>(k - 1)]);
      if (positive(r))
        continue;
      pwpoly::RVec neg = r;
      for (auto& x : neg)
        x = -x;
      in = in && std::find(rs.simple_roots.begin(), rs.simple_roots.end(), neg) != rs.simple_roots.end();
    }
    if (!in)
      continue;
    int d = 0;
    for (const auto& a : rs.simple_roots)
      d += !positive(act(w, a));  // w(-a) positive iff w(a) negative
    ++h[static_cast<std::size_t>(d)];
  }
  while (!h.empty() && h.back() == 0)
    h.pop_back();
  return h;
}

inline std::vector<std::vector<int>> all_K(int rank)
{
  std::vector<std::vector<int>> out;
  for (int m = 0; m < (1 << rank); ++m) {
    std::vector<int> K;
    for (int k = 1; k <= rank; ++k)
      if ((m >> (k - 1)) & 1)
        K.push_back(k);
    out.push_back(K);
  }
  return out;
}

} // namespace oracle
