#ifndef CHAINSYM_TESTS_ORACLES_HPP
#define CHAINSYM_TESTS_ORACLES_HPP

// Test-only reference computations. Nothing here calls the search, rewrite or
// enumeration code it is used to check.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include <chainsym/linkgraph.hpp>
#include <chainsym/permutation.hpp>

namespace chainsym::oracle {

inline std::vector<std::vector<char>> adjacency_matrix(const LinkingGraph &g)
{
  const int m = g.vertex_count();
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (auto [a, b] : g.edges())
    adj[a][b] = adj[b][a] = 1;
  return adj;
}

/// Every permutation tested outright (m <= 9).
inline std::vector<Permutation> all_permutation_automorphisms(const LinkingGraph &g)
{
  const int m = g.vertex_count();
  const auto adj = adjacency_matrix(g);
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a)
      for (int b = a + 1; b < m && ok; ++b)
        ok = adj[a][b] == adj[p[a]][p[b]];
    if (ok)
      out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Exhaustive walk of the permutation tree in lexicographic order, cutting a
/// branch only when a pair of assigned vertices disagrees on adjacency. No
/// degree or neighborhood pruning.
inline std::vector<Permutation> exhaustive_automorphisms(const LinkingGraph &g)
{
  const int m = g.vertex_count();
  if (m <= 9)
    return all_permutation_automorphisms(g);
  const auto adj = adjacency_matrix(g);
  std::vector<int> img;
  std::vector<char> used(m, 0);
  std::vector<Permutation> out;
  auto rec = [&](auto &&self, int v) -> void {
    if (v == m) {
      out.emplace_back(img);
      return;
    }
    for (int w = 0; w < m; ++w) {
      if (used[w])
        continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = adj[u][v] == adj[img[u]][w];
      if (!ok)
        continue;
      used[w] = 1;
      img.push_back(w);
      self(self, v + 1);
      img.pop_back();
      used[w] = 0;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Swap sets by filtering all 2^m subsets of residues.
inline std::vector<std::vector<int>> subset_filter_swap_sets(int m)
{
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1)
        s.push_back(i);
    bool ok = true;
    for (std::size_t a = 0; a < s.size() && ok; ++a)
      for (std::size_t b = a + 1; b < s.size() && ok; ++b) {
        int d = s[b] - s[a];
        ok = std::min(d, m - d) >= 4;
      }
    if (ok)
      out.push_back(std::move(s));
  }
  return out;
}

/// Number of dihedral orbits among the given index sets, by marking orbits.
inline int count_orbits(int m, const std::vector<std::vector<int>> &sets)
{
  std::set<std::vector<int>> seen;
  int classes = 0;
  for (const auto &s : sets) {
    if (seen.count(s))
      continue;
    ++classes;
    for (int dir : {1, -1})
      for (int shift = 0; shift < m; ++shift) {
        std::vector<int> img;
        for (int x : s)
          img.push_back(((dir * x + shift) % m + m) % m);
        std::sort(img.begin(), img.end());
        seen.insert(img);
      }
  }
  return classes;
}

/// Linking-graph edges of the swapped chain written out directly: the chain
/// clasps outside swap windows plus the four linked pairs of each window.
inline std::set<std::pair<int, int>> expected_swapped_edges(int m, const std::vector<int> &swaps)
{
  auto w = [m](int x) { return ((x % m) + m) % m; };
  auto e = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::set<int> touched;
  for (int i : swaps)
    for (int off = -1; off <= 1; ++off)
      touched.insert(w(i + off));
  std::set<std::pair<int, int>> out;
  for (int j = 0; j < m; ++j)
    if (!touched.count(j))
      out.insert(e(j, w(j + 1)));
  for (int i : swaps) {
    out.insert(e(w(i - 1), w(i + 1)));
    out.insert(e(w(i), w(i + 1)));
    out.insert(e(w(i), w(i + 2)));
    out.insert(e(w(i - 1), w(i + 2)));
  }
  return out;
}

/// Dihedral group of the k-gon on k points: rotation and reflection.
inline std::vector<Permutation> dihedral_generators(int k)
{
  std::vector<int> rot(k), ref(k);
  for (int i = 0; i < k; ++i) {
    rot[i] = (i + 1) % k;
    ref[i] = (k - i) % k;
  }
  return {Permutation(rot), Permutation(ref)};
}

inline Permutation cyclic_generator(int k)
{
  std::vector<int> rot(k);
  for (int i = 0; i < k; ++i)
    rot[i] = (i + 1) % k;
  return Permutation(rot);
}

} // namespace chainsym::oracle

#endif // CHAINSYM_TESTS_ORACLES_HPP
