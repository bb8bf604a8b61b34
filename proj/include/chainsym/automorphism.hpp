#ifndef CHAINSYM_AUTOMORPHISM_HPP
#define CHAINSYM_AUTOMORPHISM_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "groups.hpp"
#include "linkgraph.hpp"
#include "permutation.hpp"

namespace chainsym {

enum class AutMethod
{
  backtrack, ///< full pruned search, authoritative
  dihedral   ///< only the 2m dihedral symmetries of a known Hamiltonian cycle
};

struct AutOptions
{
  /// Edgeless graphs with more vertices than this raise SymmetricGroupTooLarge.
  int edgeless_vertex_bound = 8;
  /// Abort with OrderBoundExceeded once this many automorphisms are found.
  std::size_t max_order = default_order_cap;
};

namespace detail {

class AutSearch
{
public:
  AutSearch(const LinkingGraph &g, const AutOptions &opts)
  : _g(g), _opts(opts), _image(g.vertex_count(), -1), _preimage(g.vertex_count(), -1)
  {
    const int m = g.vertex_count();
    _signature.resize(m);
    for (int v = 0; v < m; ++v) {
      auto &sig = _signature[v];
      sig.push_back(g.degree(v));
      for (int w : g.neighbors(v))
        sig.push_back(g.degree(w));
      std::sort(sig.begin() + 1, sig.end());
    }
  }

  std::vector<Permutation> run()
  {
    extend(0);
    return std::move(_found);
  }

private:
  bool consistent(int v, int w) const
  {
    int assigned_nb = 0;
    for (int u : _g.neighbors(v)) {
      if (u >= v)
        continue;
      if (!_g.adjacent(_image[u], w))
        return false;
      ++assigned_nb;
    }
    int image_nb = 0;
    for (int x : _g.neighbors(w))
      if (_preimage[x] != -1)
        ++image_nb;
    return image_nb == assigned_nb;
  }

  void extend(int v)
  {
    const int m = _g.vertex_count();
    if (v == m) {
      if (_found.size() >= _opts.max_order)
        throw OrderBoundExceeded("automorphism group order exceeds cap " +
                                 std::to_string(_opts.max_order));
      _found.emplace_back(_image);
      return;
    }
    for (int w = 0; w < m; ++w) {
      if (_preimage[w] != -1 || _signature[w] != _signature[v] || !consistent(v, w))
        continue;
      _image[v] = w;
      _preimage[w] = v;
      extend(v + 1);
      _image[v] = -1;
      _preimage[w] = -1;
    }
  }

  const LinkingGraph &_g;
  const AutOptions &_opts;
  std::vector<std::vector<int>> _signature;
  std::vector<int> _image;
  std::vector<int> _preimage;
  std::vector<Permutation> _found;
};

inline bool preserves_edges(const LinkingGraph &g, const Permutation &p)
{
  for (auto [a, b] : g.edges())
    if (!g.adjacent(p(a), p(b)))
      return false;
  return true;
}

} // namespace detail

/// Full automorphism group of a linking graph.
///
/// Deterministic backtracking that assigns images in label order, restricted
/// to vertices with the same degree and sorted neighbor-degree multiset.
inline PermGroup automorphism_group(const LinkingGraph &g, const AutOptions &opts = {})
{
  const int m = g.vertex_count();
  if (g.edges().empty() && m > opts.edgeless_vertex_bound)
    throw SymmetricGroupTooLarge("edgeless graph on " + std::to_string(m) +
                                 " vertices has automorphism group S" +
                                 std::to_string(m) + " (bound " +
                                 std::to_string(opts.edgeless_vertex_bound) + ")");
  if (m == 0)
    return closure(0, {});
  auto found = detail::AutSearch(g, opts).run();
  return group_from_elements(m, std::move(found));
}

/// Automorphisms among the 2m dihedral symmetries of the cycle given by
/// `cycle_order` (position -> vertex).
inline PermGroup dihedral_automorphisms(const LinkingGraph &g,
                                        const std::vector<int> &cycle_order)
{
  const int m = g.vertex_count();
  if (static_cast<int>(cycle_order.size()) != m)
    throw SizeMismatchError("cycle order has " + std::to_string(cycle_order.size()) +
                            " entries for a graph on " + std::to_string(m) +
                            " vertices");
  std::vector<Permutation> found;
  for (int dir : {1, -1}) {
    for (int shift = 0; shift < m; ++shift) {
      std::vector<int> im(m);
      for (int p = 0; p < m; ++p)
        im[cycle_order[p]] = cycle_order[(((dir * p + shift) % m) + m) % m];
      Permutation perm(std::move(im));
      if (detail::preserves_edges(g, perm))
        found.push_back(std::move(perm));
    }
  }
  return group_from_elements(m, std::move(found));
}

/// Aut of the linking graph of the link obtained from C_m by `swaps`.
inline PermGroup link_automorphisms(const SwapSet &swaps,
                                    AutMethod method = AutMethod::backtrack)
{
  LinkingGraph g = rewrite_graph(swaps);
  if (method == AutMethod::dihedral)
    return dihedral_automorphisms(g, rewrite_cycle_order(swaps));
  return automorphism_group(g);
}

} // namespace chainsym

#endif // CHAINSYM_AUTOMORPHISM_HPP
