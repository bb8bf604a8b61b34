#ifndef CHAINSYM_LINKGRAPH_HPP
#define CHAINSYM_LINKGRAPH_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core_model.hpp"
#include "errors.hpp"

namespace chainsym {

/// Unordered vertex pair, stored with first < second (0-based).
using Edge = std::pair<int, int>;

/// Labeled simple graph on vertices 0..m-1; vertex v stands for component
/// K_{v+1}, and an edge joins two components with nonzero linking number.
class LinkingGraph
{
public:
  LinkingGraph() = default;

  /// Throws GraphError on loops, out-of-range endpoints or repeated edges.
  LinkingGraph(int vertices, std::vector<Edge> edges)
  : _vertices(vertices)
  {
    if (vertices < 0)
      throw GraphError("negative vertex count");
    for (auto &[a, b] : edges) {
      if (a < 0 || b < 0 || a >= vertices || b >= vertices)
        throw GraphError("edge endpoint outside [1, " + std::to_string(vertices) +
                         "]");
      if (a == b)
        throw GraphError("loop at v" + std::to_string(a + 1));
      if (a > b)
        std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
      throw GraphError("repeated edge (v" + std::to_string(dup->first + 1) +
                       ", v" + std::to_string(dup->second + 1) + ")");
    _edges = std::move(edges);

    _adjacency.assign(static_cast<std::size_t>(vertices) * vertices, 0);
    _neighbors.assign(vertices, {});
    for (auto [a, b] : _edges) {
      _adjacency[index(a, b)] = _adjacency[index(b, a)] = 1;
      _neighbors[a].push_back(b);
      _neighbors[b].push_back(a);
    }
    for (auto &nb : _neighbors)
      std::sort(nb.begin(), nb.end());
  }

  int vertex_count() const noexcept
  { return _vertices; }

  /// Sorted edge list.
  const std::vector<Edge> &edges() const noexcept
  { return _edges; }

  bool adjacent(int a, int b) const
  { return _adjacency[index(a, b)] != 0; }

  const std::vector<int> &neighbors(int v) const
  { return _neighbors[v]; }

  int degree(int v) const
  { return static_cast<int>(_neighbors[v].size()); }

  friend bool operator==(const LinkingGraph &a, const LinkingGraph &b)
  { return a._vertices == b._vertices && a._edges == b._edges; }

private:
  std::size_t index(int a, int b) const
  { return static_cast<std::size_t>(a) * _vertices + b; }

  int _vertices = 0;
  std::vector<Edge> _edges;
  std::vector<char> _adjacency;
  std::vector<std::vector<int>> _neighbors;
};

/// Linking graph of the chain C_m: the m-cycle v1 - v2 - ... - vm - v1.
inline LinkingGraph cycle_graph(int m)
{
  ChainSize size(m);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    edges.emplace_back(i, size.wrap(i + 1));
  return LinkingGraph(m, std::move(edges));
}

inline bool is_labeled_cycle(const LinkingGraph &g)
{
  const int m = g.vertex_count();
  if (static_cast<int>(g.edges().size()) != m || m < 3)
    return false;
  for (int i = 0; i < m; ++i)
    if (!g.adjacent(i, (i + 1) % m))
      return false;
  return true;
}

/// One swap step on a graph: exchange labels i and i+1, then join i-1 to i+2
/// (0-based, mod m). Windows of non-overlapping swaps are disjoint, so steps
/// for the members of a SwapSet commute.
inline LinkingGraph apply_swap_step(const LinkingGraph &g, int i)
{
  const int m = g.vertex_count();
  auto wrap = [m](int x) { return ((x % m) + m) % m; };
  const int a = wrap(i), b = wrap(i + 1);
  auto relabel = [&](int v) { return v == a ? b : v == b ? a : v; };

  std::vector<Edge> edges;
  edges.reserve(g.edges().size() + 1);
  for (auto [u, v] : g.edges())
    edges.emplace_back(relabel(u), relabel(v));
  edges.emplace_back(wrap(i - 1), wrap(i + 2));
  return LinkingGraph(m, std::move(edges));
}

/// Linking graph of the swapped link, obtained from the labeled cycle by the
/// label-exchange-plus-chord rule for every swap index.
inline LinkingGraph apply_swaps_rewrite(const LinkingGraph &cycle, const SwapSet &swaps)
{
  if (cycle.vertex_count() != swaps.size().components())
    throw SizeMismatchError("graph has " + std::to_string(cycle.vertex_count()) +
                            " vertices but the swap set is for C" +
                            std::to_string(swaps.size().components()));
  if (!is_labeled_cycle(cycle))
    throw NotCycleError("rewrite input must be the labeled cycle v1 - ... - v" +
                        std::to_string(cycle.vertex_count()));
  LinkingGraph g = cycle;
  for (int i : swaps.indices())
    g = apply_swap_step(g, i);
  return g;
}

inline LinkingGraph rewrite_graph(const SwapSet &swaps)
{ return apply_swaps_rewrite(cycle_graph(swaps.size().components()), swaps); }

/// The Hamiltonian cycle of the rewritten graph as a sequence of vertices:
/// position p holds vertex p, except that positions i and i+1 hold each
/// other's vertex for every swap index i.
inline std::vector<int> rewrite_cycle_order(const SwapSet &swaps)
{
  const int m = swaps.size().components();
  std::vector<int> order(m);
  for (int p = 0; p < m; ++p)
    order[p] = p;
  for (int i : swaps.indices())
    std::swap(order[i], order[(i + 1) % m]);
  return order;
}

/// Deterministic Graphviz rendering; vertices in label order, edges sorted.
inline std::string to_dot(const LinkingGraph &g, const std::string &name = "linking_graph")
{
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "  v" << v + 1 << ";\n";
  for (auto [a, b] : g.edges())
    out << "  v" << a + 1 << " -- v" << b + 1 << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace chainsym

#endif // CHAINSYM_LINKGRAPH_HPP
