#ifndef CHAINSYM_DIAGRAMS_HPP
#define CHAINSYM_DIAGRAMS_HPP

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core_model.hpp"
#include "errors.hpp"
#include "linkgraph.hpp"

namespace chainsym {

/// One crossing between two components (0-based ids internally).
/// Only the data needed for linking numbers is kept: which strand is over,
/// which is under, and the crossing sign.
struct Crossing
{
  int over = 0;
  int under = 0;
  int sign = 1;

  friend bool operator==(const Crossing &, const Crossing &) = default;
  friend auto operator<=>(const Crossing &, const Crossing &) = default;
};

/// A crossing list for a link whose components are K1..Km.
class Diagram
{
public:
  explicit Diagram(ChainSize size, std::vector<Crossing> crossings = {})
  : _size(size), _crossings(std::move(crossings))
  {
    const int m = size.components();
    for (const auto &c : _crossings) {
      if (c.over < 0 || c.over >= m || c.under < 0 || c.under >= m)
        throw DiagramError("crossing component outside [1, " + std::to_string(m) +
                           "]");
      if (c.sign != 1 && c.sign != -1)
        throw DiagramError("crossing sign must be +1 or -1, got " +
                           std::to_string(c.sign));
    }
  }

  ChainSize size() const noexcept
  { return _size; }

  const std::vector<Crossing> &crossings() const noexcept
  { return _crossings; }

  friend bool operator==(const Diagram &, const Diagram &) = default;

private:
  ChainSize _size;
  std::vector<Crossing> _crossings;
};

/// Symmetric integer matrix of pairwise linking numbers, zero diagonal.
class LinkingMatrix
{
public:
  explicit LinkingMatrix(ChainSize size)
  : _size(size),
    _entries(static_cast<std::size_t>(size.components()) * size.components(), 0)
  {}

  ChainSize size() const noexcept
  { return _size; }

  int operator()(int a, int b) const
  { return _entries[index(a, b)]; }

  void set(int a, int b, int value)
  { _entries[index(a, b)] = _entries[index(b, a)] = value; }

  friend bool operator==(const LinkingMatrix &, const LinkingMatrix &) = default;

private:
  std::size_t index(int a, int b) const
  { return static_cast<std::size_t>(a) * _size.components() + b; }

  ChainSize _size;
  std::vector<int> _entries;
};

namespace detail {

// Two crossings of equal sign: a clasp with linking number `lk`.
inline void add_clasp(std::vector<Crossing> &out, int a, int b, int lk)
{
  out.push_back({a, b, lk});
  out.push_back({b, a, lk});
}

} // namespace detail

/// Crossing diagram of the minimally twisted chain C_m: one clasp between
/// each pair of consecutive components.
///
/// Every clasp is given linking number +1. The alternating twist of the
/// actual chain only changes signs, and linking graphs depend only on
/// which linking numbers vanish.
inline Diagram chain_diagram(ChainSize size)
{
  const int m = size.components();
  std::vector<Crossing> crossings;
  crossings.reserve(2 * m);
  for (int i = 0; i < m; ++i)
    detail::add_clasp(crossings, i, size.wrap(i + 1), +1);
  return Diagram(size, std::move(crossings));
}

/// Linking numbers of the swap template for swap index i, applied to the
/// window K_{i-1}, K_i, K_{i+1}, K_{i+2} (offsets -1..2 from i).
///
/// After the three twists K_{i-1} is wrapped around K_{i+1}, K_i stays
/// clasped with K_{i+1}, and K_{i+2} is clasped with both K_{i-1} and K_i;
/// K_{i-1}K_i and K_{i+1}K_{i+2} come apart. The signs are a modeling
/// choice; only which pairs link is used downstream.
struct SwapTemplateClasp
{
  int first_offset;
  int second_offset;
  int lk;
};

inline constexpr SwapTemplateClasp swap_template[] = {
  {-1, 1, +1}, // K_{i-1} wrapped around K_{i+1}
  {0, 1, +1},  // K_i, K_{i+1}
  {0, 2, -1},  // K_i, K_{i+2}
  {-1, 2, -1}, // K_{i-1}, K_{i+2}
};

/// Crossing diagram after the swaps: for each swap index the three clasps
/// K_{i-1}K_i, K_iK_{i+1}, K_{i+1}K_{i+2} are replaced by the template clasps;
/// every other clasp of the chain is kept.
inline Diagram swapped_diagram(const SwapSet &swaps)
{
  const ChainSize size = swaps.size();
  const int m = size.components();

  // replaced[j]: clasp between K_j and K_{j+1} is rewritten
  std::vector<char> replaced(m, 0);
  for (int i : swaps.indices())
    for (int off = -1; off <= 1; ++off)
      replaced[size.wrap(i + off)] = 1;

  std::vector<Crossing> crossings;
  for (int j = 0; j < m; ++j)
    if (!replaced[j])
      detail::add_clasp(crossings, j, size.wrap(j + 1), +1);
  for (int i : swaps.indices())
    for (const auto &t : swap_template)
      detail::add_clasp(crossings, size.wrap(i + t.first_offset),
                        size.wrap(i + t.second_offset), t.lk);
  return Diagram(size, std::move(crossings));
}

/// lk(K_a, K_b) = half the signed count of crossings between K_a and K_b.
/// Self-crossings are ignored. Throws ParityError on an odd signed count.
inline LinkingMatrix linking_matrix(const Diagram &d)
{
  const int m = d.size().components();
  std::vector<int> sums(static_cast<std::size_t>(m) * m, 0);
  for (const auto &c : d.crossings()) {
    if (c.over == c.under)
      continue;
    int a = std::min(c.over, c.under), b = std::max(c.over, c.under);
    sums[static_cast<std::size_t>(a) * m + b] += c.sign;
  }
  LinkingMatrix out(d.size());
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      int s = sums[static_cast<std::size_t>(a) * m + b];
      if (s % 2 != 0)
        throw ParityError("signed crossing count between K" + std::to_string(a + 1) +
                            " and K" + std::to_string(b + 1) + " is odd (" +
                            std::to_string(s) + ")",
                          "(" + std::to_string(a + 1) + "," +
                            std::to_string(b + 1) + ")");
      out.set(a, b, s / 2);
    }
  }
  return out;
}

/// Vertex per component; edge wherever the linking number is nonzero.
inline LinkingGraph graph_from_matrix(const LinkingMatrix &mat)
{
  const int m = mat.size().components();
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (mat(a, b) != 0)
        edges.emplace_back(a, b);
  return LinkingGraph(m, std::move(edges));
}

inline LinkingGraph diagram_graph(const SwapSet &swaps)
{ return graph_from_matrix(linking_matrix(swapped_diagram(swaps))); }

/// CSV with header row and column K1..Km.
inline std::string matrix_to_csv(const LinkingMatrix &mat)
{
  const int m = mat.size().components();
  std::ostringstream out;
  out << "component";
  for (int b = 0; b < m; ++b)
    out << ",K" << b + 1;
  out << "\n";
  for (int a = 0; a < m; ++a) {
    out << "K" << a + 1;
    for (int b = 0; b < m; ++b)
      out << "," << mat(a, b);
    out << "\n";
  }
  return out.str();
}

} // namespace chainsym

#endif // CHAINSYM_DIAGRAMS_HPP
