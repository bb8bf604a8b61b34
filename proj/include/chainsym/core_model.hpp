#ifndef CHAINSYM_CORE_MODEL_HPP
#define CHAINSYM_CORE_MODEL_HPP

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "errors.hpp"

namespace chainsym {

/// Number of components of a minimally twisted chain link.
///
/// Always even and at least 8. Components are K1..Km in I/O and 0..m-1
/// internally.
class ChainSize
{
public:
  explicit ChainSize(int components)
  : _components(components)
  {
    if (components < 8 || components % 2 != 0)
      throw ChainSizeError("chain size must be an even integer >= 8, got " +
                             std::to_string(components),
                           "(" + std::to_string(components) + ")");
  }

  /// The chain C_{4n}.
  static ChainSize quadruple(int n)
  {
    if (n < 2)
      throw RangeError("n must be >= 2 for C_{4n}, got " + std::to_string(n));
    return ChainSize(4 * n);
  }

  int components() const noexcept
  { return _components; }

  bool multiple_of_four() const noexcept
  { return _components % 4 == 0; }

  /// Reduce an arbitrary integer to a residue in [0, m).
  int wrap(int i) const noexcept
  {
    int r = i % _components;
    return r < 0 ? r + _components : r;
  }

  friend bool operator==(const ChainSize &, const ChainSize &) = default;
  friend auto operator<=>(const ChainSize &, const ChainSize &) = default;

private:
  int _components;
};

/// Minimum circular distance between two swap indices that act on disjoint
/// clasp windows.
inline constexpr int min_swap_distance = 4;

/// Circular distance between residues on a cycle of the given size.
inline int circular_distance(int i, int j, ChainSize size)
{
  int d = size.wrap(i - j);
  return std::min(d, size.components() - d);
}

/// A validated, canonically sorted set of non-overlapping swap indices.
///
/// Swap index i (0-based internally) acts on the clasp between components i
/// and i+1. Indices are pairwise at circular distance >= 4, so the swaps act
/// on disjoint windows {i-1, i, i+1, i+2} and commute.
class SwapSet
{
public:
  /// The empty swap set: the chain link itself.
  explicit SwapSet(ChainSize size)
  : _size(size)
  {}

  ChainSize size() const noexcept
  { return _size; }

  /// 0-based residues, ascending.
  const std::vector<int> &indices() const noexcept
  { return _indices; }

  /// 1-based labels, ascending.
  std::vector<int> labels() const
  {
    std::vector<int> out;
    out.reserve(_indices.size());
    for (int i : _indices)
      out.push_back(i + 1);
    return out;
  }

  std::size_t count() const noexcept
  { return _indices.size(); }

  bool empty() const noexcept
  { return _indices.empty(); }

  friend bool operator==(const SwapSet &, const SwapSet &) = default;
  friend auto operator<=>(const SwapSet &, const SwapSet &) = default;

  // Only the validating constructors below build non-empty sets.
  friend SwapSet validate_swap_set(ChainSize, const std::vector<int> &);
  friend SwapSet swap_set_from_residues(ChainSize, std::vector<int>);

private:
  ChainSize _size;
  std::vector<int> _indices;
};

namespace detail {

inline std::string pair_args(int a, int b)
{ return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// Throws OverlapError on the first close pair of an ascending 0-based list.
inline void check_non_overlapping(ChainSize size, const std::vector<int> &sorted)
{
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      int d = circular_distance(sorted[a], sorted[b], size);
      if (d < min_swap_distance)
        throw OverlapError("swaps s" + std::to_string(sorted[a] + 1) + " and s" +
                             std::to_string(sorted[b] + 1) +
                             " overlap (circular distance " + std::to_string(d) +
                             " < 4)",
                           pair_args(sorted[a] + 1, sorted[b] + 1));
    }
  }
}

} // namespace detail

/// Validate 1-based swap labels against a chain size.
///
/// Labels must lie in [1, m], be distinct and be pairwise at circular
/// distance >= 4. The result is sorted regardless of input order.
inline SwapSet validate_swap_set(ChainSize size, const std::vector<int> &raw)
{
  const int m = size.components();
  std::vector<int> zero_based;
  zero_based.reserve(raw.size());
  for (int label : raw) {
    if (label < 1 || label > m)
      throw IndexRangeError("swap index " + std::to_string(label) +
                              " outside [1, " + std::to_string(m) + "]",
                            "(" + std::to_string(label) + ")");
    zero_based.push_back(label - 1);
  }
  std::sort(zero_based.begin(), zero_based.end());
  auto dup = std::adjacent_find(zero_based.begin(), zero_based.end());
  if (dup != zero_based.end())
    throw DuplicateIndexError("swap index " + std::to_string(*dup + 1) +
                                " given more than once",
                              "(" + std::to_string(*dup + 1) + ")");
  detail::check_non_overlapping(size, zero_based);

  SwapSet out(size);
  out._indices = std::move(zero_based);
  return out;
}

/// Build a swap set from 0-based residues (any integers; reduced mod m).
inline SwapSet swap_set_from_residues(ChainSize size, std::vector<int> residues)
{
  for (int &r : residues)
    r = size.wrap(r);
  std::sort(residues.begin(), residues.end());
  auto dup = std::adjacent_find(residues.begin(), residues.end());
  if (dup != residues.end())
    throw DuplicateIndexError("swap index " + std::to_string(*dup + 1) +
                                " given more than once",
                              "(" + std::to_string(*dup + 1) + ")");
  detail::check_non_overlapping(size, residues);

  SwapSet out(size);
  out._indices = std::move(residues);
  return out;
}

/// Swaps s1, s_{g+1}, ..., s_{(k-1)g+1} on C_{4n} with gap g = 4n/k.
inline SwapSet evenly_spaced_set(int n, int k)
{
  if (n < 2)
    throw RangeError("n must be >= 2, got " + std::to_string(n));
  if (k < 1 || k > n)
    throw RangeError("k must satisfy 1 <= k <= n, got k=" + std::to_string(k) +
                     ", n=" + std::to_string(n));
  if ((4 * n) % k != 0)
    throw DivisibilityError(std::to_string(k) + " does not divide 4n = " +
                              std::to_string(4 * n),
                            detail::pair_args(k, 4 * n));
  const int gap = 4 * n / k;
  std::vector<int> residues;
  for (int j = 0; j < k; ++j)
    residues.push_back(j * gap);
  return swap_set_from_residues(ChainSize::quadruple(n), std::move(residues));
}

/// The swaps {2, 8, 16} on C_{4n}, whose linking graph has no symmetry.
inline SwapSet paper_asymmetric_set(int n)
{
  if (n < 6)
    throw RangeError("the asymmetric family needs n >= 6, got " +
                     std::to_string(n));
  return validate_swap_set(ChainSize::quadruple(n), {2, 8, 16});
}

/// A non-overlapping nested partner of a chain link: C_m with the swaps of
/// `swaps` applied. Fully determined by its swap set.
struct NNPLink
{
  SwapSet swaps;

  ChainSize size() const noexcept
  { return swaps.size(); }

  friend bool operator==(const NNPLink &, const NNPLink &) = default;
};

} // namespace chainsym

#endif // CHAINSYM_CORE_MODEL_HPP
