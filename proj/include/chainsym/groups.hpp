#ifndef CHAINSYM_GROUPS_HPP
#define CHAINSYM_GROUPS_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"

namespace chainsym {

inline constexpr std::size_t default_order_cap = 1'000'000;

/// A finite permutation group held as a complete, sorted element list together
/// with a generating set.
class PermGroup
{
public:
  int degree() const noexcept
  { return _degree; }

  std::size_t order() const noexcept
  { return _elements.size(); }

  const std::vector<Permutation> &generators() const noexcept
  { return _generators; }

  /// All elements, ascending in lexicographic image order (identity first).
  const std::vector<Permutation> &elements() const noexcept
  { return _elements; }

  bool contains(const Permutation &p) const
  { return std::binary_search(_elements.begin(), _elements.end(), p); }

  friend bool operator==(const PermGroup &a, const PermGroup &b)
  { return a._degree == b._degree && a._elements == b._elements; }

  friend PermGroup closure(int, const std::vector<Permutation> &, std::size_t);
  friend PermGroup group_from_elements(int, std::vector<Permutation>);

private:
  int _degree = 0;
  std::vector<Permutation> _generators;
  std::vector<Permutation> _elements;
};

/// Breadth-first closure of `generators` under composition.
///
/// Throws OrderBoundExceeded once more than `cap` elements are found.
inline PermGroup closure(int degree, const std::vector<Permutation> &generators,
                         std::size_t cap = default_order_cap)
{
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw PermutationError("generator of degree " + std::to_string(g.degree()) +
                             " in a group of degree " + std::to_string(degree));

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> frontier;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto &g : generators) {
      Permutation next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw OrderBoundExceeded("group order exceeds cap " +
                                   std::to_string(cap));
        frontier.push_back(std::move(next));
      }
    }
  }

  PermGroup out;
  out._degree = degree;
  out._elements.assign(seen.begin(), seen.end());
  std::sort(out._elements.begin(), out._elements.end());
  for (const auto &g : generators)
    if (!g.is_identity() &&
        std::find(out._generators.begin(), out._generators.end(), g) ==
          out._generators.end())
      out._generators.push_back(g);
  return out;
}

/// Wrap a known complete element list (e.g. from an automorphism search).
///
/// A small generating set is chosen greedily: walk the sorted elements and
/// keep each one not already in the span of those kept so far.
inline PermGroup group_from_elements(int degree, std::vector<Permutation> elements)
{
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  std::vector<Permutation> gens;
  PermGroup span = closure(degree, gens);
  for (const auto &e : elements) {
    if (span.contains(e))
      continue;
    gens.push_back(e);
    span = closure(degree, gens);
    if (span.order() == elements.size())
      break;
  }
  if (span.elements() != elements)
    throw PermutationError("element list is not closed under composition");

  PermGroup out;
  out._degree = degree;
  out._generators = std::move(gens);
  out._elements = std::move(elements);
  return out;
}

/// Structure tag of a small group.
///
/// Dihedral groups follow the convention D1 = Z2, D2 = Z2xZ2, |Dk| = 2k;
/// `normalized()` folds those collisions so descriptors compare by structure.
struct GroupDescriptor
{
  enum class Kind { trivial, z2, z2xz2, cyclic, dihedral, other };

  Kind kind = Kind::trivial;
  long k = 1; // cyclic/dihedral parameter
  long order = 1;

  static GroupDescriptor trivial()
  { return {Kind::trivial, 1, 1}; }

  static GroupDescriptor cyclic(long k)
  { return GroupDescriptor{Kind::cyclic, k, k}.normalized(); }

  static GroupDescriptor dihedral(long k)
  { return GroupDescriptor{Kind::dihedral, k, 2 * k}.normalized(); }

  static GroupDescriptor other(long order)
  { return {Kind::other, order, order}; }

  GroupDescriptor normalized() const
  {
    if (order == 1)
      return {Kind::trivial, 1, 1};
    if ((kind == Kind::cyclic && k == 2) || (kind == Kind::dihedral && k == 1))
      return {Kind::z2, 2, 2};
    if (kind == Kind::dihedral && k == 2)
      return {Kind::z2xz2, 2, 4};
    return *this;
  }

  /// "trivial", "Z2", "Z2xZ2", "cyclic", "dihedral" or "other".
  std::string kind_name() const
  {
    switch (kind) {
    case Kind::trivial: return "trivial";
    case Kind::z2: return "Z2";
    case Kind::z2xz2: return "Z2xZ2";
    case Kind::cyclic: return "cyclic";
    case Kind::dihedral: return "dihedral";
    case Kind::other: return "other";
    }
    return "other";
  }

  /// Compact structure string: 1, Z2, Z2xZ2, Zk, Dk or G<order>.
  std::string to_string() const
  {
    switch (kind) {
    case Kind::trivial: return "1";
    case Kind::z2: return "Z2";
    case Kind::z2xz2: return "Z2xZ2";
    case Kind::cyclic: return "Z" + std::to_string(k);
    case Kind::dihedral: return "D" + std::to_string(k);
    case Kind::other: return "G" + std::to_string(order);
    }
    return "G" + std::to_string(order);
  }

  friend bool operator==(const GroupDescriptor &a, const GroupDescriptor &b)
  {
    auto x = a.normalized();
    auto y = b.normalized();
    return x.kind == y.kind && x.k == y.k && x.order == y.order;
  }
};

/// Identify trivial, Z2, Z2xZ2, cyclic and dihedral groups; anything else is
/// reported as other(order).
inline GroupDescriptor recognize(const PermGroup &g)
{
  const long n = static_cast<long>(g.order());
  if (n == 1)
    return GroupDescriptor::trivial();

  const auto &elems = g.elements();
  std::vector<long> orders;
  orders.reserve(elems.size());
  for (const auto &e : elems)
    orders.push_back(e.order());

  long exponent = 1;
  for (long o : orders) {
    if (o == n)
      return GroupDescriptor::cyclic(n);
    exponent = std::lcm(exponent, o);
  }
  if (n == 4 && exponent == 2)
    return {GroupDescriptor::Kind::z2xz2, 2, 4};
  if (n % 2 != 0 || n < 6)
    return GroupDescriptor::other(n);

  // |G| = 2k, k >= 3: look for a rotation c of order k and an involution t
  // outside <c> with t c t = c^-1.
  const long k = n / 2;
  for (std::size_t ci = 0; ci < elems.size(); ++ci) {
    if (orders[ci] != k)
      continue;
    const Permutation &c = elems[ci];
    std::vector<Permutation> rotations;
    Permutation power = Permutation::identity(g.degree());
    for (long j = 0; j < k; ++j) {
      rotations.push_back(power);
      power = power * c;
    }
    std::sort(rotations.begin(), rotations.end());
    const Permutation c_inv = c.inverse();
    for (std::size_t ti = 0; ti < elems.size(); ++ti) {
      if (orders[ti] != 2)
        continue;
      const Permutation &t = elems[ti];
      if (std::binary_search(rotations.begin(), rotations.end(), t))
        continue;
      if (t * c * t == c_inv)
        return GroupDescriptor::dihedral(k);
    }
  }
  return GroupDescriptor::other(n);
}

/// Whether `order` divides m! (checked prime by prime with Legendre's formula).
inline bool divides_factorial(std::uint64_t order, int m)
{
  for (std::uint64_t p = 2; p * p <= order || order > 1; ++p) {
    if (p * p > order)
      p = order; // remaining factor is prime
    int need = 0;
    while (order % p == 0) {
      order /= p;
      ++need;
    }
    if (need == 0)
      continue;
    long have = 0;
    for (std::uint64_t q = p; q <= static_cast<std::uint64_t>(m); q *= p)
      have += static_cast<long>(m / q);
    if (have < need)
      return false;
  }
  return true;
}

} // namespace chainsym

#endif // CHAINSYM_GROUPS_HPP
