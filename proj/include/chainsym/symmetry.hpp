#ifndef CHAINSYM_SYMMETRY_HPP
#define CHAINSYM_SYMMETRY_HPP

#include <string>

#include "automorphism.hpp"
#include "core_model.hpp"
#include "errors.hpp"
#include "groups.hpp"

namespace chainsym {

/// Order of the symmetry group of the complement of C_{4n} (and of every
/// link sharing that complement): (D_{4n} x Z2) x| Z2.
inline long complement_symmetry_order(int n)
{ return 32L * n; }

inline std::string complement_structure(int n)
{ return "(D" + std::to_string(4 * n) + "xZ2) x| Z2"; }

/// Symmetries fixing every component: reflection in the projection plane and
/// the half-turn about the circular axis, generating Z2xZ2.
inline constexpr long fixed_subgroup_order = 4;

/// Symmetry data of a link obtained from C_{4n} by non-overlapping swaps.
struct SymReport
{
  int n = 0;
  SwapSet swaps{ChainSize(8)};
  long aut_order = 0;
  GroupDescriptor aut_descriptor;
  GroupDescriptor fixed_subgroup{GroupDescriptor::Kind::z2xz2, 2, 4};
  long sym_link_order = 0;
  long sym_complement_order = 0;
  long index = 0;

  /// "(Z2xZ2) x| <Aut>"
  std::string structure() const
  { return "(Z2xZ2) x| " + aut_descriptor.to_string(); }
};

/// Build the report for the link C_{4n} with `swaps` applied.
///
/// The link symmetry group is (Z2xZ2) x| Aut(linking graph), so its order is
/// four times |Aut|; the complement always has order 32n.
inline SymReport symmetry_report(const SwapSet &swaps,
                                 AutMethod method = AutMethod::backtrack)
{
  const int m = swaps.size().components();
  if (m % 4 != 0)
    throw SizeNotMultipleOf4(
      "symmetry groups are only derived for C_{4n}; C" + std::to_string(m) +
        " has a different complement decomposition for odd n",
      "(" + std::to_string(m) + ")");

  const PermGroup aut = link_automorphisms(swaps, method);

  SymReport r;
  r.n = m / 4;
  r.swaps = swaps;
  r.aut_order = static_cast<long>(aut.order());
  r.aut_descriptor = recognize(aut);
  r.sym_link_order = fixed_subgroup_order * r.aut_order;
  r.sym_complement_order = complement_symmetry_order(r.n);
  if (r.sym_complement_order % r.sym_link_order != 0)
    throw DivisibilityError("link symmetry order " + std::to_string(r.sym_link_order) +
                            " does not divide " +
                            std::to_string(r.sym_complement_order));
  r.index = r.sym_complement_order / r.sym_link_order;
  return r;
}

inline SymReport symmetry_report(int n, const SwapSet &swaps,
                                 AutMethod method = AutMethod::backtrack)
{
  if (n < 2)
    throw RangeError("n must be >= 2, got " + std::to_string(n));
  if (swaps.size().components() != 4 * n)
    throw SizeMismatchError("swap set is for C" +
                            std::to_string(swaps.size().components()) +
                            ", expected C" + std::to_string(4 * n));
  return symmetry_report(swaps, method);
}

} // namespace chainsym

#endif // CHAINSYM_SYMMETRY_HPP
