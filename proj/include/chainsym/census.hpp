#ifndef CHAINSYM_CENSUS_HPP
#define CHAINSYM_CENSUS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "core_model.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "symmetry.hpp"

namespace chainsym {

inline constexpr int default_census_budget = 32;

namespace detail {

// Depth-first over circular gap compositions: after the first index `first`,
// each further index sits >= 4 past the previous one and leaves >= 4 to wrap
// back to `first`. Pre-order emission yields lexicographic order.
inline void extend_swap_residues(int m, std::vector<int> &current,
                                 std::vector<std::vector<int>> &out)
{
  out.push_back(current);
  const int first = current.front();
  for (int x = current.back() + min_swap_distance; x <= first + m - min_swap_distance &&
                                                   x < m;
       ++x) {
    current.push_back(x);
    extend_swap_residues(m, current, out);
    current.pop_back();
  }
}

inline std::vector<int> dihedral_image(const std::vector<int> &residues, int m,
                                       int dir, int shift)
{
  std::vector<int> img;
  img.reserve(residues.size());
  for (int r : residues)
    img.push_back((((dir * r + shift) % m) + m) % m);
  std::sort(img.begin(), img.end());
  return img;
}

} // namespace detail

/// Lexicographically least image of the swap set under the dihedral action
/// i -> +-i + c on swap indices.
inline SwapSet canonical_form(const SwapSet &swaps)
{
  const int m = swaps.size().components();
  std::vector<int> best = swaps.indices();
  for (int dir : {1, -1})
    for (int shift = 0; shift < m; ++shift)
      best = std::min(best, detail::dihedral_image(swaps.indices(), m, dir, shift));
  return swap_set_from_residues(swaps.size(), std::move(best));
}

/// Number of distinct swap sets in the dihedral orbit of `swaps`.
inline long orbit_size(const SwapSet &swaps)
{
  const int m = swaps.size().components();
  std::vector<std::vector<int>> images;
  for (int dir : {1, -1})
    for (int shift = 0; shift < m; ++shift)
      images.push_back(detail::dihedral_image(swaps.indices(), m, dir, shift));
  std::sort(images.begin(), images.end());
  return static_cast<long>(std::unique(images.begin(), images.end()) - images.begin());
}

/// Every non-overlapping swap set on C_m (the empty set included), in
/// lexicographic order of 0-based residues. With `modulo_relabeling`, only
/// the canonical representative of each dihedral index class is kept.
inline std::vector<SwapSet> enumerate_swap_sets(ChainSize size, bool modulo_relabeling)
{
  const int m = size.components();
  std::vector<std::vector<int>> raw{{}};
  std::vector<int> current;
  for (int first = 0; first < m; ++first) {
    current.assign(1, first);
    detail::extend_swap_residues(m, current, raw);
  }

  std::vector<SwapSet> out;
  out.reserve(raw.size());
  for (auto &r : raw) {
    SwapSet s = swap_set_from_residues(size, std::move(r));
    if (modulo_relabeling && canonical_form(s) != s)
      continue;
    out.push_back(std::move(s));
  }
  return out;
}

/// One index class of swap sets with its symmetry data. The link-level
/// fields are only filled in for sizes divisible by four.
struct CensusRow
{
  SwapSet representative{ChainSize(8)};
  long class_size = 0;
  long aut_order = 0;
  GroupDescriptor aut_descriptor;
  std::optional<long> sym_link_order;
  std::optional<long> index;
};

struct CensusOptions
{
  int budget = default_census_budget; ///< largest size enumerated
  int jobs = 1;
  bool modulo_relabeling = true;
};

/// Tabulate Aut and symmetry orders over all swap sets of a chain size.
/// Rows are in enumeration order; computation may be spread over workers.
inline std::vector<CensusRow> census(ChainSize size, const CensusOptions &opts = {})
{
  if (size.components() > opts.budget)
    throw BudgetExceeded("census of C" + std::to_string(size.components()) +
                         " exceeds the enumeration budget of " +
                         std::to_string(opts.budget) + " components");
  const auto sets = enumerate_swap_sets(size, opts.modulo_relabeling);
  return parallel_map(
    sets,
    [](const SwapSet &s) {
      CensusRow row;
      row.representative = canonical_form(s);
      row.class_size = orbit_size(s);
      PermGroup aut = link_automorphisms(s);
      row.aut_order = static_cast<long>(aut.order());
      row.aut_descriptor = recognize(aut);
      if (s.size().multiple_of_four()) {
        row.sym_link_order = fixed_subgroup_order * row.aut_order;
        row.index = complement_symmetry_order(s.size().components() / 4) /
                    *row.sym_link_order;
      }
      return row;
    },
    opts.jobs);
}

/// For C_{4n}: aut order -> number of index classes attaining it.
inline std::map<long, long> spectrum(int n, const CensusOptions &opts = {})
{
  CensusOptions classes = opts;
  classes.modulo_relabeling = true;
  std::map<long, long> table;
  for (const auto &row : census(ChainSize::quadruple(n), classes))
    ++table[row.aut_order];
  return table;
}

/// Columns: size, class_representative, class_size, aut_order, aut_structure,
/// sym_link_order, index. Representatives are space-separated 1-based labels.
inline std::string census_to_csv(const std::vector<CensusRow> &rows)
{
  std::ostringstream out;
  out << "size,class_representative,class_size,aut_order,aut_structure,"
         "sym_link_order,index\n";
  for (const auto &row : rows) {
    out << row.representative.size().components() << ",";
    const auto labels = row.representative.labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
      out << (i ? " " : "") << labels[i];
    out << "," << row.class_size << "," << row.aut_order << ","
        << row.aut_descriptor.to_string() << ",";
    if (row.sym_link_order)
      out << *row.sym_link_order;
    out << ",";
    if (row.index)
      out << *row.index;
    out << "\n";
  }
  return out.str();
}

} // namespace chainsym

#endif // CHAINSYM_CENSUS_HPP
