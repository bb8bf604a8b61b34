// Builds the {2, 8, 16} partner of C_{4n} for a few n and prints how far its
// symmetry group falls below that of the shared complement.

#include <iostream>

#include <chainsym/chainsym.hpp>

int main()
{
  using namespace chainsym;
  for (int n : {6, 10, 25}) {
    const SwapSet swaps = paper_asymmetric_set(n);
    const SymReport r = symmetry_report(n, swaps);
    std::cout << "C" << 4 * n << " with swaps {2,8,16}: |Aut| = " << r.aut_order
              << ", |Sym(S3,L)| = " << r.sym_link_order
              << ", |Sym(S3\\L)| = " << r.sym_complement_order
              << ", index = " << r.index << "\n";
  }

  // Evenly spaced swaps give dihedral linking-graph symmetry.
  const SymReport d = symmetry_report(6, evenly_spaced_set(6, 3));
  std::cout << "C24 with swaps {1,9,17}: " << d.structure()
            << ", order " << d.sym_link_order << "\n";
  return 0;
}
