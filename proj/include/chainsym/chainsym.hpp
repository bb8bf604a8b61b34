#ifndef CHAINSYM_CHAINSYM_HPP
#define CHAINSYM_CHAINSYM_HPP

#include "automorphism.hpp"
#include "census.hpp"
#include "core_model.hpp"
#include "diagrams.hpp"
#include "errors.hpp"
#include "groups.hpp"
#include "io.hpp"
#include "linkgraph.hpp"
#include "parallel.hpp"
#include "permutation.hpp"
#include "symmetry.hpp"
#include "verify.hpp"

#endif // CHAINSYM_CHAINSYM_HPP
