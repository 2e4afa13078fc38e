#pragma once

#include <vector>

#include "dmt/complex.hpp"

namespace dmt {

/// Betti numbers over GF(2), one per dimension 0..dim(c), from ranks of the
/// boundary matrices.
std::vector<std::size_t> betti_gf2(const SimplicialComplex& c);

/// Number of chains with k+1 elements in the face poset, for every k.
/// Counted by dynamic programming over faces, without building the subdivision.
std::vector<std::size_t> count_chains(const SimplicialComplex& c);

}  // namespace dmt
