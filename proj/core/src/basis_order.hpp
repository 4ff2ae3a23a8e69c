#pragma once

#include <vector>

#include "orientals/chain.hpp"

namespace orientals::detail {

// Basis elements of Z∆(m) ordered by degree, then lexicographically.
const std::vector<VertexMask>& basis_order(int m);

}  // namespace orientals::detail
