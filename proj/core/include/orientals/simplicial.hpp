#pragma once

// Face and degeneracy operations on Z∆(-,n) and Or(-,n).
//
// A face ∂_i precomposes with the coface map skipping vertex i; a degeneracy
// ε_i precomposes with the codegeneracy collapsing i+1 onto i and annihilates
// every basis element containing both i and i+1.

#include "orientals/morphism.hpp"

namespace orientals {

// Vertex-mask index maps. `coface_mask(i, b)` sends a basis element of
// Z∆(m-1) to [b, c'] in Z∆(m); `codegeneracy_mask(i, a)` sends a basis
// element of Z∆(m+1) to its collapsed image in Z∆(m), or 0 when a contains
// both i and i+1.
constexpr VertexMask coface_mask(int i, VertexMask b) {
  const VertexMask below = mask::low(i);
  return (b & below) | ((b & ~below) << 1);
}

constexpr VertexMask codegeneracy_mask(int i, VertexMask a) {
  if (mask::has(a, i) && mask::has(a, i + 1)) return 0;
  return (a & mask::low(i + 1)) | ((a >> 1) & ~mask::low(i));
}

ChainMap face(int i, const ChainMap& x);
ChainMap degeneracy(int i, const ChainMap& x);
ChainMap iterated_face(int i, int k, const ChainMap& x);
ChainMap iterated_degeneracy(int i, int k, const ChainMap& x);

OrMorphism face(int i, const OrMorphism& x);
OrMorphism degeneracy(int i, const OrMorphism& x);
OrMorphism iterated_face(int i, int k, const OrMorphism& x);
OrMorphism iterated_degeneracy(int i, int k, const OrMorphism& x);

// x lies in the image of ε_i iff it annihilates every basis element
// containing both i and i+1.
bool is_degenerate_at(int i, const OrMorphism& x);

}  // namespace orientals
