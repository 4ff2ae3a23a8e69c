#pragma once

// Wedges x ∧_i y = ε_{i+1}x − ε_i²∂_{i+1}y + ε_i y, iterated wedges u ∧_k^l v
// and the assembly scheme Λ^r used by canonical forms.

#include <span>
#include <vector>

#include "orientals/morphism.hpp"

namespace orientals {

// ∂_i x = ∂_{i+1} y. Throws IndexError / ShapeError for ill-typed arguments.
bool wedge_defined(int i, const OrMorphism& x, const OrMorphism& y);

// Evaluates the three-term formula in Z∆(m+1,n); no definedness check.
ChainMap wedge_formula(int i, const ChainMap& x, const ChainMap& y);

// Throws DefinednessError naming the first basis element where ∂_i x and
// ∂_{i+1} y differ.
OrMorphism wedge(int i, const OrMorphism& x, const OrMorphism& y);

// z lies in the image of ∧_i iff it annihilates every basis element
// containing i, i+1 and i+2.
bool in_wedge_image(int i, const OrMorphism& z);

// u ∧_k^l v as the left-nested fold u(∧_k ∂_{k+1}^{l-1}v)...(∧_k v).
OrMorphism iterated_wedge(int k, int l, const OrMorphism& u, const OrMorphism& v);
// The same element via ε_{k+1}^l u − ε_k^{l+1}∂_{k+1}^l v + ε_k v.
OrMorphism iterated_wedge_closed_form(int k, int l, const OrMorphism& u, const OrMorphism& v);

// Intermediate stages of Λ^r: v[0] = v, w[p] = u_p ∧_p^{r-p} v[p],
// v[p+1] = ∂_{p+1} w[p].
struct LambdaTrace {
  std::vector<OrMorphism> v;
  std::vector<OrMorphism> w;
  const OrMorphism& result() const { return v.back(); }
};

// Λ^r(u_{r-1}, ..., u_0, v). `us` is ordered u_{r-1} first.
OrMorphism lambda(int r, std::span<const OrMorphism> us, const OrMorphism& v);
LambdaTrace lambda_trace(int r, std::span<const OrMorphism> us, const OrMorphism& v);

}  // namespace orientals
