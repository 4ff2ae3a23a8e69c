#pragma once

// Terminus-stratified canonical forms: the t-cone ρ_t, the selection γ, the
// degenerate lift β = ε_r^s γ, the correction morphisms α_p and the
// decomposition x = Λ^r(α_{r-1}x, ..., α_0 x, βx).

#include <vector>

#include "orientals/morphism.hpp"

namespace orientals {

// ρ_t x. Requires terminus(x) < t <= n, otherwise ConeError.
OrMorphism cone(int t, const OrMorphism& x);

// True when x = ρ_t(∂_m x) for its own terminus t (m >= 1).
bool is_cone(const OrMorphism& x);

OrMorphism gamma(const OrMorphism& x);
OrMorphism beta(const OrMorphism& x);
// Requires 0 <= p < rank(x), otherwise IndexError.
OrMorphism alpha(int p, const OrMorphism& x);

struct CanonicalDecomposition {
  OrMorphism subject;
  int t = 0;
  int r = 0;
  int s = 0;
  OrMorphism gamma;
  // α_{r-1}x first, α_0 x last.
  std::vector<OrMorphism> alphas;

  OrMorphism beta() const;
  const OrMorphism& alpha(int p) const { return alphas.at(static_cast<std::size_t>(r - 1 - p)); }
};

// Throws RecompositionError if the components fail to reassemble x.
CanonicalDecomposition decompose(const OrMorphism& x);
OrMorphism recompose(const CanonicalDecomposition& d);

}  // namespace orientals
