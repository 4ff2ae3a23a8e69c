#pragma once

// Deliberately broken variants of the Or(-,n) carrier. Each violates at
// least one complicial identity and serves as a negative control for the
// axiom checkers.

#include "orientals/carrier.hpp"

namespace orientals {

// x ∧_i y := ε_{i+1}x.
struct WrongWedgeCarrier : OrCarrier {
  OrMorphism wedge(int i, const OrMorphism& x, const OrMorphism&) const { return orientals::degeneracy(i + 1, x); }
};

// ε_i := ε_{i+1} whenever i+1 is still a valid index.
struct ShiftedDegeneracyCarrier : OrCarrier {
  OrMorphism degeneracy(int i, const OrMorphism& x) const {
    return orientals::degeneracy(i < x.dimension() ? i + 1 : i, x);
  }
};

// Correct wedges at low indices; from index 3 on, x ∧_i y := ε_{i+1}x, which
// breaks the exchange of wedges at distant indices.
struct ExchangeBreakingCarrier : OrCarrier {
  OrMorphism wedge(int i, const OrMorphism& x, const OrMorphism& y) const {
    return i >= 3 ? orientals::degeneracy(i + 1, x) : orientals::wedge(i, x, y);
  }
};

static_assert(ComplicialCarrier<WrongWedgeCarrier>);
static_assert(ComplicialCarrier<ShiftedDegeneracyCarrier>);
static_assert(ComplicialCarrier<ExchangeBreakingCarrier>);

}  // namespace orientals
