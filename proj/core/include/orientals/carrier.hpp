#pragma once

// The capability set of a set with complicial identities: graded elements
// with faces, degeneracies and partial wedges. Or(-,n) is the built-in model.

#include <concepts>
#include <string>

#include "orientals/morphism.hpp"
#include "orientals/simplicial.hpp"
#include "orientals/wedge.hpp"

namespace orientals {

template <class C>
concept ComplicialCarrier = requires(const C& c, const typename C::Element& x, int i) {
  { c.dimension(x) } -> std::convertible_to<int>;
  { c.face(i, x) } -> std::same_as<typename C::Element>;
  { c.degeneracy(i, x) } -> std::same_as<typename C::Element>;
  { c.wedge_defined(i, x, x) } -> std::convertible_to<bool>;
  { c.wedge(i, x, x) } -> std::same_as<typename C::Element>;
  { c.equal(x, x) } -> std::convertible_to<bool>;
  // Equal elements have equal keys.
  { c.key(x) } -> std::convertible_to<std::string>;
  { c.describe(x) } -> std::convertible_to<std::string>;
  // Whether the operations may be called concurrently.
  { C::concurrency_safe } -> std::convertible_to<bool>;
};

// Or(-,n) with the operations on certified morphisms.
struct OrCarrier {
  using Element = OrMorphism;
  static constexpr bool concurrency_safe = true;

  int dimension(const OrMorphism& x) const { return x.dimension(); }
  OrMorphism face(int i, const OrMorphism& x) const { return orientals::face(i, x); }
  OrMorphism degeneracy(int i, const OrMorphism& x) const { return orientals::degeneracy(i, x); }
  bool wedge_defined(int i, const OrMorphism& x, const OrMorphism& y) const {
    return orientals::wedge_defined(i, x, y);
  }
  OrMorphism wedge(int i, const OrMorphism& x, const OrMorphism& y) const { return orientals::wedge(i, x, y); }
  bool equal(const OrMorphism& x, const OrMorphism& y) const { return x == y; }
  const std::string& key(const OrMorphism& x) const { return x.key(); }
  std::string describe(const OrMorphism& x) const { return orientals::describe(x); }
};

static_assert(ComplicialCarrier<OrCarrier>);

}  // namespace orientals
