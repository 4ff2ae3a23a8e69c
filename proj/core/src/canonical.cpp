#include "orientals/canonical.hpp"

#include "orientals/simplicial.hpp"
#include "orientals/wedge.hpp"

namespace orientals {

OrMorphism cone(int t, const OrMorphism& x) {
  const int m = x.source_dim();
  const int n = x.target_dim();
  if (t > n) throw ConeError("cone vertex " + std::to_string(t) + " exceeds target dimension " + std::to_string(n));
  if (x.terminus() >= t)
    throw ConeError("ρ_" + std::to_string(t) + " needs terminus below " + std::to_string(t) + ", got " +
                    std::to_string(x.terminus()));
  if (m + 1 > kMaxSourceDim) throw ShapeError("cone exceeds the largest supported source dimension");
  const VertexMask apex = mask::bit(m + 1);
  const VertexMask tip = mask::bit(t);
  return validate(ChainMap::generate(m + 1, n, [&](VertexMask a) {
    if (!(a & apex)) return x.image(a);
    const VertexMask base = a ^ apex;
    if (base == 0) return Chain::basis(BasisElement::from_mask(tip, n));
    ChainAccumulator acc(n, mask::size(a) - 1);
    for (const Term& term : x.image(base).terms()) acc.add(term.mask | tip, term.coef);
    return acc.finish();
  }));
}

bool is_cone(const OrMorphism& x) {
  const int m = x.source_dim();
  if (m == 0) return false;
  const OrMorphism base = face(m, x);
  if (base.terminus() >= x.terminus()) return false;
  return cone(x.terminus(), base) == x;
}

OrMorphism gamma(const OrMorphism& x) {
  const int t = x.terminus();
  const int r = x.rank();
  const int n = x.target_dim();
  const VertexMask top = mask::bit(r);
  const VertexMask tip = mask::bit(t);
  return validate(ChainMap::generate(r, n, [&](VertexMask a) {
    if (a == top) return Chain::basis(BasisElement::from_mask(tip, n));
    const bool with_top = (a & top) != 0;
    const VertexMask base = a & ~top;
    ChainAccumulator acc(n, mask::size(a) - 1);
    for (const Term& term : x.image(base | top).terms()) {
      if (!(term.mask & tip) || term.mask == tip) continue;
      acc.add(with_top ? term.mask : term.mask ^ tip, term.coef);
    }
    return acc.finish();
  }));
}

namespace {

ChainMap beta_map(const OrMorphism& x, const OrMorphism& g) {
  return iterated_degeneracy(x.rank(), x.corank(), g.map());
}

OrMorphism alpha_from(int p, const OrMorphism& x, const ChainMap& b) {
  const int r = x.rank();
  if (p < 0 || p >= r)
    throw IndexError("α_" + std::to_string(p) + " needs 0 <= p < rank " + std::to_string(r));
  return validate(iterated_face(p + 1, r - p - 1, x.map() - b) +
                  degeneracy(p, iterated_face(p + 1, r - p, b)));
}

}  // namespace

OrMorphism beta(const OrMorphism& x) { return validate(beta_map(x, gamma(x))); }

OrMorphism alpha(int p, const OrMorphism& x) { return alpha_from(p, x, beta_map(x, gamma(x))); }

OrMorphism CanonicalDecomposition::beta() const { return iterated_degeneracy(r, s, gamma); }

OrMorphism recompose(const CanonicalDecomposition& d) { return lambda(d.r, d.alphas, d.beta()); }

CanonicalDecomposition decompose(const OrMorphism& x) {
  OrMorphism g = gamma(x);
  const ChainMap b = beta_map(x, g);
  std::vector<OrMorphism> alphas;
  for (int p = x.rank() - 1; p >= 0; --p) alphas.push_back(alpha_from(p, x, b));
  CanonicalDecomposition d{x, x.terminus(), x.rank(), x.corank(), std::move(g), std::move(alphas)};
  OrMorphism back = [&] {
    try {
      return recompose(d);
    } catch (const Error& e) {
      throw RecompositionError(std::string("canonical components do not reassemble: ") + e.what());
    }
  }();
  if (back != x) throw RecompositionError("canonical components reassemble to a different morphism:\n" + describe(back));
  return d;
}

}  // namespace orientals
