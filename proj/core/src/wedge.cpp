#include "orientals/wedge.hpp"

#include "orientals/simplicial.hpp"

namespace orientals {

namespace {

void check_wedge_shape(int i, const OrMorphism& x, const OrMorphism& y) {
  if (x.source_dim() != y.source_dim() || x.target_dim() != y.target_dim())
    throw ShapeError("wedge factors live in Or(" + std::to_string(x.source_dim()) + "," +
                     std::to_string(x.target_dim()) + ") and Or(" + std::to_string(y.source_dim()) + "," +
                     std::to_string(y.target_dim()) + ")");
  const int m = x.source_dim();
  if (i < 0 || i > m - 1)
    throw IndexError("wedge index " + std::to_string(i) + " outside [0," + std::to_string(m - 1) + "]");
}

// First basis element (degree-then-lex) where two maps differ, or 0.
VertexMask first_difference(const ChainMap& a, const ChainMap& b) {
  for (int q = 0; q <= a.source_dim(); ++q)
    for (VertexMask m : enumerate_basis_masks(a.source_dim(), q))
      if (a.image(m) != b.image(m)) return m;
  return 0;
}

}  // namespace

bool wedge_defined(int i, const OrMorphism& x, const OrMorphism& y) {
  check_wedge_shape(i, x, y);
  const VertexMask count = mask::low(x.source_dim());
  for (VertexMask b = 1; b <= count; ++b)
    if (x.image(coface_mask(i, b)) != y.image(coface_mask(i + 1, b))) return false;
  return true;
}

ChainMap wedge_formula(int i, const ChainMap& x, const ChainMap& y) {
  if (x.source_dim() != y.source_dim() || x.target_dim() != y.target_dim())
    throw ShapeError("wedge formula needs maps in the same group");
  const int m = x.source_dim();
  if (i < 0 || i > m - 1) throw IndexError("wedge index " + std::to_string(i) + " outside [0," + std::to_string(m - 1) + "]");
  // Term by term: (ε_{i+1}x)[a] - (ε_i ε_i ∂_{i+1}y)[a] + (ε_i y)[a].
  ChainAccumulator acc(x.target_dim(), 0);
  return ChainMap::generate(m + 1, x.target_dim(), [&](VertexMask a) {
    acc.reset(mask::size(a) - 1);
    if (const VertexMask s = codegeneracy_mask(i + 1, a)) acc.add(x.image(s));
    if (const VertexMask s1 = codegeneracy_mask(i, a))
      if (const VertexMask s2 = codegeneracy_mask(i, s1)) acc.add(y.image(coface_mask(i + 1, s2)), -1);
    if (const VertexMask s = codegeneracy_mask(i, a)) acc.add(y.image(s));
    return acc.finish();
  });
}

OrMorphism wedge(int i, const OrMorphism& x, const OrMorphism& y) {
  if (!wedge_defined(i, x, y)) {
    const ChainMap left = face(i, x.map());
    const ChainMap right = face(i + 1, y.map());
    const VertexMask at = first_difference(left, right);
    throw DefinednessError("x ∧_" + std::to_string(i) + " y needs ∂_" + std::to_string(i) + "x = ∂_" +
                           std::to_string(i + 1) + "y; they differ at " + mask::render(at) + ": " +
                           left.image(at).to_string() + " vs " + right.image(at).to_string());
  }
  return validate(wedge_formula(i, x.map(), y.map()));
}

bool in_wedge_image(int i, const OrMorphism& z) {
  const int m = z.source_dim() - 1;
  if (i < 0 || i > m - 1)
    throw IndexError("wedge-image index " + std::to_string(i) + " outside [0," + std::to_string(m - 1) + "]");
  const VertexMask triple = mask::bit(i) | mask::bit(i + 1) | mask::bit(i + 2);
  for (VertexMask a = 1; a <= z.map().basis_count(); ++a)
    if ((a & triple) == triple && !z.image(a).is_zero()) return false;
  return true;
}

namespace {

void check_iterated(int k, int l, const OrMorphism& u, const OrMorphism& v) {
  if (l < 1) throw ArgumentError("iterated wedge needs l >= 1, got " + std::to_string(l));
  if (u.target_dim() != v.target_dim()) throw ShapeError("iterated wedge factors have different targets");
  if (u.source_dim() != v.source_dim() - l + 1)
    throw ShapeError("u ∧_k^l v needs dim u = dim v - l + 1");
  if (k < 0 || k > u.source_dim() - 1)
    throw IndexError("iterated wedge index " + std::to_string(k) + " outside [0," +
                     std::to_string(u.source_dim() - 1) + "]");
  const ChainMap lhs = face(k, u.map());
  const ChainMap rhs = iterated_face(k + 1, l, v.map());
  if (lhs != rhs) {
    const VertexMask at = first_difference(lhs, rhs);
    throw DefinednessError("u ∧_" + std::to_string(k) + "^" + std::to_string(l) + " v needs ∂_" +
                           std::to_string(k) + "u = ∂_" + std::to_string(k + 1) + "^" + std::to_string(l) +
                           "v; they differ at " + mask::render(at));
  }
}

}  // namespace

OrMorphism iterated_wedge(int k, int l, const OrMorphism& u, const OrMorphism& v) {
  check_iterated(k, l, u, v);
  OrMorphism acc = u;
  for (int j = l - 1; j >= 0; --j) acc = wedge(k, acc, iterated_face(k + 1, j, v));
  return acc;
}

OrMorphism iterated_wedge_closed_form(int k, int l, const OrMorphism& u, const OrMorphism& v) {
  check_iterated(k, l, u, v);
  return validate(iterated_degeneracy(k + 1, l, u.map()) -
                  iterated_degeneracy(k, l + 1, iterated_face(k + 1, l, v.map())) + degeneracy(k, v.map()));
}

LambdaTrace lambda_trace(int r, std::span<const OrMorphism> us, const OrMorphism& v) {
  if (r < 0 || static_cast<std::size_t>(r) != us.size())
    throw ArgumentError("Λ^" + std::to_string(r) + " needs exactly " + std::to_string(r) + " factors, got " +
                        std::to_string(us.size()));
  if (v.source_dim() < r) throw ShapeError("Λ^r needs dim v >= r");
  LambdaTrace trace;
  trace.v.push_back(v);
  for (int p = 0; p < r; ++p) {
    const OrMorphism& u = us[static_cast<std::size_t>(r - 1 - p)];
    const OrMorphism& vp = trace.v.back();
    try {
      trace.w.push_back(iterated_wedge(p, r - p, u, vp));
    } catch (const DefinednessError& e) {
      throw DefinednessError("Λ^" + std::to_string(r) + " undefined at stage p=" + std::to_string(p) + ": ∂_" +
                             std::to_string(p) + "u_" + std::to_string(p) + " differs from ∂_" +
                             std::to_string(p + 1) + "^" + std::to_string(r - p) + "v_" + std::to_string(p) +
                             " (" + e.what() + ")");
    } catch (const ShapeError& e) {
      throw DefinednessError("Λ^" + std::to_string(r) + " undefined at stage p=" + std::to_string(p) + ": " +
                             e.what());
    }
    trace.v.push_back(face(p + 1, trace.w.back()));
  }
  return trace;
}

OrMorphism lambda(int r, std::span<const OrMorphism> us, const OrMorphism& v) {
  return lambda_trace(r, us, v).result();
}

}  // namespace orientals
