#include "orientals/simplicial.hpp"

namespace orientals {

namespace {

void check_face_index(int i, int m) {
  if (m == 0) throw DegreeError("face of a 0-dimensional element");
  if (i < 0 || i > m)
    throw IndexError("face index " + std::to_string(i) + " outside [0," + std::to_string(m) + "]");
}

void check_degeneracy_index(int i, int m) {
  if (i < 0 || i > m)
    throw IndexError("degeneracy index " + std::to_string(i) + " outside [0," + std::to_string(m) + "]");
}

}  // namespace

ChainMap face(int i, const ChainMap& x) {
  const int m = x.source_dim();
  check_face_index(i, m);
  return ChainMap::generate(m - 1, x.target_dim(), [&](VertexMask b) { return x.image(coface_mask(i, b)); });
}

ChainMap degeneracy(int i, const ChainMap& x) {
  const int m = x.source_dim();
  check_degeneracy_index(i, m);
  return ChainMap::generate(m + 1, x.target_dim(), [&](VertexMask a) {
    const VertexMask src = codegeneracy_mask(i, a);
    return src ? x.image(src) : Chain(x.target_dim(), mask::size(a) - 1);
  });
}

ChainMap iterated_face(int i, int k, const ChainMap& x) {
  if (k < 0) throw ArgumentError("negative iteration count");
  ChainMap out = x;
  for (int step = 0; step < k; ++step) out = face(i, out);
  return out;
}

ChainMap iterated_degeneracy(int i, int k, const ChainMap& x) {
  if (k < 0) throw ArgumentError("negative iteration count");
  ChainMap out = x;
  for (int step = 0; step < k; ++step) out = degeneracy(i, out);
  return out;
}

OrMorphism face(int i, const OrMorphism& x) { return validate(face(i, x.map())); }
OrMorphism degeneracy(int i, const OrMorphism& x) { return validate(degeneracy(i, x.map())); }

OrMorphism iterated_face(int i, int k, const OrMorphism& x) {
  if (k == 0) return x;
  return validate(iterated_face(i, k, x.map()));
}

OrMorphism iterated_degeneracy(int i, int k, const OrMorphism& x) {
  if (k == 0) return x;
  return validate(iterated_degeneracy(i, k, x.map()));
}

bool is_degenerate_at(int i, const OrMorphism& x) {
  const int m = x.source_dim();
  if (i < 0 || i > m - 1)
    throw IndexError("degeneracy test index " + std::to_string(i) + " outside [0," + std::to_string(m - 1) + "]");
  const VertexMask pair = mask::bit(i) | mask::bit(i + 1);
  for (VertexMask a = 1; a <= x.map().basis_count(); ++a)
    if ((a & pair) == pair && !x.image(a).is_zero()) return false;
  return true;
}

}  // namespace orientals
