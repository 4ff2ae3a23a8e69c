#include "orientals/morphism.hpp"

#include <array>
#include <mutex>

#include "basis_order.hpp"

namespace orientals {

namespace detail {

const std::vector<VertexMask>& basis_order(int m) {
  static std::array<std::once_flag, kMaxSourceDim + 1> flags;
  static std::array<std::vector<VertexMask>, kMaxSourceDim + 1> orders;
  if (m < 0 || m > kMaxSourceDim) throw ShapeError("source dimension out of range");
  std::call_once(flags[static_cast<std::size_t>(m)], [m] {
    auto& out = orders[static_cast<std::size_t>(m)];
    for (int q = 0; q <= m; ++q) {
      auto level = enumerate_basis_masks(m, q);
      out.insert(out.end(), level.begin(), level.end());
    }
  });
  return orders[static_cast<std::size_t>(m)];
}

}  // namespace detail

namespace {

void check_dims(int source_dim, int target_dim) {
  if (source_dim < 0 || source_dim > kMaxSourceDim)
    throw ShapeError("source dimension " + std::to_string(source_dim) + " outside [0," +
                     std::to_string(kMaxSourceDim) + "]");
  if (target_dim < 0 || target_dim > kMaxAmbient)
    throw ShapeError("target dimension " + std::to_string(target_dim) + " outside [0," +
                     std::to_string(kMaxAmbient) + "]");
}

std::vector<Chain> zero_images(int source_dim, int target_dim) {
  std::vector<Chain> images;
  const VertexMask count = mask::low(source_dim + 1);
  images.reserve(count);
  for (VertexMask a = 1; a <= count; ++a) images.emplace_back(target_dim, mask::size(a) - 1);
  return images;
}

}  // namespace

ChainMap::ChainMap(int source_dim, int target_dim) : source_(source_dim), target_(target_dim) {
  check_dims(source_dim, target_dim);
  images_ = zero_images(source_dim, target_dim);
}

ChainMap::ChainMap(int source_dim, int target_dim, std::vector<Chain> images)
    : source_(source_dim), target_(target_dim), images_(std::move(images)) {
  check_dims(source_dim, target_dim);
  check_shapes();
}

void ChainMap::check_shapes() const {
  if (images_.size() != mask::low(source_ + 1))
    throw ShapeError("chain map on Z∆(" + std::to_string(source_) + ") needs " +
                     std::to_string(mask::low(source_ + 1)) + " images, got " + std::to_string(images_.size()));
  for (VertexMask a = 1; a <= images_.size(); ++a) {
    const Chain& c = images_[a - 1];
    if (c.ambient() != target_)
      throw ShapeError("image of " + mask::render(a) + " lies in Z∆(" + std::to_string(c.ambient()) +
                       "), expected Z∆(" + std::to_string(target_) + ")");
    if (c.degree() != mask::size(a) - 1)
      throw ShapeError("image of " + mask::render(a) + " has degree " + std::to_string(c.degree()) +
                       ", expected " + std::to_string(mask::size(a) - 1));
  }
}

const Chain& ChainMap::image(VertexMask a) const {
  if (a == 0 || a > images_.size()) throw IndexError("basis element " + mask::render(a) + " not in Z∆(" +
                                                     std::to_string(source_) + ")");
  return images_[a - 1];
}

Chain ChainMap::apply(const Chain& c) const {
  if (c.ambient() != source_) throw ShapeError("chain outside the source of the map");
  ChainAccumulator acc(target_, c.degree());
  for (const Term& t : c.terms()) acc.add(images_[t.mask - 1], t.coef);
  return acc.finish();
}

bool ChainMap::commutes_with_boundary(VertexMask* offending) const {
  ChainAccumulator acc(target_, 0);
  for (VertexMask a : detail::basis_order(source_)) {
    const int q = mask::size(a) - 1;
    if (q < 1) continue;
    acc.reset(q - 1);
    const Chain& img = images_[a - 1];
    for (const Term& t : img.terms()) {
      Coefficient sign = t.coef;
      for (VertexMask rest = t.mask; rest; rest &= rest - 1) {
        acc.add(t.mask ^ (rest & (~rest + 1u)), sign);
        sign = -sign;
      }
    }
    Coefficient sign = -1;
    for (VertexMask rest = a; rest; rest &= rest - 1) {
      acc.add(images_[(a ^ (rest & (~rest + 1u))) - 1], sign);
      sign = -sign;
    }
    if (!acc.cancels()) {
      if (offending) *offending = a;
      return false;
    }
  }
  return true;
}

Coefficient ChainMap::max_coefficient() const noexcept {
  Coefficient best = 0;
  for (const Chain& c : images_) best = std::max(best, c.max_coefficient());
  return best;
}

std::string ChainMap::key() const {
  std::string k;
  k.reserve(2 + images_.size() * 4);
  k.push_back(static_cast<char>(source_));
  k.push_back(static_cast<char>(target_));
  auto put = [&k](auto v) { k.append(reinterpret_cast<const char*>(&v), sizeof(v)); };
  for (const Chain& c : images_) {
    put(static_cast<std::uint16_t>(c.terms().size()));
    for (const Term& t : c.terms()) {
      put(t.mask);
      if (t.coef >= -128 && t.coef < 127 && t.coef != 0) {
        put(static_cast<std::int8_t>(t.coef));
      } else {
        put(static_cast<std::int8_t>(127));
        put(t.coef);
      }
    }
  }
  return k;
}

std::strong_ordering operator<=>(const ChainMap& a, const ChainMap& b) {
  if (auto c = a.source_ <=> b.source_; c != 0) return c;
  if (auto c = a.target_ <=> b.target_; c != 0) return c;
  for (VertexMask m : detail::basis_order(a.source_)) {
    if (auto c = a.images_[m - 1] <=> b.images_[m - 1]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

void require_same_hom(const ChainMap& a, const ChainMap& b) {
  if (a.source_dim() != b.source_dim() || a.target_dim() != b.target_dim())
    throw ShapeError("chain maps in different groups Z∆(" + std::to_string(a.source_dim()) + "," +
                     std::to_string(a.target_dim()) + ") and Z∆(" + std::to_string(b.source_dim()) + "," +
                     std::to_string(b.target_dim()) + ")");
}

}  // namespace

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
  require_same_hom(a, b);
  std::vector<Chain> out;
  out.reserve(a.images_.size());
  for (std::size_t k = 0; k < a.images_.size(); ++k) out.push_back(a.images_[k] + b.images_[k]);
  return ChainMap(a.source_, a.target_, std::move(out));
}

ChainMap operator-(const ChainMap& a, const ChainMap& b) {
  require_same_hom(a, b);
  std::vector<Chain> out;
  out.reserve(a.images_.size());
  for (std::size_t k = 0; k < a.images_.size(); ++k) out.push_back(a.images_[k] - b.images_[k]);
  return ChainMap(a.source_, a.target_, std::move(out));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (f.target_dim() != g.source_dim())
    throw ShapeError("cannot compose: inner map lands in Z∆(" + std::to_string(f.target_dim()) +
                     ") but outer map starts at Z∆(" + std::to_string(g.source_dim()) + ")");
  return ChainMap::generate(f.source_dim(), g.target_dim(), [&](VertexMask a) { return g.apply(f.image(a)); });
}

ChainMap identity_map(int n) {
  return ChainMap::generate(n, n, [n](VertexMask a) { return Chain::basis(BasisElement::from_mask(a, n)); });
}

VertexProfile profile_from_vertices(std::vector<int> vertices) {
  VertexProfile p;
  p.vertices = std::move(vertices);
  if (p.vertices.empty()) return p;
  const int m = static_cast<int>(p.vertices.size()) - 1;
  p.terminus = p.vertices.back();
  for (int a = 0; a <= m; ++a) {
    if (p.vertices[static_cast<std::size_t>(a)] != p.terminus)
      ++p.rank;
    else if (a < m)
      ++p.corank;
  }
  if (p.rank + p.corank != m) throw InvariantError("rank + corank differs from the source dimension");
  return p;
}

OrMorphism::OrMorphism(ChainMap map, VertexProfile profile)
    : map_(std::move(map)), profile_(std::move(profile)), key_(map_.key()) {}

namespace {

std::vector<int> verts(VertexMask a) {
  std::vector<int> out;
  for (; a; a &= a - 1) out.push_back(mask::first(a));
  return out;
}

VertexProfile certify(const ChainMap& f, bool strict) {
  const int m = f.source_dim();
  const auto& order = detail::basis_order(m);

  std::vector<int> x(static_cast<std::size_t>(m + 1));
  for (int i = 0; i <= m; ++i) {
    const Chain& c = f.image(mask::bit(i));
    if (augmentation(c) != 1)
      throw NotAugmented({i}, "image " + c.to_string() + " has augmentation " + std::to_string(augmentation(c)));
  }
  for (VertexMask a : order) {
    const Chain& c = f.image(a);
    if (!c.is_effective())
      throw NotEffective(verts(a), "image " + c.to_string() + " has a negative coefficient");
    if (strict && c.max_coefficient() > 1)
      throw NotEffective(verts(a), "image " + c.to_string() + " repeats a basis element");
  }
  // Effective with augmentation 1 forces each vertex image to be one vertex.
  for (int i = 0; i <= m; ++i) x[static_cast<std::size_t>(i)] = mask::first(f.image(mask::bit(i)).terms()[0].mask);

  VertexMask bad = 0;
  if (!f.commutes_with_boundary(&bad)) {
    const Chain lhs = f.image(bad).degree() >= 1 ? boundary(f.image(bad)) : Chain(f.target_dim(), 0);
    const Chain rhs = f.apply(boundary_of_basis(bad, m));
    throw NotChainMap(verts(bad), "boundary of image is " + lhs.to_string() + " but image of boundary is " +
                                      rhs.to_string());
  }

  for (int i = 1; i <= m; ++i)
    if (x[static_cast<std::size_t>(i - 1)] > x[static_cast<std::size_t>(i)])
      throw SupportBoundsError({i - 1, i}, "vertex images decrease");
  for (VertexMask a : order) {
    const int lo = x[static_cast<std::size_t>(mask::first(a))];
    const int hi = x[static_cast<std::size_t>(mask::last(a))];
    for (const Term& t : f.image(a).terms())
      if (mask::first(t.mask) < lo || mask::last(t.mask) > hi)
        throw SupportBoundsError(verts(a), "term " + mask::render(t.mask) + " outside the window [" +
                                               std::to_string(lo) + "," + std::to_string(hi) + "]");
  }

  return profile_from_vertices(std::move(x));
}

}  // namespace

OrMorphism validate(ChainMap f) {
  VertexProfile p = certify(f, false);
  return OrMorphism(std::move(f), std::move(p));
}

OrMorphism validate_strict(ChainMap f) {
  VertexProfile p = certify(f, true);
  return OrMorphism(std::move(f), std::move(p));
}

OrMorphism identity(int n) {
  if (n < 0) throw ArgumentError("identity needs n >= 0");
  return validate(identity_map(n));
}

OrMorphism compose(const OrMorphism& g, const OrMorphism& f) { return validate(compose(g.map(), f.map())); }

VertexProfile vertex_profile(const OrMorphism& x) {
  std::vector<int> v;
  for (int i = 0; i <= x.source_dim(); ++i) v.push_back(mask::first(x.image(mask::bit(i)).terms()[0].mask));
  return profile_from_vertices(std::move(v));
}

std::string describe(const ChainMap& f) {
  std::string s;
  for (VertexMask a : detail::basis_order(f.source_dim())) {
    s += mask::render(a);
    s += " -> ";
    s += f.image(a).to_string();
    s += '\n';
  }
  return s;
}

}  // namespace orientals
