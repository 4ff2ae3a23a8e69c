#pragma once

// Chain maps Z∆(m) -> Z∆(n) and the certified subset Or(m,n) of morphisms of
// orientals: augmentation-preserving chain maps sending basis elements to sums
// of basis elements.

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "orientals/chain.hpp"

namespace orientals {

// Largest source dimension a ChainMap stores (2^(m+1)-1 images).
inline constexpr int kMaxSourceDim = 20;

// A degree-preserving group homomorphism Z∆(m) -> Z∆(n), stored as one image
// chain per basis element of Z∆(m) (indexed by vertex mask). Signed
// coefficients are allowed; this is the group Z∆(m,n) in which intermediate
// results of wedge and canonical-form formulas live.
class ChainMap {
 public:
  // Zero map.
  ChainMap(int source_dim, int target_dim);
  // `images[mask - 1]` is the image of the basis element with that vertex mask.
  ChainMap(int source_dim, int target_dim, std::vector<Chain> images);

  template <class F>
  static ChainMap generate(int source_dim, int target_dim, F&& image_of) {
    if (source_dim < 0 || source_dim > kMaxSourceDim) return ChainMap(source_dim, target_dim);
    std::vector<Chain> images;
    const VertexMask count = mask::low(source_dim + 1);
    images.reserve(count);
    for (VertexMask a = 1; a <= count; ++a) images.push_back(image_of(a));
    return ChainMap(source_dim, target_dim, std::move(images));
  }

  int source_dim() const noexcept { return source_; }
  int target_dim() const noexcept { return target_; }
  std::size_t basis_count() const noexcept { return images_.size(); }

  const Chain& image(VertexMask a) const;
  const Chain& image(const BasisElement& a) const { return image(a.mask()); }
  const std::vector<Chain>& images() const noexcept { return images_; }

  // Linear extension to a chain of Z∆(source_dim).
  Chain apply(const Chain& c) const;

  // Source-side basis element on which boundary fails to commute, if any.
  bool commutes_with_boundary(VertexMask* offending = nullptr) const;

  Coefficient max_coefficient() const noexcept;

  // Compact binary serialization; equal maps have equal keys.
  std::string key() const;

  friend bool operator==(const ChainMap&, const ChainMap&) = default;
  friend std::strong_ordering operator<=>(const ChainMap& a, const ChainMap& b);

  friend ChainMap operator+(const ChainMap& a, const ChainMap& b);
  friend ChainMap operator-(const ChainMap& a, const ChainMap& b);

 private:
  void check_shapes() const;

  int source_;
  int target_;
  std::vector<Chain> images_;
};

// g ∘ f for f: Z∆(l) -> Z∆(m) and g: Z∆(m) -> Z∆(n).
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap identity_map(int n);

struct VertexProfile {
  std::vector<int> vertices;  // x(0), ..., x(m)
  int terminus = 0;
  int rank = 0;
  int corank = 0;

  friend bool operator==(const VertexProfile&, const VertexProfile&) = default;
};

// A chain map certified to lie in Or(m,n). Only `validate` constructs one, so
// every instance satisfies augmentation, effectiveness, the chain-map law and
// the vertex-monotonicity/support-window bounds.
class OrMorphism {
 public:
  const ChainMap& map() const noexcept { return map_; }
  int source_dim() const noexcept { return map_.source_dim(); }
  int target_dim() const noexcept { return map_.target_dim(); }
  int dimension() const noexcept { return map_.source_dim(); }
  const Chain& image(VertexMask a) const { return map_.image(a); }
  const Chain& image(const BasisElement& a) const { return map_.image(a); }

  // x(i): the vertex that [i] is sent to.
  int vertex(int i) const { return profile_.vertices.at(static_cast<std::size_t>(i)); }
  const VertexProfile& profile() const noexcept { return profile_; }
  int terminus() const noexcept { return profile_.terminus; }
  int rank() const noexcept { return profile_.rank; }
  int corank() const noexcept { return profile_.corank; }

  const std::string& key() const noexcept { return key_; }

  friend bool operator==(const OrMorphism& a, const OrMorphism& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const OrMorphism& a, const OrMorphism& b) { return a.map_ <=> b.map_; }

 private:
  OrMorphism(ChainMap map, VertexProfile profile);
  friend OrMorphism validate(ChainMap f);
  friend OrMorphism validate_strict(ChainMap f);

  ChainMap map_;
  VertexProfile profile_;
  std::string key_;
};

struct OrMorphismHash {
  std::size_t operator()(const OrMorphism& x) const noexcept { return std::hash<std::string>{}(x.key()); }
};

// Certifies f as a morphism in Or(m,n). Throws NotAugmented, NotEffective or
// NotChainMap naming the offending basis element.
OrMorphism validate(ChainMap f);

// When strict, additionally reject any image coefficient above 1.
OrMorphism validate_strict(ChainMap f);

OrMorphism identity(int n);
OrMorphism compose(const OrMorphism& g, const OrMorphism& f);

VertexProfile vertex_profile(const OrMorphism& x);
// Terminus/rank/corank from a vertex sequence x(0) <= ... <= x(m).
VertexProfile profile_from_vertices(std::vector<int> vertices);

// Readable rendering, one image per line: "[0,2] -> [0,1]+[1,2]".
std::string describe(const ChainMap& f);
inline std::string describe(const OrMorphism& x) { return describe(x.map()); }

}  // namespace orientals
