#pragma once

// Chain complexes of standard simplices: basis elements [a_0,...,a_q] of
// Z∆(n), integer chains, boundary and augmentation.

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orientals/errors.hpp"

namespace orientals {

using Coefficient = std::int64_t;
using VertexMask = std::uint32_t;

// Largest simplex dimension a vertex mask can address.
inline constexpr int kMaxAmbient = 30;

namespace mask {

constexpr VertexMask low(int k) { return k <= 0 ? 0u : (k >= 32 ? ~0u : ((1u << k) - 1u)); }
constexpr VertexMask bit(int v) { return 1u << v; }
constexpr int size(VertexMask m) { return std::popcount(m); }
constexpr int first(VertexMask m) { return std::countr_zero(m); }
constexpr int last(VertexMask m) { return 31 - std::countl_zero(m); }
constexpr bool has(VertexMask m, int v) { return (m >> v) & 1u; }

// Lexicographic comparison of the ascending vertex tuples encoded by a and b.
constexpr std::strong_ordering lex_compare(VertexMask a, VertexMask b) {
  while (a && b) {
    const VertexMask la = a & (~a + 1u);
    const VertexMask lb = b & (~b + 1u);
    if (la != lb) return la < lb ? std::strong_ordering::less : std::strong_ordering::greater;
    a ^= la;
    b ^= lb;
  }
  if (a) return std::strong_ordering::greater;
  if (b) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

constexpr bool lex_less(VertexMask a, VertexMask b) { return lex_compare(a, b) < 0; }

std::string render(VertexMask m);

}  // namespace mask

// A strictly increasing vertex tuple inside the n-simplex. Malformed tuples
// are rejected at construction.
class BasisElement {
 public:
  BasisElement(std::span<const int> vertices, int ambient);
  BasisElement(std::initializer_list<int> vertices, int ambient)
      : BasisElement(std::span<const int>(vertices.begin(), vertices.size()), ambient) {}

  static BasisElement from_mask(VertexMask m, int ambient);

  VertexMask mask() const noexcept { return mask_; }
  int ambient() const noexcept { return ambient_; }
  int degree() const noexcept { return mask::size(mask_) - 1; }
  int front() const noexcept { return mask::first(mask_); }
  int back() const noexcept { return mask::last(mask_); }
  bool contains(int v) const noexcept { return v >= 0 && v < 32 && mask::has(mask_, v); }
  std::vector<int> vertices() const;
  std::string to_string() const { return mask::render(mask_); }

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
  friend std::strong_ordering operator<=>(const BasisElement& a, const BasisElement& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    return mask::lex_compare(a.mask_, b.mask_);
  }

 private:
  BasisElement(VertexMask m, int ambient) noexcept : mask_(m), ambient_(ambient) {}
  VertexMask mask_;
  int ambient_;
};

struct Term {
  VertexMask mask;
  Coefficient coef;
  friend bool operator==(const Term&, const Term&) = default;
};

// Integer formal sum of basis elements of one degree in Z∆(n). Terms are kept
// in lexicographic order with no zero coefficients.
class Chain {
 public:
  Chain(int ambient, int degree);

  static Chain basis(const BasisElement& b);
  // Sorts, merges and drops zero terms. Every mask must be a degree-`degree`
  // basis element of Z∆(ambient).
  static Chain from_terms(int ambient, int degree, std::vector<Term> terms);

  int ambient() const noexcept { return ambient_; }
  int degree() const noexcept { return degree_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(VertexMask m) const noexcept;
  Coefficient coefficient(const BasisElement& b) const noexcept { return coefficient(b.mask()); }
  bool is_effective() const noexcept;
  Coefficient max_coefficient() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Chain&, const Chain&) = default;
  friend std::strong_ordering operator<=>(const Chain& a, const Chain& b);

  friend Chain operator+(const Chain& a, const Chain& b);
  friend Chain operator-(const Chain& a, const Chain& b);
  friend Chain operator-(const Chain& a);
  friend Chain operator*(Coefficient k, const Chain& a);

 private:
  struct Trusted {};
  Chain(int ambient, int degree, std::vector<Term> sorted, Trusted)
      : ambient_(ambient), degree_(degree), terms_(std::move(sorted)) {}
  friend class ChainAccumulator;

  int ambient_;
  int degree_;
  std::vector<Term> terms_;
};

// Collects (mask, coefficient) contributions and produces a canonical chain.
// Shape checks are left to the caller; used on hot paths.
class ChainAccumulator {
 public:
  ChainAccumulator(int ambient, int degree) : ambient_(ambient), degree_(degree) {}
  void add(VertexMask m, Coefficient c) {
    if (c != 0) raw_.push_back({m, c});
  }
  void add(const Chain& c, Coefficient k = 1);
  Chain finish();
  // True when the collected contributions cancel; clears the accumulator
  // without building a chain.
  bool cancels();
  void reset(int degree) {
    degree_ = degree;
    raw_.clear();
  }

 private:
  int ambient_;
  int degree_;
  std::vector<Term> raw_;
};

Chain chain_add(const Chain& a, const Chain& b);
Chain chain_sub(const Chain& a, const Chain& b);
Chain chain_scale(const Chain& a, Coefficient k);

// Alternating-sum boundary; degree-0 input raises DegreeError.
Chain boundary(const Chain& c);
// Boundary of a single basis element given as a mask.
Chain boundary_of_basis(VertexMask m, int ambient);
// Sum of coefficients in degree 0, zero in positive degrees.
Coefficient augmentation(const Chain& c);

// All strictly increasing (q+1)-tuples in {0..n}, lexicographically ordered.
std::vector<BasisElement> enumerate_basis(int n, int q);
std::vector<VertexMask> enumerate_basis_masks(int n, int q);

// Parses the textual chain form, e.g. "[0,1]+[1,2]-2[0,2]" or "0". The zero
// chain needs an explicit degree.
Chain parse_chain(std::string_view text, int ambient, std::optional<int> degree = std::nullopt);

Coefficient checked_add(Coefficient a, Coefficient b);
Coefficient checked_mul(Coefficient a, Coefficient b);

}  // namespace orientals
