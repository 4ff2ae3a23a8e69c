#pragma once

// A deliberately naive model of Z∆(n) and of chain maps between such
// complexes: basis elements are vertex tuples, chains are ordered maps, and
// index maps are written out vertex by vertex. Shares no code with the core
// library beyond conversion at the boundary.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "orientals/morphism.hpp"

namespace oracle {

using Tuple = std::vector<int>;
using TChain = std::map<Tuple, long long>;
using Model = std::map<Tuple, TChain>;  // image of every basis element

inline void add_to(TChain& c, const Tuple& t, long long k) {
  if (k == 0) return;
  auto [it, fresh] = c.emplace(t, k);
  if (!fresh && (it->second += k) == 0) c.erase(it);
}

inline void add_to(TChain& c, const TChain& d, long long k = 1) {
  for (const auto& [t, v] : d) add_to(c, t, k * v);
}

// Tuples of length q+1 from {0..n} in lexicographic order.
inline std::vector<Tuple> tuples(int n, int q) {
  std::vector<Tuple> out;
  Tuple cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == q + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<Tuple> all_tuples(int n) {
  std::vector<Tuple> out;
  for (int q = 0; q <= n; ++q)
    for (Tuple& t : tuples(n, q)) out.push_back(std::move(t));
  return out;
}

inline TChain boundary(const Tuple& b) {
  TChain out;
  for (std::size_t k = 0; k < b.size(); ++k) {
    Tuple f = b;
    f.erase(f.begin() + static_cast<long>(k));
    add_to(out, f, k % 2 ? -1 : 1);
  }
  return out;
}

inline TChain boundary(const TChain& c) {
  TChain out;
  for (const auto& [t, v] : c) add_to(out, boundary(t), v);
  return out;
}

inline long long augmentation(const TChain& c) {
  long long s = 0;
  for (const auto& [t, v] : c)
    if (t.size() == 1) s += v;
  return s;
}

// Coface δ_i: the order-preserving injection skipping i.
inline Tuple coface(int i, const Tuple& b) {
  Tuple out;
  for (int v : b) out.push_back(v < i ? v : v + 1);
  return out;
}

// Codegeneracy σ_i: the surjection hitting i twice. Empty when the image
// degenerates.
inline std::optional<Tuple> codegeneracy(int i, const Tuple& a) {
  Tuple out;
  for (int v : a) {
    const int w = v <= i ? v : v - 1;
    if (!out.empty() && out.back() == w) return std::nullopt;
    out.push_back(w);
  }
  return out;
}

inline TChain image_of(const Model& x, const TChain& c) {
  TChain out;
  for (const auto& [t, v] : c) add_to(out, x.at(t), v);
  return out;
}

inline Model face(int i, const Model& x, int m) {
  Model out;
  for (const Tuple& b : all_tuples(m - 1)) out[b] = x.at(coface(i, b));
  return out;
}

inline Model degeneracy(int i, const Model& x, int m) {
  Model out;
  for (const Tuple& a : all_tuples(m + 1)) {
    const auto s = codegeneracy(i, a);
    out[a] = s ? x.at(*s) : TChain{};
  }
  return out;
}

inline Model compose(const Model& g, const Model& f) {
  Model out;
  for (const auto& [a, c] : f) out[a] = image_of(g, c);
  return out;
}

inline Model from(const orientals::ChainMap& f) {
  Model out;
  for (const Tuple& a : all_tuples(f.source_dim())) {
    TChain c;
    const auto b = orientals::BasisElement(std::span<const int>(a), f.source_dim());
    for (const auto& t : f.image(b).terms())
      add_to(c, orientals::BasisElement::from_mask(t.mask, f.target_dim()).vertices(), t.coef);
    out[a] = c;
  }
  return out;
}

inline Model from(const orientals::OrMorphism& x) { return from(x.map()); }

inline bool is_chain_map(const Model& x) {
  for (const auto& [a, c] : x) {
    if (a.size() < 2) continue;
    if (boundary(c) != image_of(x, boundary(a))) return false;
  }
  return true;
}

// Every effective chain of degree q in Z∆(n) with coefficients at most cap.
inline std::vector<TChain> effective_chains(int n, int q, int cap) {
  const auto basis = tuples(n, q);
  std::vector<TChain> out;
  TChain cur;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == basis.size()) {
      out.push_back(cur);
      return;
    }
    for (int c = 0; c <= cap; ++c) {
      if (c) cur[basis[k]] = c;
      self(self, k + 1);
    }
    cur.erase(basis[k]);
  };
  rec(rec, 0);
  return out;
}

// Or(m,n) with image coefficients at most cap, by choosing images one basis
// element at a time in order of degree and keeping those compatible with
// the boundary and the augmentation.
inline std::vector<Model> brute_force_or(int m, int n, int cap) {
  const auto source = all_tuples(m);
  std::vector<std::vector<TChain>> candidates(static_cast<std::size_t>(m + 1));
  for (int q = 0; q <= m; ++q)
    candidates[static_cast<std::size_t>(q)] = q <= n ? effective_chains(n, q, cap) : std::vector<TChain>{TChain{}};
  std::vector<Model> out;
  Model cur;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == source.size()) {
      out.push_back(cur);
      return;
    }
    const Tuple& a = source[k];
    const int q = static_cast<int>(a.size()) - 1;
    const TChain want = q > 0 ? image_of(cur, boundary(a)) : TChain{};
    for (const TChain& c : candidates[static_cast<std::size_t>(q)]) {
      if (q == 0 ? augmentation(c) != 1 : boundary(c) != want) continue;
      cur[a] = c;
      self(self, k + 1);
    }
    cur.erase(a);
  };
  rec(rec, 0);
  return out;
}

}  // namespace oracle
