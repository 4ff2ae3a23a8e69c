#include "orientals/synthesis.hpp"

#include <map>
#include <optional>
#include <tuple>

#include "orientals/canonical.hpp"

namespace orientals {

namespace {

// Recursion of the generation argument. at(x, T, leaf) returns an
// expression for x assuming terminus(x) <= T and that `leaf` stands for
// g_T. Below a cone, `leaf` stands for the image of g_T under the cones
// passed through; the cones commute with all operations, so the same
// expression serves.
class Synthesizer {
 public:
  Synthesizer(int n, SynthesisTrace* trace) : n_(n), trace_(trace) {
    gens_.reserve(static_cast<std::size_t>(n + 1));
    OrMorphism g = identity(n);
    std::vector<OrMorphism> down{g};
    for (int T = n; T > 0; --T) down.push_back(face(T, down.back()));
    for (int T = 0; T <= n; ++T) gens_.push_back(down[static_cast<std::size_t>(n - T)]);
  }

  ExprPtr run(const OrMorphism& x) {
    return at(x, n_, Expression::iota(n_), std::nullopt);
  }

 private:
  static SynthesisMeasure measure(const OrMorphism& x, int T) {
    return {T, x.terminus(), x.corank(), x.rank()};
  }

  ExprPtr at(const OrMorphism& x, int T, const ExprPtr& leaf, std::optional<SynthesisMeasure> caller) {
    const SynthesisMeasure here = measure(x, T);
    if (trace_) {
      ++trace_->calls;
      if (caller) trace_->edges.emplace_back(*caller, here);
    }
    auto key = std::make_tuple(x.key(), T, leaf.get());
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (trace_) ++trace_->memo_hits;
      return it->second;
    }
    ExprPtr out = build(x, T, leaf, here);
    memo_.emplace(std::move(key), out);
    return out;
  }

  ExprPtr build(const OrMorphism& x, int T, const ExprPtr& leaf, const SynthesisMeasure& here) {
    const int t = x.terminus();
    if (t > T) throw InvariantError("synthesis reached a morphism above its stratum");
    if (t < T) return at(x, T - 1, lower_leaf(leaf, T), here);
    if (x == gens_[static_cast<std::size_t>(T)]) return leaf;

    const CanonicalDecomposition d = decompose(x);
    ExprPtr g;
    if (d.r == 0) {
      g = leaf;
      for (int k = 0; k < t; ++k) g = Expression::face(0, g);
    } else {
      const OrMorphism base = face(d.r, d.gamma);
      if (base.terminus() >= t || cone(t, base) != d.gamma) throw InvariantError("γ is not a cone");
      g = at(base, T - 1, leaf, here);
    }

    ExprPtr v = g;
    for (int k = 0; k < d.s; ++k) v = Expression::degeneracy(d.r, v);
    for (int p = 0; p < d.r; ++p) {
      const ExprPtr u = at(d.alpha(p), T, leaf, here);
      const int l = d.r - p;
      std::vector<ExprPtr> faces{v};
      for (int j = 1; j < l; ++j) faces.push_back(Expression::face(p + 1, faces.back()));
      ExprPtr acc = u;
      for (int j = l - 1; j >= 0; --j) acc = Expression::wedge(p, acc, faces[static_cast<std::size_t>(j)]);
      v = Expression::face(p + 1, acc);
    }
    return v;
  }

  // The leaf for g_{T-1} = ∂_T g_T, shared per (leaf, T).
  ExprPtr lower_leaf(const ExprPtr& leaf, int T) {
    auto key = std::make_pair(leaf.get(), T);
    if (auto it = lowered_.find(key); it != lowered_.end()) return it->second;
    ExprPtr out = Expression::face(T, leaf);
    lowered_.emplace(key, out);
    return out;
  }

  int n_;
  SynthesisTrace* trace_;
  std::vector<OrMorphism> gens_;
  std::map<std::tuple<std::string, int, const Expression*>, ExprPtr> memo_;
  std::map<std::pair<const Expression*, int>, ExprPtr> lowered_;
};

}  // namespace

ExprPtr synthesize(const OrMorphism& x, SynthesisTrace* trace) {
  return Synthesizer(x.target_dim(), trace).run(x);
}

}  // namespace orientals
