#pragma once

// Expressions for morphisms of Or(-,n) in terms of ι_n, and their evaluation
// in any carrier. Evaluating synthesize(x) at an n-dimensional element u of
// a carrier gives the image of x under the unique operation-preserving map
// sending ι_n to u.

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "orientals/carrier.hpp"
#include "orientals/expression.hpp"

namespace orientals {

// (stratum, terminus, corank, rank) of one synthesis call. The stratum T is
// the generator g_T = ∂_{T+1}^{n-T}ι_n the call works over.
struct SynthesisMeasure {
  int stratum = 0;
  int terminus = 0;
  int corank = 0;
  int rank = 0;
  friend auto operator<=>(const SynthesisMeasure&, const SynthesisMeasure&) = default;
};

struct SynthesisTrace {
  std::size_t calls = 0;
  std::size_t memo_hits = 0;
  // (caller, callee) measures for every recursive call.
  std::vector<std::pair<SynthesisMeasure, SynthesisMeasure>> edges;

  bool strictly_decreasing() const {
    for (const auto& [a, b] : edges)
      if (!(b < a)) return false;
    return true;
  }
};

// An expression over (iota n) that evaluates to x in Or(-,n). Shared
// subexpressions are shared nodes.
ExprPtr synthesize(const OrMorphism& x, SynthesisTrace* trace = nullptr);

namespace detail {

template <ComplicialCarrier C>
class Evaluator {
 public:
  using E = typename C::Element;
  Evaluator(const C& c, const E& leaf) : c_(c), leaf_(leaf) {}

  E run(const Expression& e, std::string& path) {
    if (auto it = memo_.find(&e); it != memo_.end()) return it->second;
    E out = [&]() -> E {
      switch (e.kind()) {
        case ExprKind::Iota:
          return leaf_;
        case ExprKind::Face: {
          const E x = child(e, *e.left(), "face", 'L', path);
          return c_.face(e.index(), x);
        }
        case ExprKind::Degeneracy: {
          const E x = child(e, *e.left(), "deg", 'L', path);
          return c_.degeneracy(e.index(), x);
        }
        case ExprKind::Wedge: {
          const E x = child(e, *e.left(), "wedge", 'L', path);
          const E y = child(e, *e.right(), "wedge", 'R', path);
          if (!c_.wedge_defined(e.index(), x, y))
            throw WedgeUndefined(path.empty() ? "/" : path, "faces " + std::to_string(e.index()) + " and " +
                                                                std::to_string(e.index() + 1) + " of the operands differ");
          return c_.wedge(e.index(), x, y);
        }
      }
      throw InvariantError("unknown expression node");
    }();
    memo_.emplace(&e, out);
    return out;
  }

 private:
  E child(const Expression& e, const Expression& sub, const char* op, char side, std::string& path) {
    const std::size_t mark = path.size();
    path += "/";
    path += op;
    path += std::to_string(e.index());
    if (e.kind() == ExprKind::Wedge) {
      path += '.';
      path += side;
    }
    E out = run(sub, path);
    path.resize(mark);
    return out;
  }

  const C& c_;
  const E& leaf_;
  std::unordered_map<const Expression*, E> memo_;
};

}  // namespace detail

// Structural evaluation with ι_n interpreted as `image_of_iota`. Throws
// WedgeUndefined with the node path when a wedge is undefined in the carrier,
// and ArgumentError when the image has the wrong dimension.
template <ComplicialCarrier C>
typename C::Element evaluate(const ExprPtr& e, const C& carrier, const typename C::Element& image_of_iota) {
  if (!e) throw ArgumentError("null expression");
  if (carrier.dimension(image_of_iota) != e->leaf_dimension())
    throw ArgumentError("image of iota " + std::to_string(e->leaf_dimension()) + " has dimension " +
                        std::to_string(carrier.dimension(image_of_iota)));
  std::string path;
  return detail::Evaluator<C>(carrier, image_of_iota).run(*e, path);
}

// x |-> evaluate(synthesize(x), carrier, image), memoized on x. Safe to call
// from several threads when the carrier declares its operations safe.
template <ComplicialCarrier C>
class FreeMap {
 public:
  using E = typename C::Element;

  FreeMap(int n, C carrier, E image_of_iota) : n_(n), carrier_(std::move(carrier)), image_(std::move(image_of_iota)) {
    if (carrier_.dimension(image_) != n) throw ArgumentError("image of iota must have dimension n");
  }

  E operator()(const OrMorphism& x) const {
    if (x.target_dim() != n_) throw ShapeError("free map on Or(-," + std::to_string(n_) + ") applied outside it");
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(x.key()); it != memo_.end()) return it->second;
    }
    std::unique_lock<std::mutex> serial(eval_mu_, std::defer_lock);
    if constexpr (!C::concurrency_safe) serial.lock();
    E out = evaluate(synthesize(x), carrier_, image_);
    std::lock_guard lock(mu_);
    return memo_.emplace(x.key(), std::move(out)).first->second;
  }

  std::size_t cached() const {
    std::lock_guard lock(mu_);
    return memo_.size();
  }

 private:
  int n_;
  C carrier_;
  E image_;
  mutable std::mutex mu_;
  mutable std::mutex eval_mu_;
  mutable std::unordered_map<std::string, E> memo_;
};

}  // namespace orientals
