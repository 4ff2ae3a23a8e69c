#include "orientals/enumeration.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "basis_order.hpp"
#include "orientals/simplicial.hpp"
#include "orientals/wedge.hpp"

namespace orientals {

std::vector<std::vector<int>> monotone_profiles(int m, int n) {
  if (m < 0 || n < 0) throw ArgumentError("profiles need m, n >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(m + 1), 0);
  while (true) {
    out.push_back(cur);
    int k = m;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == n) --k;
    if (k < 0) break;
    const int v = cur[static_cast<std::size_t>(k)] + 1;
    for (int j = k; j <= m; ++j) cur[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

namespace {

// Effective chains of one degree supported in a vertex window whose boundary
// equals a given chain. Solutions are cached per (window, target).
class WindowSolver {
 public:
  WindowSolver(int n, Coefficient cap) : n_(n), cap_(cap) {}

  const std::vector<Chain>& solve(int q, int lo, int hi, const Chain& target) {
    std::string key;
    key.push_back(static_cast<char>(q));
    key.push_back(static_cast<char>(lo));
    key.push_back(static_cast<char>(hi));
    for (const Term& t : target.terms()) {
      key.append(reinterpret_cast<const char*>(&t.mask), sizeof t.mask);
      key.append(reinterpret_cast<const char*>(&t.coef), sizeof t.coef);
    }
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(std::move(key), compute(q, lo, hi, target)).first->second;
  }

 private:
  std::vector<Chain> compute(int q, int lo, int hi, const Chain& target) {
    std::vector<VertexMask> window;
    for (VertexMask b : enumerate_basis_masks(n_, q))
      if (mask::first(b) >= lo && mask::last(b) <= hi) window.push_back(b);
    std::vector<Chain> bds;
    for (VertexMask b : window) bds.push_back(boundary_of_basis(b, n_));

    std::vector<Chain> out;
    std::vector<Coefficient> coef(window.size(), 0);
    while (true) {
      ChainAccumulator acc(n_, q - 1);
      for (std::size_t j = 0; j < window.size(); ++j) acc.add(bds[j], coef[j]);
      if (acc.finish() == target) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < window.size(); ++j)
          if (coef[j]) terms.push_back({window[j], coef[j]});
        out.push_back(Chain::from_terms(n_, q, std::move(terms)));
      }
      std::size_t k = 0;
      while (k < coef.size() && coef[k] == cap_) coef[k++] = 0;
      if (k == coef.size()) break;
      ++coef[k];
    }
    return out;
  }

  int n_;
  Coefficient cap_;
  std::unordered_map<std::string, std::vector<Chain>> cache_;
};

void enumerate_profile(int m, int n, const std::vector<int>& x, WindowSolver& solver,
                       std::vector<OrMorphism>& out) {
  const auto& order = detail::basis_order(m);
  std::vector<Chain> images;
  images.reserve(order.size());
  for (VertexMask a = 1; a <= order.size(); ++a) images.emplace_back(n, mask::size(a) - 1);
  for (int i = 0; i <= m; ++i)
    images[mask::bit(i) - 1] = Chain::basis(BasisElement::from_mask(mask::bit(x[static_cast<std::size_t>(i)]), n));

  const std::size_t first_edge = static_cast<std::size_t>(m + 1);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      out.push_back(validate(ChainMap(m, n, images)));
      return;
    }
    const VertexMask a = order[k];
    const int q = mask::size(a) - 1;
    ChainAccumulator acc(n, q - 1);
    Coefficient sign = 1;
    for (VertexMask rest = a; rest; rest &= rest - 1) {
      acc.add(images[(a ^ (rest & (~rest + 1u))) - 1], sign);
      sign = -sign;
    }
    const Chain target = acc.finish();
    const int lo = x[static_cast<std::size_t>(mask::first(a))];
    const int hi = x[static_cast<std::size_t>(mask::last(a))];
    for (const Chain& c : solver.solve(q, lo, hi, target)) {
      images[a - 1] = c;
      self(self, k + 1);
    }
    images[a - 1] = Chain(n, q);
  };
  rec(rec, first_edge);
}

}  // namespace

std::vector<OrMorphism> enumerate_or(int m, int n, const EnumerationOptions& opts) {
  if (m < 0 || n < 0) throw ArgumentError("enumeration needs m, n >= 0");
  if (m > kMaxSourceDim || n > kMaxAmbient) throw ShapeError("enumeration dimensions out of range");
  if (opts.cap < 1) throw ArgumentError("coefficient cap must be at least 1");
  const auto profiles = monotone_profiles(m, n);
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(profiles.size())));

  std::vector<std::vector<OrMorphism>> parts(workers);
  auto work = [&](unsigned w) {
    WindowSolver solver(n, opts.cap);
    for (std::size_t k = w; k < profiles.size(); k += workers) enumerate_profile(m, n, profiles[k], solver, parts[w]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  std::vector<OrMorphism> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<OrMorphism>> generation_closure(int n, int max_dim, const ClosureOptions& opts) {
  if (n < 0 || max_dim < 0 || opts.headroom < 0) throw ArgumentError("closure needs n, max_dim, headroom >= 0");
  const int top = std::max(max_dim + opts.headroom, n);
  if (top > kMaxSourceDim) throw ShapeError("closure dimension out of range");

  const std::size_t levels = static_cast<std::size_t>(top + 1);
  std::vector<std::vector<OrMorphism>> found(levels);
  std::vector<std::unordered_set<std::string>> seen(levels);
  // left[d][i]: key of ∂_i x -> x; right[d][i]: key of ∂_{i+1} y -> y.
  using Index = std::unordered_map<std::string, std::vector<std::size_t>>;
  std::vector<std::vector<Index>> left(levels), right(levels);
  for (std::size_t d = 0; d < levels; ++d) {
    left[d].resize(d);
    right[d].resize(d);
  }

  std::vector<OrMorphism> queue;
  auto offer = [&](OrMorphism z) {
    const auto d = static_cast<std::size_t>(z.dimension());
    if (seen[d].insert(z.key()).second) queue.push_back(std::move(z));
  };
  offer(identity(n));

  while (!queue.empty()) {
    OrMorphism x = std::move(queue.back());
    queue.pop_back();
    const int d = x.dimension();
    const auto du = static_cast<std::size_t>(d);
    found[du].push_back(x);
    const std::size_t self = found[du].size() - 1;

    for (int i = 0; i <= d && d > 0; ++i) offer(face(i, x));
    if (d < top)
      for (int i = 0; i <= d; ++i) offer(degeneracy(i, x));
    if (d >= 1 && d < top) {
      for (int i = 0; i + 1 <= d; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        const std::string lk = face(i, x).key();
        const std::string rk = face(i + 1, x).key();
        left[du][iu][lk].push_back(self);
        right[du][iu][rk].push_back(self);
        // x is indexed first so the pair (x, x) is found exactly once.
        if (auto it = right[du][iu].find(lk); it != right[du][iu].end())
          for (std::size_t y : it->second) offer(wedge(i, x, found[du][y]));
        if (auto it = left[du][iu].find(rk); it != left[du][iu].end())
          for (std::size_t w : it->second)
            if (w != self) offer(wedge(i, found[du][w], x));
      }
    }
  }

  found.resize(static_cast<std::size_t>(max_dim + 1));
  for (auto& level : found) std::sort(level.begin(), level.end());
  return found;
}

Coefficient CensusReport::max_coefficient() const {
  Coefficient best = 0;
  for (const auto& row : rows) best = std::max(best, row.closure_max_coefficient);
  return best;
}

CensusReport coefficient_census(int n, int max_dim) {
  CensusReport report;
  report.n = n;
  report.max_dim = max_dim;
  const auto closure = generation_closure(n, max_dim);
  for (int m = 0; m <= max_dim; ++m) {
    const auto& level = closure[static_cast<std::size_t>(m)];
    CensusRow row;
    row.m = m;
    row.closure_size = level.size();
    for (const auto& x : level) row.closure_max_coefficient = std::max(row.closure_max_coefficient, x.map().max_coefficient());
    const Coefficient limit = std::max<Coefficient>(1, row.closure_max_coefficient);
    for (Coefficient cap = 1; cap <= limit; ++cap) {
      const auto en = enumerate_or(m, n, {cap, 1});
      row.cap_used = cap;
      row.enumerated_size = en.size();
      row.contains_closure = std::includes(en.begin(), en.end(), level.begin(), level.end());
      if (row.contains_closure) {
        row.equals_closure = en.size() == level.size();
        break;
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace orientals
