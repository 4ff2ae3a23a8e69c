#pragma once

// Exhaustive checkers for the complicial identities and the laws derived
// from them, over a finite face-closed sample of a carrier.
//
// Variables range over the sample; composite terms (wedges, degeneracies,
// faces of those) may leave it and are compared by carrier equality. Each
// law is instantiated from every tuple whose side conditions hold, found
// through indices on face keys rather than by scanning all tuples.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "orientals/canonical.hpp"
#include "orientals/carrier.hpp"
#include "orientals/errors.hpp"

namespace orientals {

struct Violation {
  std::string law;
  std::string detail;
};

struct LawTally {
  std::string law;
  std::size_t instances = 0;
  std::size_t violations = 0;
};

struct LawReport {
  std::vector<LawTally> tallies;
  std::vector<Violation> witnesses;
  std::size_t witness_cap = 12;

  std::size_t total_instances() const {
    std::size_t k = 0;
    for (const auto& t : tallies) k += t.instances;
    return k;
  }
  std::size_t total_violations() const {
    std::size_t k = 0;
    for (const auto& t : tallies) k += t.violations;
    return k;
  }
  bool ok() const { return total_violations() == 0; }

  LawTally& tally(const std::string& law) {
    for (auto& t : tallies)
      if (t.law == law) return t;
    tallies.push_back({law, 0, 0});
    return tallies.back();
  }

  void merge(const LawReport& other) {
    for (const auto& t : other.tallies) {
      LawTally& mine = tally(t.law);
      mine.instances += t.instances;
      mine.violations += t.violations;
    }
    for (const auto& w : other.witnesses)
      if (witnesses.size() < witness_cap) witnesses.push_back(w);
  }

  // One line per law, then the witnesses.
  std::string summary() const {
    std::ostringstream out;
    for (const auto& t : tallies)
      out << t.law << ": " << t.instances << " instances, " << t.violations << " violations\n";
    for (const auto& w : witnesses) out << "violation of " << w.law << ": " << w.detail << "\n";
    return out.str();
  }
};

// The ingredients of an expression Λ^r(u_{r-1}, ..., u_0, ε_r^s w).
template <class E>
struct LambdaInstance {
  int r = 0;
  int s = 0;
  std::vector<E> us;  // u_{r-1} first
  E w;
};

namespace detail {

// A face-closed, duplicate-free sample indexed by dimension, with each
// element's faces resolved to sample positions.
template <ComplicialCarrier C>
class IndexedSample {
 public:
  using E = typename C::Element;

  IndexedSample(const C& c, const std::vector<std::vector<E>>& sample) : c_(c) {
    const std::size_t levels = sample.size();
    elems_.resize(levels);
    where_.resize(levels);
    for (std::size_t d = 0; d < levels; ++d)
      for (const E& x : sample[d]) {
        if (static_cast<std::size_t>(c.dimension(x)) != d)
          throw SampleError("sample entry listed at dimension " + std::to_string(d) + " has dimension " +
                            std::to_string(c.dimension(x)));
        if (where_[d].emplace(std::string(c.key(x)), elems_[d].size()).second) elems_[d].push_back(x);
      }
    faces_.resize(levels);
    by_face_.resize(levels);
    for (std::size_t d = 1; d < levels; ++d) {
      by_face_[d].assign(d + 1, std::vector<std::vector<std::size_t>>(elems_[d - 1].size()));
      faces_[d].resize(elems_[d].size());
      for (std::size_t k = 0; k < elems_[d].size(); ++k)
        for (int i = 0; i <= static_cast<int>(d); ++i) {
          const E f = c.face(i, elems_[d][k]);
          const auto pos = find(static_cast<int>(d) - 1, f);
          if (!pos)
            throw SampleError("sample is not closed under faces: face " + std::to_string(i) + " of\n" +
                              c.describe(elems_[d][k]) + "is missing");
          faces_[d][k].push_back(*pos);
          by_face_[d][static_cast<std::size_t>(i)][*pos].push_back(k);
        }
    }
  }

  int max_dim() const { return static_cast<int>(elems_.size()) - 1; }
  std::size_t size(int d) const { return valid(d) ? elems_[static_cast<std::size_t>(d)].size() : 0; }
  const E& at(int d, std::size_t k) const { return elems_[static_cast<std::size_t>(d)][k]; }
  std::size_t face(int d, std::size_t k, int i) const {
    return faces_[static_cast<std::size_t>(d)][k][static_cast<std::size_t>(i)];
  }

  std::optional<std::size_t> find(int d, const E& x) const {
    if (!valid(d)) return std::nullopt;
    const auto& m = where_[static_cast<std::size_t>(d)];
    auto it = m.find(std::string(c_.key(x)));
    if (it == m.end()) return std::nullopt;
    return it->second;
  }

  // Sample elements of dimension d whose i-th face is the sample element f.
  const std::vector<std::size_t>& with_face(int d, int i, std::size_t f) const {
    return by_face_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)][f];
  }
  // As above, for an arbitrary element; empty when it is not in the sample.
  const std::vector<std::size_t>& with_face(int d, int i, const E& f) const {
    static const std::vector<std::size_t> none;
    if (d < 1 || d > max_dim()) return none;
    auto pos = find(d - 1, f);
    return pos ? with_face(d, i, *pos) : none;
  }

 private:
  bool valid(int d) const { return d >= 0 && d < static_cast<int>(elems_.size()); }

  const C& c_;
  std::vector<std::vector<E>> elems_;
  std::vector<std::unordered_map<std::string, std::size_t>> where_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
  // by_face_[d][i][f]: positions in dimension d whose i-th face is f.
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> by_face_;
};

template <ComplicialCarrier C>
class LawContext {
 public:
  using E = typename C::Element;
  using Opt = std::optional<E>;

  LawContext(const C& c, LawReport& report) : c(c), report_(report) {}

  Opt wedge(int i, const Opt& x, const Opt& y) const {
    if (!x || !y) return std::nullopt;
    const int d = c.dimension(*x);
    if (c.dimension(*y) != d || i < 0 || i > d - 1) return std::nullopt;
    if (!c.wedge_defined(i, *x, *y)) return std::nullopt;
    return c.wedge(i, *x, *y);
  }
  Opt face(int i, const Opt& x) const {
    if (!x) return std::nullopt;
    const int d = c.dimension(*x);
    if (d < 1 || i < 0 || i > d) return std::nullopt;
    return c.face(i, *x);
  }
  Opt faces(int i, int k, Opt x) const {
    for (int j = 0; j < k; ++j) x = face(i, x);
    return x;
  }
  Opt deg(int i, const Opt& x) const {
    if (!x) return std::nullopt;
    if (i < 0 || i > c.dimension(*x)) return std::nullopt;
    return c.degeneracy(i, *x);
  }
  Opt degs(int i, int k, Opt x) const {
    for (int j = 0; j < k; ++j) x = deg(i, x);
    return x;
  }
  bool same(const Opt& a, const Opt& b) const {
    if (!a || !b) return !a && !b;
    return c.equal(*a, *b);
  }

  // u ∧_k^l v as a left fold; nullopt where any step is undefined.
  Opt iwedge(int k, int l, const Opt& u, const Opt& v) const {
    if (l < 1) return std::nullopt;
    Opt acc = u;
    for (int j = l - 1; j >= 0 && acc; --j) acc = wedge(k, acc, faces(k + 1, j, v));
    return acc;
  }

  // Λ^r over us = [u_{r-1}, ..., u_0] and v.
  Opt lambda(int r, const std::vector<Opt>& us, const Opt& v) const {
    if (static_cast<int>(us.size()) != r) return std::nullopt;
    Opt cur = v;
    for (int p = 0; p < r && cur; ++p)
      cur = face(p + 1, iwedge(p, r - p, us[static_cast<std::size_t>(r - 1 - p)], cur));
    return cur;
  }

  bool in_wedge_image(int i, const E& x) const {
    const int d = c.dimension(x);
    if (d < 2 || i < 0 || i > d - 2) return false;
    return same(wedge(i, face(i + 2, x), face(i, x)), x);
  }
  bool in_degeneracy_image(int i, const E& x) const {
    const int d = c.dimension(x);
    if (d < 1 || i < 0 || i > d - 1) return false;
    return same(deg(i, face(i, x)), x);
  }

  template <class Detail>
  void record(const std::string& law, bool holds, Detail&& detail) {
    LawTally& t = report_.tally(law);
    ++t.instances;
    if (holds) return;
    ++t.violations;
    if (report_.witnesses.size() < report_.witness_cap) report_.witnesses.push_back({law, detail()});
  }

  std::string show(const E& x) const {
    std::string s = c.describe(x);
    std::replace(s.begin(), s.end(), '\n', ';');
    return "{" + s + "}";
  }
  std::string show(const Opt& x) const { return x ? show(*x) : std::string("undefined"); }

  const C& c;

 private:
  LawReport& report_;
};

}  // namespace detail

// Simplicial identities (axiom 0) and the seven wedge axioms. Throws
// SampleError when the sample is not closed under faces or is misgraded.
template <ComplicialCarrier C>
LawReport check_axioms(const C& c, const std::vector<std::vector<typename C::Element>>& sample) {
  using E = typename C::Element;
  using Opt = std::optional<E>;
  LawReport report;
  const detail::IndexedSample<C> S(c, sample);
  detail::LawContext<C> L(c, report);
  const int D = S.max_dim();
  auto some = [](const E& x) { return Opt(x); };
  auto idx = [](std::initializer_list<int> v) {
    std::string s;
    for (int k : v) s += (s.empty() ? "" : ",") + std::to_string(k);
    return s;
  };

  // Every defined pair (x, y) in dimension d with ∂_i x = ∂_{i+1} y.
  auto for_pairs = [&](int d, int i, auto&& fn) {
    for (std::size_t xk = 0; xk < S.size(d); ++xk)
      for (std::size_t yk : S.with_face(d, i + 1, S.face(d, xk, i))) fn(xk, yk);
  };

  // Axiom 0: simplicial identities.
  for (int m = 0; m <= D; ++m)
    for (std::size_t k = 0; k < S.size(m); ++k) {
      const Opt x = some(S.at(m, k));
      for (int j = 0; j <= m; ++j)
        for (int i = 0; i < j && m >= 2; ++i)
          L.record("axiom 0: face-face", L.same(L.face(i, L.face(j, x)), L.face(j - 1, L.face(i, x))),
                   [&] { return "i,j=" + idx({i, j}) + " x=" + L.show(x); });
      for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= j; ++i)
          L.record("axiom 0: degeneracy-degeneracy", L.same(L.deg(i, L.deg(j, x)), L.deg(j + 1, L.deg(i, x))),
                   [&] { return "i,j=" + idx({i, j}) + " x=" + L.show(x); });
      for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= m + 1; ++i) {
          const Opt lhs = L.face(i, L.deg(j, x));
          if (i == j || i == j + 1) {
            L.record("axiom 0: face-degeneracy identity", L.same(lhs, x),
                     [&] { return "i,j=" + idx({i, j}) + " x=" + L.show(x); });
          } else if (m >= 1 && i < j) {
            L.record("axiom 0: face-degeneracy below", L.same(lhs, L.deg(j - 1, L.face(i, x))),
                     [&] { return "i,j=" + idx({i, j}) + " x=" + L.show(x); });
          } else if (m >= 1) {
            L.record("axiom 0: face-degeneracy above", L.same(lhs, L.deg(j, L.face(i - 1, x))),
                     [&] { return "i,j=" + idx({i, j}) + " x=" + L.show(x); });
          }
        }
    }

  // Axiom 1: faces of wedges.
  for (int m = 1; m <= D; ++m)
    for (int i = 0; i <= m - 1; ++i)
      for_pairs(m, i, [&](std::size_t xk, std::size_t yk) {
        const Opt x = some(S.at(m, xk)), y = some(S.at(m, yk));
        const Opt W = L.wedge(i, x, y);
        auto wit = [&](int j) { return [&, j] { return "i,j=" + idx({i, j}) + " x=" + L.show(x) + " y=" + L.show(y); }; };
        L.record("axiom 1: wedge defined", W.has_value(), wit(-1));
        if (!W) return;
        for (int j = 0; j < i; ++j)
          L.record("axiom 1: low faces", L.same(L.face(j, W), L.wedge(i - 1, L.face(j, x), L.face(j, y))), wit(j));
        L.record("axiom 1: face i gives y", L.same(L.face(i, W), y), wit(i));
        L.record("axiom 1: face i+2 gives x", L.same(L.face(i + 2, W), x), wit(i + 2));
        for (int j = i + 3; j <= m + 1; ++j)
          L.record("axiom 1: high faces", L.same(L.face(j, W), L.wedge(i, L.face(j - 1, x), L.face(j - 1, y))),
                   wit(j));
      });

  // Axiom 2: degeneracies as wedges.
  for (int m = 1; m <= D; ++m)
    for (std::size_t k = 0; k < S.size(m); ++k)
      for (int i = 0; i < m; ++i) {
        const Opt x = some(S.at(m, k));
        L.record("axiom 2: lower degeneracy", L.same(L.deg(i, x), L.wedge(i, L.deg(i, L.face(i + 1, x)), x)),
                 [&] { return "i=" + idx({i}) + " x=" + L.show(x); });
        L.record("axiom 2: upper degeneracy", L.same(L.deg(i + 1, x), L.wedge(i, x, L.deg(i, L.face(i, x)))),
                 [&] { return "i=" + idx({i}) + " x=" + L.show(x); });
      }

  // Axiom 3: A = b ∧_i (y ∧_i z) is (∂_{i+2}b ∧_i y) ∧_{i+1} ∂_{i+1}A.
  for (int m = 1; m + 1 <= D; ++m)
    for (int i = 0; i <= m - 1; ++i)
      for_pairs(m, i, [&](std::size_t yk, std::size_t zk) {
        const Opt y = some(S.at(m, yk)), z = some(S.at(m, zk));
        const Opt yz = L.wedge(i, y, z);
        if (!yz) return;
        for (std::size_t bk : S.with_face(m + 1, i, *L.face(i + 1, yz))) {
          const Opt b = some(S.at(m + 1, bk));
          const Opt A = L.wedge(i, b, yz);
          if (!A) continue;
          const Opt rhs = L.wedge(i + 1, L.wedge(i, L.face(i + 2, b), y), L.face(i + 1, A));
          L.record("axiom 3", L.same(A, rhs),
                   [&] { return "i=" + idx({i}) + " b=" + L.show(b) + " y=" + L.show(y) + " z=" + L.show(z); });
        }
      });

  // Axiom 4: A = (x ∧_i y) ∧_{i+1} c is ∂_{i+2}A ∧_i (y ∧_i ∂_i c).
  for (int m = 1; m + 1 <= D; ++m)
    for (int i = 0; i <= m - 1; ++i)
      for_pairs(m, i, [&](std::size_t xk, std::size_t yk) {
        const Opt x = some(S.at(m, xk)), y = some(S.at(m, yk));
        const Opt xy = L.wedge(i, x, y);
        if (!xy) return;
        for (std::size_t ck : S.with_face(m + 1, i + 2, *L.face(i + 1, xy))) {
          const Opt cc = some(S.at(m + 1, ck));
          const Opt A = L.wedge(i + 1, xy, cc);
          if (!A) continue;
          const Opt rhs = L.wedge(i, L.face(i + 2, A), L.wedge(i, y, L.face(i, cc)));
          L.record("axiom 4", L.same(A, rhs),
                   [&] { return "i=" + idx({i}) + " x=" + L.show(x) + " y=" + L.show(y) + " c=" + L.show(cc); });
        }
      });

  // Axiom 5: associativity of wedges, whenever either side is defined.
  for (int m = 1; m <= D; ++m)
    for (int i = 0; i <= m - 1; ++i) {
      std::set<std::tuple<std::size_t, std::size_t, std::size_t>> triples;
      for_pairs(m, i, [&](std::size_t yk, std::size_t zk) {
        const Opt u = L.face(i + 1, L.wedge(i, some(S.at(m, yk)), some(S.at(m, zk))));
        if (!u) return;
        for (std::size_t xk : S.with_face(m, i, *L.face(i + 1, u))) triples.insert({xk, yk, zk});
      });
      for_pairs(m, i, [&](std::size_t xk, std::size_t yk) {
        const Opt p = L.face(i + 1, L.wedge(i, some(S.at(m, xk)), some(S.at(m, yk))));
        if (!p) return;
        for (std::size_t zk : S.with_face(m, i + 1, *L.face(i, p))) triples.insert({xk, yk, zk});
      });
      for (const auto& [xk, yk, zk] : triples) {
        const Opt x = some(S.at(m, xk)), y = some(S.at(m, yk)), z = some(S.at(m, zk));
        const Opt yz = L.wedge(i, y, z);
        const Opt lhs = L.wedge(i, L.wedge(i, x, L.face(i + 1, yz)), yz);
        const Opt xy = L.wedge(i, x, y);
        const Opt rhs = L.wedge(i + 1, xy, L.wedge(i, L.face(i + 1, xy), z));
        if (!lhs && !rhs) continue;
        L.record("axiom 5", L.same(lhs, rhs), [&] {
          return "i=" + idx({i}) + " x=" + L.show(x) + " y=" + L.show(y) + " z=" + L.show(z) + " lhs=" + L.show(lhs) +
                 " rhs=" + L.show(rhs);
        });
      }
    }

  // Axiom 6: for A = ∂_{i+2}[(x ∧_{i+1} y) ∧_{i+1} (y ∧_i z)],
  // A ∧_i (w ∧_{i+1} ∂_i A) = (∂_{i+3}A ∧_i w) ∧_{i+2} A whenever either side is defined.
  for (int m = 2; m <= D; ++m)
    for (int i = 0; i <= m - 2; ++i) {
      std::vector<E> As;
      std::set<std::string> seen;
      for_pairs(m, i, [&](std::size_t yk, std::size_t zk) {
        const Opt y = some(S.at(m, yk)), z = some(S.at(m, zk));
        const Opt yz = L.wedge(i, y, z);
        for (std::size_t xk : S.with_face(m, i + 1, S.face(m, yk, i + 2))) {
          const Opt A = L.face(i + 2, L.wedge(i + 1, L.wedge(i + 1, some(S.at(m, xk)), y), yz));
          if (A && seen.insert(std::string(c.key(*A))).second) As.push_back(*A);
        }
      });
      for (const E& a : As) {
        const Opt A = some(a);
        std::set<std::size_t> ws;
        for (const Opt& f : {L.face(i + 2, L.face(i, A)), L.face(i, L.face(i + 3, A))})
          for (std::size_t wk : S.with_face(m, i + 1, *f)) ws.insert(wk);
        for (std::size_t wk : ws) {
          const Opt w = some(S.at(m, wk));
          const Opt lhs = L.wedge(i, A, L.wedge(i + 1, w, L.face(i, A)));
          const Opt rhs = L.wedge(i + 2, L.wedge(i, L.face(i + 3, A), w), A);
          if (!lhs && !rhs) continue;
          L.record("axiom 6", L.same(lhs, rhs),
                   [&] { return "i=" + idx({i}) + " A=" + L.show(A) + " w=" + L.show(w); });
        }
      }
    }

  // Axiom 7: (x ∧_i y) ∧_j (z ∧_i w) = (x ∧_{j-1} z) ∧_i (y ∧_{j-1} w) for
  // i <= j-3, whenever either side is defined.
  for (int m = 3; m <= D; ++m)
    for (int j = 3; j <= m; ++j)
      for (int i = 0; i <= j - 3; ++i) {
        using Pair = std::pair<std::size_t, std::size_t>;
        std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> quads;
        {
          std::unordered_map<std::string, std::vector<Pair>> right;
          for_pairs(m, i, [&](std::size_t zk, std::size_t wk) {
            const Opt f = L.face(j + 1, L.wedge(i, some(S.at(m, zk)), some(S.at(m, wk))));
            if (f) right[std::string(c.key(*f))].push_back({zk, wk});
          });
          for_pairs(m, i, [&](std::size_t xk, std::size_t yk) {
            const Opt f = L.face(j, L.wedge(i, some(S.at(m, xk)), some(S.at(m, yk))));
            if (!f) return;
            auto it = right.find(std::string(c.key(*f)));
            if (it != right.end())
              for (const auto& [zk, wk] : it->second) quads.insert({xk, yk, zk, wk});
          });
        }
        {
          std::unordered_map<std::string, std::vector<Pair>> right;
          for_pairs(m, j - 1, [&](std::size_t yk, std::size_t wk) {
            const Opt f = L.face(i + 1, L.wedge(j - 1, some(S.at(m, yk)), some(S.at(m, wk))));
            if (f) right[std::string(c.key(*f))].push_back({yk, wk});
          });
          for_pairs(m, j - 1, [&](std::size_t xk, std::size_t zk) {
            const Opt f = L.face(i, L.wedge(j - 1, some(S.at(m, xk)), some(S.at(m, zk))));
            if (!f) return;
            auto it = right.find(std::string(c.key(*f)));
            if (it != right.end())
              for (const auto& [yk, wk] : it->second) quads.insert({xk, yk, zk, wk});
          });
        }
        for (const auto& [xk, yk, zk, wk] : quads) {
          const Opt x = some(S.at(m, xk)), y = some(S.at(m, yk)), z = some(S.at(m, zk)), w = some(S.at(m, wk));
          const Opt lhs = L.wedge(j, L.wedge(i, x, y), L.wedge(i, z, w));
          const Opt rhs = L.wedge(i, L.wedge(j - 1, x, z), L.wedge(j - 1, y, w));
          if (!lhs && !rhs) continue;
          L.record("axiom 7", L.same(lhs, rhs), [&] {
            return "i,j=" + idx({i, j}) + " x=" + L.show(x) + " y=" + L.show(y) + " z=" + L.show(z) +
                   " w=" + L.show(w);
          });
        }
      }

  return report;
}

// Laws derived from the axioms: existence and faces of iterated wedges,
// existence and faces of Λ^r, the Λ^r collapse, degeneracies of wedges at
// distant indices and wedge-image transfer through Λ^r. Λ^r instances come
// from `instances`; each is also perturbed by swapping in other sample
// elements of the same dimension for v.
template <ComplicialCarrier C>
LawReport check_derived_laws(const C& c, const std::vector<std::vector<typename C::Element>>& sample,
                             const std::vector<LambdaInstance<typename C::Element>>& instances,
                             int max_collapse_rank = 3) {
  using E = typename C::Element;
  using Opt = std::optional<E>;
  LawReport report;
  const detail::IndexedSample<C> S(c, sample);
  detail::LawContext<C> L(c, report);
  const int D = S.max_dim();
  auto some = [](const E& x) { return Opt(x); };
  auto idx = [](std::initializer_list<int> v) {
    std::string s;
    for (int k : v) s += (s.empty() ? "" : ",") + std::to_string(k);
    return s;
  };

  // Iterated wedges u ∧_k^l v with u in dimension d and v in d+l-1.
  for (int d = 1; d <= D; ++d)
    for (int l = 1; d + l - 1 <= D; ++l)
      for (int k = 0; k <= d - 1; ++k)
        for (std::size_t vk = 0; vk < S.size(d + l - 1); ++vk) {
          const Opt v = some(S.at(d + l - 1, vk));
          const Opt target = L.faces(k + 1, l, v);
          const auto& matches = S.with_face(d, k, *target);
          std::size_t negatives = 0;
          for (std::size_t uk = 0; uk < S.size(d) && negatives < 2; ++uk) {
            if (std::find(matches.begin(), matches.end(), uk) != matches.end()) continue;
            ++negatives;
            const Opt u = some(S.at(d, uk));
            L.record("iterated wedge undefined off the face condition", !L.iwedge(k, l, u, v),
                     [&] { return "k,l=" + idx({k, l}) + " u=" + L.show(u) + " v=" + L.show(v); });
          }
          for (std::size_t uk : matches) {
            const Opt u = some(S.at(d, uk));
            const Opt W = L.iwedge(k, l, u, v);
            auto wit = [&](int i) {
              return [&, i] { return "k,l,i=" + idx({k, l, i}) + " u=" + L.show(u) + " v=" + L.show(v); };
            };
            L.record("iterated wedge defined on the face condition", W.has_value(), wit(-1));
            if (!W) continue;
            for (int i = 0; i < k; ++i)
              L.record("iterated wedge low faces", L.same(L.face(i, W), L.iwedge(k - 1, l, L.face(i, u), L.face(i, v))),
                       wit(i));
            L.record("iterated wedge face k", L.same(L.face(k, W), v), wit(k));
            if (l == 1) L.record("iterated wedge face k+2", L.same(L.face(k + 2, W), u), wit(k + 2));
            for (int i = k + 1; l > 1 && i <= k + l; ++i)
              L.record("iterated wedge middle faces", L.same(L.face(i + 1, W), L.iwedge(k, l - 1, u, L.face(i, v))),
                       wit(i));
            for (int i = k + l + 1; i + 1 <= d + l; ++i)
              L.record("iterated wedge high faces",
                       L.same(L.face(i + 1, W), L.iwedge(k, l, L.face(i - l + 1, u), L.face(i, v))), wit(i));
          }
        }

  // Λ^r existence and faces.
  auto lambda_laws = [&](int r, const std::vector<Opt>& us, const Opt& v, bool expect_defined) {
    const Opt x = L.lambda(r, us, v);
    auto wit = [&](int i) {
      return [&, i] {
        std::string s = "r,i=" + idx({r, i}) + " v=" + L.show(v);
        for (std::size_t q = 0; q < us.size(); ++q) s += " u" + std::to_string(r - 1 - static_cast<int>(q)) + "=" + L.show(us[q]);
        return s;
      };
    };
    bool condition = true;
    for (int p = 0; p < r && condition; ++p) {
      std::vector<Opt> lower(us.end() - p, us.end());
      condition = L.same(L.face(p, us[static_cast<std::size_t>(r - 1 - p)]), L.lambda(p, lower, L.faces(p + 1, r - p, v))) &&
                  L.face(p, us[static_cast<std::size_t>(r - 1 - p)]).has_value();
    }
    if (expect_defined) L.record("lambda defined", x.has_value(), wit(-1));
    L.record("lambda defined iff stage conditions", x.has_value() == condition, wit(-1));
    if (!x) return;
    const int m = c.dimension(*x);
    for (int i = 0; i <= m && m >= 1; ++i) {
      Opt rhs;
      if (r == 0) {
        rhs = L.face(i, v);
      } else if (i < r) {
        std::vector<Opt> nu;
        for (int p = r - 1; p > i; --p) nu.push_back(L.face(i, us[static_cast<std::size_t>(r - 1 - p)]));
        for (int p = i - 1; p >= 0; --p) nu.push_back(us[static_cast<std::size_t>(r - 1 - p)]);
        rhs = L.lambda(r - 1, nu, L.face(i, v));
      } else if (i == r) {
        rhs = L.face(r, us[0]);
      } else {
        std::vector<Opt> nu;
        for (int p = r - 1; p >= 0; --p) nu.push_back(L.face(i - r + 1 + p, us[static_cast<std::size_t>(r - 1 - p)]));
        rhs = L.lambda(r, nu, L.face(i, v));
      }
      L.record("lambda faces", L.same(L.face(i, x), rhs), wit(i));
    }
  };

  for (const auto& inst : instances) {
    std::vector<Opt> us;
    for (const E& u : inst.us) us.push_back(some(u));
    const Opt v = L.degs(inst.r, inst.s, some(inst.w));
    if (!v) continue;
    lambda_laws(inst.r, us, v, true);
    const int dv = c.dimension(*v);
    std::size_t swaps = 0;
    for (std::size_t k = 0; k < S.size(dv) && swaps < 2; ++k) {
      if (c.equal(S.at(dv, k), *v)) continue;
      ++swaps;
      lambda_laws(inst.r, us, some(S.at(dv, k)), false);
    }

    // Wedge-image transfer for x = Λ^r(u_{r-1}, ..., u_0, ε_r^s w).
    const Opt x = L.lambda(inst.r, us, v);
    if (!x) continue;
    const int r = inst.r, s = inst.s;
    auto u = [&](int p) -> const E& { return inst.us[static_cast<std::size_t>(r - 1 - p)]; };
    auto wit = [&](int i) { return [&, i] { return "r,s,i=" + idx({r, s, i}) + " x=" + L.show(x); }; };
    for (int i = 0; i <= r - 3; ++i) {
      bool premise = L.in_wedge_image(i, inst.w);
      for (int p = i + 2; p < r && premise; ++p) premise = L.in_wedge_image(i, u(p));
      if (premise) L.record("wedge image through lambda, low index", L.in_wedge_image(i, *x), wit(i));
    }
    if (r >= 2 && L.in_degeneracy_image(r - 2, inst.w) && L.in_wedge_image(r - 2, u(r - 1)))
      L.record("wedge image through lambda, index r-2", L.in_wedge_image(r - 2, *x), wit(r - 2));
    if (r >= 1 && s >= 1 && L.in_wedge_image(r - 1, u(r - 1)))
      L.record("wedge image through lambda, index r-1", L.in_wedge_image(r - 1, *x), wit(r - 1));
    for (int i = r; i <= r + s - 2; ++i) {
      bool premise = true;
      for (int p = 0; p < r && premise; ++p) premise = L.in_wedge_image(i - r + p + 1, u(p));
      if (premise) L.record("wedge image through lambda, high index", L.in_wedge_image(i, *x), wit(i));
    }
  }

  // Λ^r collapse.
  for (int m = 0; m <= D; ++m)
    for (std::size_t k = 0; k < S.size(m); ++k)
      for (int r = 0; r <= std::min(m, max_collapse_rank); ++r) {
        const Opt x = some(S.at(m, k));
        std::vector<Opt> us;
        for (int p = r - 1; p >= 0; --p) us.push_back(L.deg(p, L.faces(p + 1, r - p, x)));
        L.record("lambda collapse", L.same(L.lambda(r, us, x), x), [&] { return "r=" + idx({r}) + " x=" + L.show(x); });
      }

  // ε_r(x ∧_i y) = ε_{r-1}x ∧_i ε_{r-1}y for r >= i+3.
  for (int m = 1; m <= D; ++m)
    for (int i = 0; i <= m - 1; ++i)
      for (std::size_t xk = 0; xk < S.size(m); ++xk)
        for (std::size_t yk : S.with_face(m, i + 1, S.face(m, xk, i))) {
          const Opt x = some(S.at(m, xk)), y = some(S.at(m, yk));
          const Opt W = L.wedge(i, x, y);
          for (int r = i + 3; r <= m + 1; ++r)
            L.record("degeneracy of a wedge", L.same(L.deg(r, W), L.wedge(i, L.deg(r - 1, x), L.deg(r - 1, y))),
                     [&] { return "i,r=" + idx({i, r}) + " x=" + L.show(x) + " y=" + L.show(y); });
        }

  return report;
}

// Λ^r instances from the canonical decompositions of every sample element.
inline std::vector<LambdaInstance<OrMorphism>> canonical_lambda_instances(
    const std::vector<std::vector<OrMorphism>>& sample) {
  std::vector<LambdaInstance<OrMorphism>> out;
  for (const auto& level : sample)
    for (const OrMorphism& x : level) {
      CanonicalDecomposition d = decompose(x);
      out.push_back({d.r, d.s, std::move(d.alphas), std::move(d.gamma)});
    }
  return out;
}

}  // namespace orientals
