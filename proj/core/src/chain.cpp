#include "orientals/chain.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace orientals {

namespace mask {

std::string render(VertexMask m) {
  std::string s = "[";
  bool first_vertex = true;
  while (m) {
    if (!first_vertex) s += ',';
    first_vertex = false;
    s += std::to_string(first(m));
    m &= m - 1;
  }
  return s + "]";
}

}  // namespace mask

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

namespace {

void check_ambient(int ambient) {
  if (ambient < 0 || ambient > kMaxAmbient)
    throw ShapeError("simplex dimension " + std::to_string(ambient) + " outside [0," +
                     std::to_string(kMaxAmbient) + "]");
}

}  // namespace

BasisElement::BasisElement(std::span<const int> vertices, int ambient) : mask_(0), ambient_(ambient) {
  check_ambient(ambient);
  if (vertices.empty()) throw ShapeError("basis element needs at least one vertex");
  int prev = -1;
  for (int v : vertices) {
    if (v <= prev) throw ShapeError("basis element vertices must be strictly increasing");
    if (v > ambient) throw ShapeError("vertex " + std::to_string(v) + " exceeds simplex dimension " +
                                      std::to_string(ambient));
    mask_ |= mask::bit(v);
    prev = v;
  }
}

BasisElement BasisElement::from_mask(VertexMask m, int ambient) {
  check_ambient(ambient);
  if (m == 0) throw ShapeError("empty vertex set");
  if (m & ~mask::low(ambient + 1)) throw ShapeError("vertex outside simplex of dimension " + std::to_string(ambient));
  return BasisElement(m, ambient);
}

std::vector<int> BasisElement::vertices() const {
  std::vector<int> out;
  for (VertexMask m = mask_; m; m &= m - 1) out.push_back(mask::first(m));
  return out;
}

Chain::Chain(int ambient, int degree) : ambient_(ambient), degree_(degree) {
  check_ambient(ambient);
  if (degree < 0) throw DegreeError("negative chain degree");
}

Chain Chain::basis(const BasisElement& b) {
  return Chain(b.ambient(), b.degree(), {{b.mask(), 1}}, Trusted{});
}

Chain Chain::from_terms(int ambient, int degree, std::vector<Term> terms) {
  Chain shape(ambient, degree);
  for (const Term& t : terms) {
    if (t.mask == 0 || (t.mask & ~mask::low(ambient + 1)))
      throw ShapeError("term " + mask::render(t.mask) + " outside Z∆(" + std::to_string(ambient) + ")");
    if (mask::size(t.mask) != degree + 1)
      throw ShapeError("term " + mask::render(t.mask) + " has degree " + std::to_string(mask::size(t.mask) - 1) +
                       ", expected " + std::to_string(degree));
  }
  ChainAccumulator acc(ambient, degree);
  for (const Term& t : terms) acc.add(t.mask, t.coef);
  return acc.finish();
}

Coefficient Chain::coefficient(VertexMask m) const noexcept {
  for (const Term& t : terms_)
    if (t.mask == m) return t.coef;
  return 0;
}

bool Chain::is_effective() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef > 0; });
}

Coefficient Chain::max_coefficient() const noexcept {
  Coefficient best = 0;
  for (const Term& t : terms_) best = std::max(best, t.coef);
  return best;
}

std::string Chain::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    if (t.coef < 0)
      s += '-';
    else if (k > 0)
      s += '+';
    const Coefficient mag = t.coef < 0 ? -t.coef : t.coef;
    if (mag != 1) s += std::to_string(mag);
    s += mask::render(t.mask);
  }
  return s;
}

std::strong_ordering operator<=>(const Chain& a, const Chain& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = mask::lex_compare(a.terms_[k].mask, b.terms_[k].mask); c != 0) return c;
    if (auto c = a.terms_[k].coef <=> b.terms_[k].coef; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

void ChainAccumulator::add(const Chain& c, Coefficient k) {
  if (k == 0) return;
  for (const Term& t : c.terms()) raw_.push_back({t.mask, k == 1 ? t.coef : checked_mul(k, t.coef)});
}

Chain ChainAccumulator::finish() {
  if (raw_.size() <= 1) {
    std::vector<Term> out(raw_.begin(), raw_.end());
    raw_.clear();
    return Chain(ambient_, degree_, std::move(out), Chain::Trusted{});
  }
  std::sort(raw_.begin(), raw_.end(), [](const Term& a, const Term& b) { return mask::lex_less(a.mask, b.mask); });
  std::vector<Term> out;
  out.reserve(raw_.size());
  for (const Term& t : raw_) {
    if (!out.empty() && out.back().mask == t.mask) {
      out.back().coef = checked_add(out.back().coef, t.coef);
      if (out.back().coef == 0) out.pop_back();
    } else {
      out.push_back(t);
    }
  }
  raw_.clear();
  return Chain(ambient_, degree_, std::move(out), Chain::Trusted{});
}

bool ChainAccumulator::cancels() {
  std::sort(raw_.begin(), raw_.end(), [](const Term& a, const Term& b) { return a.mask < b.mask; });
  bool zero = true;
  for (std::size_t k = 0; k < raw_.size() && zero;) {
    Coefficient sum = 0;
    std::size_t j = k;
    for (; j < raw_.size() && raw_[j].mask == raw_[k].mask; ++j) sum = checked_add(sum, raw_[j].coef);
    zero = sum == 0;
    k = j;
  }
  raw_.clear();
  return zero;
}

namespace {

void require_same_shape(const Chain& a, const Chain& b) {
  if (a.ambient() != b.ambient() || a.degree() != b.degree())
    throw ShapeError("chain shapes differ: Z∆(" + std::to_string(a.ambient()) + ") degree " +
                     std::to_string(a.degree()) + " vs Z∆(" + std::to_string(b.ambient()) + ") degree " +
                     std::to_string(b.degree()));
}

}  // namespace

Chain operator+(const Chain& a, const Chain& b) {
  require_same_shape(a, b);
  ChainAccumulator acc(a.ambient_, a.degree_);
  acc.add(a);
  acc.add(b);
  return acc.finish();
}

Chain operator-(const Chain& a, const Chain& b) {
  require_same_shape(a, b);
  ChainAccumulator acc(a.ambient_, a.degree_);
  acc.add(a);
  acc.add(b, -1);
  return acc.finish();
}

Chain operator-(const Chain& a) { return (-1) * a; }

Chain operator*(Coefficient k, const Chain& a) {
  ChainAccumulator acc(a.ambient_, a.degree_);
  acc.add(a, k);
  return acc.finish();
}

Chain chain_add(const Chain& a, const Chain& b) { return a + b; }
Chain chain_sub(const Chain& a, const Chain& b) { return a - b; }
Chain chain_scale(const Chain& a, Coefficient k) { return k * a; }

Chain boundary_of_basis(VertexMask m, int ambient) {
  const int q = mask::size(m) - 1;
  if (q < 1) throw DegreeError("boundary of a degree-0 basis element");
  ChainAccumulator acc(ambient, q - 1);
  Coefficient sign = 1;
  for (VertexMask rest = m; rest; rest &= rest - 1) {
    const VertexMask v = rest & (~rest + 1u);
    acc.add(m ^ v, sign);
    sign = -sign;
  }
  return acc.finish();
}

Chain boundary(const Chain& c) {
  if (c.degree() < 1) throw DegreeError("boundary of a degree-0 chain");
  ChainAccumulator acc(c.ambient(), c.degree() - 1);
  for (const Term& t : c.terms()) {
    Coefficient sign = t.coef;
    for (VertexMask rest = t.mask; rest; rest &= rest - 1) {
      const VertexMask v = rest & (~rest + 1u);
      acc.add(t.mask ^ v, sign);
      sign = -sign;
    }
  }
  return acc.finish();
}

Coefficient augmentation(const Chain& c) {
  if (c.degree() != 0) return 0;
  Coefficient sum = 0;
  for (const Term& t : c.terms()) sum = checked_add(sum, t.coef);
  return sum;
}

std::vector<VertexMask> enumerate_basis_masks(int n, int q) {
  check_ambient(n);
  std::vector<VertexMask> out;
  if (q < 0 || q > n) return out;
  // Walk (q+1)-subsets of {0..n} in lexicographic order of their tuples.
  std::vector<int> idx(static_cast<std::size_t>(q + 1));
  for (int k = 0; k <= q; ++k) idx[static_cast<std::size_t>(k)] = k;
  while (true) {
    VertexMask m = 0;
    for (int v : idx) m |= mask::bit(v);
    out.push_back(m);
    int k = q;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - q + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j <= q; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<BasisElement> enumerate_basis(int n, int q) {
  std::vector<BasisElement> out;
  for (VertexMask m : enumerate_basis_masks(n, q)) out.push_back(BasisElement::from_mask(m, n));
  return out;
}

namespace {

class ChainParser {
 public:
  explicit ChainParser(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("offset " + std::to_string(pos_), what);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  long long number() {
    skip_ws();
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  std::vector<int> tuple() {
    expect('[');
    std::vector<int> v;
    if (peek() != ']') {
      v.push_back(static_cast<int>(number()));
      while (peek() == ',') {
        ++pos_;
        v.push_back(static_cast<int>(number()));
      }
    }
    expect(']');
    return v;
  }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Chain parse_chain(std::string_view text, int ambient, std::optional<int> degree) {
  ChainParser p(text);
  if (p.peek() == '0') {
    p.advance();
    if (!p.done()) p.fail("trailing input after zero chain");
    if (!degree) throw ParseError("offset 0", "zero chain needs an explicit degree");
    return Chain(ambient, *degree);
  }
  std::vector<Term> terms;
  std::optional<int> deg = degree;
  bool first_term = true;
  while (!p.done()) {
    Coefficient sign = 1;
    const char c = p.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      p.advance();
    } else if (!first_term) {
      p.fail("expected '+' or '-'");
    }
    Coefficient k = 1;
    if (p.peek() != '[') k = p.number();
    const std::size_t at = p.pos();
    std::vector<int> verts = p.tuple();
    try {
      BasisElement b(verts, ambient);
      if (deg && *deg != b.degree()) p.fail("mixed degrees in chain");
      deg = b.degree();
      terms.push_back({b.mask(), checked_mul(sign, k)});
    } catch (const ShapeError& e) {
      throw ParseError("offset " + std::to_string(at), e.what());
    }
    first_term = false;
  }
  if (first_term) throw ParseError("offset 0", "empty chain");
  return Chain::from_terms(ambient, *deg, std::move(terms));
}

}  // namespace orientals
