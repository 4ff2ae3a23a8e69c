#include "orientals/expression.hpp"

#include <cctype>
#include <limits>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "orientals/errors.hpp"

namespace orientals {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<const Expression*, const Expression*>& p) const noexcept {
    return std::hash<const void*>{}(p.first) * 31u ^ std::hash<const void*>{}(p.second);
  }
};

const ExprPtr& require(const ExprPtr& e) {
  if (!e) throw ArgumentError("null expression operand");
  return e;
}

}  // namespace

ExprPtr Expression::iota(int n) {
  if (n < 0) throw ShapeError("iota needs n >= 0");
  return ExprPtr(new Expression(ExprKind::Iota, n, n, n, nullptr, nullptr));
}

ExprPtr Expression::face(int i, ExprPtr e) {
  const int d = require(e)->dimension();
  if (d < 1) throw ShapeError("face of a dimension-0 expression");
  if (i < 0 || i > d) throw IndexError("face index " + std::to_string(i) + " outside [0," + std::to_string(d) + "]");
  const int leaf = e->leaf_dim_;
  return ExprPtr(new Expression(ExprKind::Face, i, d - 1, leaf, std::move(e), nullptr));
}

ExprPtr Expression::degeneracy(int i, ExprPtr e) {
  const int d = require(e)->dimension();
  if (i < 0 || i > d)
    throw IndexError("degeneracy index " + std::to_string(i) + " outside [0," + std::to_string(d) + "]");
  const int leaf = e->leaf_dim_;
  return ExprPtr(new Expression(ExprKind::Degeneracy, i, d + 1, leaf, std::move(e), nullptr));
}

ExprPtr Expression::wedge(int i, ExprPtr left, ExprPtr right) {
  require(left);
  require(right);
  const int d = left->dimension();
  if (right->dimension() != d)
    throw ShapeError("wedge operands have dimensions " + std::to_string(d) + " and " +
                     std::to_string(right->dimension()));
  if (left->leaf_dim_ != right->leaf_dim_) throw ShapeError("wedge operands are built over different leaves");
  if (i < 0 || i > d - 1)
    throw IndexError("wedge index " + std::to_string(i) + " outside [0," + std::to_string(d - 1) + "]");
  const int leaf = left->leaf_dim_;
  return ExprPtr(new Expression(ExprKind::Wedge, i, d + 1, leaf, std::move(left), std::move(right)));
}

namespace {

void print(const Expression& e, std::string& out) {
  switch (e.kind()) {
    case ExprKind::Iota:
      out += "(iota " + std::to_string(e.index()) + ")";
      return;
    case ExprKind::Face:
      out += "(face " + std::to_string(e.index()) + " ";
      break;
    case ExprKind::Degeneracy:
      out += "(deg " + std::to_string(e.index()) + " ";
      break;
    case ExprKind::Wedge:
      out += "(wedge " + std::to_string(e.index()) + " ";
      print(*e.left(), out);
      out += ' ';
      print(*e.right(), out);
      out += ')';
      return;
  }
  print(*e.left(), out);
  out += ')';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = parse();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("offset " + std::to_string(pos_), what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an operator name");
    return std::string(s_.substr(start, pos_ - start));
  }

  int number() {
    skip();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > std::numeric_limits<int>::max()) fail("index too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a nonnegative integer");
    return static_cast<int>(v);
  }

  ExprPtr parse() {
    expect('(');
    const std::size_t at = pos_;
    const std::string op = word();
    const int k = number();
    ExprPtr out;
    try {
      if (op == "iota") {
        out = Expression::iota(k);
      } else if (op == "face") {
        ExprPtr e = parse();
        out = Expression::face(k, std::move(e));
      } else if (op == "deg") {
        ExprPtr e = parse();
        out = Expression::degeneracy(k, std::move(e));
      } else if (op == "wedge") {
        ExprPtr l = parse();
        ExprPtr r = parse();
        out = Expression::wedge(k, std::move(l), std::move(r));
      } else {
        pos_ = at;
        fail("unknown operator '" + op + "'");
      }
    } catch (const ShapeError& e) {
      throw ParseError("offset " + std::to_string(at), e.what());
    } catch (const IndexError& e) {
      throw ParseError("offset " + std::to_string(at), e.what());
    }
    expect(')');
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_sexpr(const ExprPtr& e) {
  std::string out;
  print(*require(e), out);
  return out;
}

ExprPtr parse_sexpr(std::string_view text) { return Parser(text).parse_all(); }

namespace {

bool same_tree_memo(const ExprPtr& a, const ExprPtr& b,
                    std::unordered_set<std::pair<const Expression*, const Expression*>, PairHash>& equal) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (equal.contains({a.get(), b.get()})) return true;
  if (a->kind() != b->kind() || a->index() != b->index() || a->dimension() != b->dimension()) return false;
  if (!same_tree_memo(a->left(), b->left(), equal) || !same_tree_memo(a->right(), b->right(), equal)) return false;
  equal.insert({a.get(), b.get()});
  return true;
}

}  // namespace

bool same_tree(const ExprPtr& a, const ExprPtr& b) {
  std::unordered_set<std::pair<const Expression*, const Expression*>, PairHash> equal;
  return same_tree_memo(a, b, equal);
}

std::size_t dag_size(const ExprPtr& e) {
  std::unordered_set<const Expression*> seen;
  std::vector<const Expression*> stack{require(e).get()};
  while (!stack.empty()) {
    const Expression* x = stack.back();
    stack.pop_back();
    if (!x || !seen.insert(x).second) continue;
    stack.push_back(x->left().get());
    stack.push_back(x->right().get());
  }
  return seen.size();
}

std::size_t tree_size(const ExprPtr& e) {
  std::unordered_map<const Expression*, std::size_t> memo;
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  auto go = [&](auto&& self, const Expression* x) -> std::size_t {
    if (!x) return 0;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const std::size_t l = self(self, x->left().get());
    const std::size_t r = self(self, x->right().get());
    const std::size_t total = (l > kMax - 1 - r) ? kMax : 1 + l + r;
    memo.emplace(x, total);
    return total;
  };
  return go(go, require(e).get());
}

}  // namespace orientals
