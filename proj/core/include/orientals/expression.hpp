#pragma once

// Operator expressions over the leaf ι_n: immutable DAG nodes built from
// faces, degeneracies and wedges, with the s-expression text form
// (iota n), (face i e), (deg i e), (wedge i e1 e2).

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace orientals {

class Expression;
using ExprPtr = std::shared_ptr<const Expression>;

enum class ExprKind { Iota, Face, Degeneracy, Wedge };

class Expression {
 public:
  // Constructors check dimension consistency and throw ShapeError or
  // IndexError; wedge definedness is left to evaluation.
  static ExprPtr iota(int n);
  static ExprPtr face(int i, ExprPtr e);
  static ExprPtr degeneracy(int i, ExprPtr e);
  static ExprPtr wedge(int i, ExprPtr left, ExprPtr right);

  ExprKind kind() const noexcept { return kind_; }
  // Face/degeneracy/wedge index; n for a leaf.
  int index() const noexcept { return index_; }
  int dimension() const noexcept { return dim_; }
  // The n of the ι_n leaf this expression is built over.
  int leaf_dimension() const noexcept { return leaf_dim_; }
  const ExprPtr& left() const noexcept { return left_; }
  const ExprPtr& right() const noexcept { return right_; }

 private:
  Expression(ExprKind kind, int index, int dim, int leaf_dim, ExprPtr left, ExprPtr right)
      : kind_(kind), index_(index), dim_(dim), leaf_dim_(leaf_dim), left_(std::move(left)), right_(std::move(right)) {}

  ExprKind kind_;
  int index_;
  int dim_;
  int leaf_dim_;
  ExprPtr left_;
  ExprPtr right_;
};

std::string to_sexpr(const ExprPtr& e);
// Throws ParseError carrying the byte offset of the fault.
ExprPtr parse_sexpr(std::string_view text);

// Structural equality of the trees the DAGs unfold to.
bool same_tree(const ExprPtr& a, const ExprPtr& b);

// Distinct nodes in the DAG, and nodes of the unfolded tree (saturating).
std::size_t dag_size(const ExprPtr& e);
std::size_t tree_size(const ExprPtr& e);

}  // namespace orientals
