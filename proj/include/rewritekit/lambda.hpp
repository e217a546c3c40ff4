// lambda.hpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "rewritekit/ars.hpp"

namespace rewritekit::lambda {

/// Untyped lambda term in de Bruijn form: var(n), application, abstraction.
/// Immutable; copies share structure. Ordered by (node count, structure) so
/// sets of terms enumerate deterministically.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, App, Lam };

  static Term var(std::size_t index);
  static Term app(Term fun, Term arg);
  static Term lam(Term body);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == Kind::Var; }
  bool is_app() const { return node_->kind == Kind::App; }
  bool is_lam() const { return node_->kind == Kind::Lam; }

  std::size_t index() const;  // Var
  Term fun() const;           // App
  Term arg() const;           // App
  Term body() const;          // Lam

  /// Number of tree nodes.
  std::size_t size() const { return node_->size; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  friend bool operator<(const Term& a, const Term& b);

  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node {
    Kind kind;
    std::size_t size;
    std::size_t index;
    std::shared_ptr<const Node> left;   // App fun / Lam body
    std::shared_ptr<const Node> right;  // App arg
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static int compare(const Node& a, const Node& b);

  std::shared_ptr<const Node> node_;
};

/// Free indices >= c move up by d; bound ones (below the cutoff) stay put.
Term shift(std::size_t d, std::size_t c, const Term& m);

/// Capture-avoiding substitution: var k becomes n, indices above k drop by
/// one. Crossing a binder substitutes at k+1 with n shifted once; the hit
/// leaf returns the accumulated argument as-is.
Term subst(std::size_t k, const Term& n, const Term& m);

/// Substitution variant that additionally applies shift(k, 0, _) at the hit
/// leaf, double-counting crossed binders. It breaks the shift/subst
/// interaction and composition laws; it exists so the property suites can
/// demonstrate they detect the defect.
Term subst_leaf_shift(std::size_t k, const Term& n, const Term& m);

/// All single-step beta reducts (full beta: congruence under app and lam).
std::set<Term> beta_reducts(const Term& m);

ars::Rel<Term> beta_rel();

/// All parallel reducts: simultaneous contraction of any subset of redexes.
/// Always contains m itself.
std::set<Term> parallel_reducts(const Term& m);

/// Complete development: contracts every redex of m.
Term complete_development(const Term& m);

struct TakahashiReport {
  Term star;                     // complete development of the checked term
  std::size_t reducts_checked = 0;
  std::vector<Term> violations;  // parallel reducts N with star not in parallel_reducts(N)
  bool ok() const { return violations.empty(); }
};

/// Checks that every parallel reduct of m parallel-reduces to m's complete
/// development.
TakahashiReport takahashi_check(const Term& m);

enum class Strategy { NormalOrder, ApplicativeOrder };

/// One strategy step, or nothing if m is a normal form. NormalOrder picks
/// the leftmost-outermost redex, ApplicativeOrder the leftmost-innermost.
std::optional<Term> step(const Term& m, Strategy strategy);

bool is_normal_form(const Term& m);

struct NormalizeOutcome {
  bool normal_form;  // false: fuel ran out with a redex remaining
  Term term;
  std::size_t steps;
};

NormalizeOutcome normalize(const Term& m, Strategy strategy, std::size_t fuel);

}  // namespace rewritekit::lambda
