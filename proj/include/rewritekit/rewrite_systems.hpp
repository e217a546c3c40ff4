// rewrite_systems.hpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rewritekit/ars.hpp"

namespace rewritekit::rewrite {

/// Arithmetic expression: 0 | 1 | e + e | e * e.
class Expr {
 public:
  enum class Kind : std::uint8_t { Zero, One, Add, Mul };

  static Expr zero();
  static Expr one();
  static Expr add(Expr l, Expr r);
  static Expr mul(Expr l, Expr r);

  Kind kind() const { return node_->kind; }
  bool is_zero() const { return node_->kind == Kind::Zero; }
  bool is_one() const { return node_->kind == Kind::One; }
  bool is_add() const { return node_->kind == Kind::Add; }
  bool is_mul() const { return node_->kind == Kind::Mul; }

  Expr left() const;
  Expr right() const;

  std::size_t size() const { return node_->size; }

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }
  friend bool operator<(const Expr& a, const Expr& b);

 private:
  struct Node {
    Kind kind;
    std::size_t size;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static int compare(const Node& a, const Node& b);
  std::shared_ptr<const Node> node_;
};

// Rule set for expressions (unit and annihilator laws, applied anywhere):
//   0+e -> e   e+0 -> e   1*e -> e   e*1 -> e   0*e -> 0   e*0 -> 0
// Every application strictly shrinks the node count.
std::set<Expr> expr_reducts(const Expr& e);
std::vector<std::pair<std::string, Expr>> expr_labeled_reducts(const Expr& e);

std::size_t expr_size(const Expr& e);

ars::Rel<Expr> expr_rel();

/// Length-decreasing string rewriting rule over the alphabet {a, b}.
struct StrRule {
  std::string lhs;
  std::string rhs;

  /// Throws std::invalid_argument unless both sides are over {a,b} and
  /// |rhs| < |lhs|.
  StrRule(std::string lhs, std::string rhs);

  std::string name() const { return lhs + "->" + rhs; }

  friend bool operator==(const StrRule& a, const StrRule& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

/// The idempotency system {aa -> a, bb -> b}.
const std::vector<StrRule>& idempotency_rules();

bool is_ab_string(const std::string& w);

/// All single replacements of an lhs occurrence by its rhs, at every
/// position. Throws std::invalid_argument if w leaves the {a,b} alphabet.
std::set<std::string> srs_reducts(const std::string& w, const std::vector<StrRule>& rules);
std::vector<std::pair<std::string, std::string>> srs_labeled_reducts(
    const std::string& w, const std::vector<StrRule>& rules);

std::size_t str_len(const std::string& w);

ars::Rel<std::string> srs_rel(std::vector<StrRule> rules);

/// Minimal superposition of two left-hand sides: `source` reduces both by
/// the first rule (at position 0) and by the second (at overlap_position).
struct CriticalPair {
  std::string source;
  std::string left;
  std::string right;
  std::size_t overlap_position;

  friend bool operator==(const CriticalPair& a, const CriticalPair& b) {
    return a.source == b.source && a.left == b.left && a.right == b.right &&
           a.overlap_position == b.overlap_position;
  }
  friend bool operator<(const CriticalPair& a, const CriticalPair& b);
};

/// Enumerates every proper suffix/prefix overlap and containment overlap
/// between ordered rule pairs, including self-overlaps. The trivial case
/// (same rule at the same position) is excluded.
std::vector<CriticalPair> critical_pairs(const std::vector<StrRule>& rules);

}  // namespace rewritekit::rewrite
