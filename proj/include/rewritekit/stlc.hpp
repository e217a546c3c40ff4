// stlc.hpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rewritekit/ars.hpp"
#include "rewritekit/lambda.hpp"

namespace rewritekit::stlc {

/// Simple type: base(n) or arrow.
class Ty {
 public:
  enum class Kind : std::uint8_t { Base, Arr };

  static Ty base(std::size_t n);
  static Ty arr(Ty dom, Ty cod);

  Kind kind() const { return node_->kind; }
  bool is_base() const { return node_->kind == Kind::Base; }
  bool is_arr() const { return node_->kind == Kind::Arr; }

  std::size_t base_index() const;
  Ty dom() const;
  Ty cod() const;

  friend bool operator==(const Ty& a, const Ty& b);
  friend bool operator!=(const Ty& a, const Ty& b) { return !(a == b); }
  friend bool operator<(const Ty& a, const Ty& b);

 private:
  struct Node {
    Kind kind;
    std::size_t index;
    std::shared_ptr<const Node> dom;
    std::shared_ptr<const Node> cod;
  };
  explicit Ty(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static int compare(const Node& a, const Node& b);
  std::shared_ptr<const Node> node_;
};

/// Typing context: position 0 is the most recent binder.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<Ty> front_first) : types_(std::move(front_first)) {}

  std::optional<Ty> lookup(std::size_t n) const {
    if (n >= types_.size()) return std::nullopt;
    return types_[n];
  }
  Context extended(const Ty& ty) const {
    std::vector<Ty> next;
    next.reserve(types_.size() + 1);
    next.push_back(ty);
    next.insert(next.end(), types_.begin(), types_.end());
    return Context(std::move(next));
  }
  std::size_t size() const { return types_.size(); }
  const std::vector<Ty>& types() const { return types_; }

 private:
  std::vector<Ty> types_;
};

/// Typed term: binders carry their domain so synthesis is one-pass.
/// Erasing annotations yields a lambda::Term.
class TTerm {
 public:
  enum class Kind : std::uint8_t { Var, App, Lam };

  static TTerm var(std::size_t index);
  static TTerm app(TTerm fun, TTerm arg);
  static TTerm lam(Ty dom, TTerm body);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == Kind::Var; }
  bool is_app() const { return node_->kind == Kind::App; }
  bool is_lam() const { return node_->kind == Kind::Lam; }

  std::size_t index() const;  // Var
  TTerm fun() const;          // App
  TTerm arg() const;          // App
  Ty dom() const;             // Lam
  TTerm body() const;         // Lam

  std::size_t size() const { return node_->size; }

  friend bool operator==(const TTerm& a, const TTerm& b);
  friend bool operator!=(const TTerm& a, const TTerm& b) { return !(a == b); }
  friend bool operator<(const TTerm& a, const TTerm& b);

 private:
  struct Node {
    Kind kind;
    std::size_t size;
    std::size_t index;
    std::optional<Ty> dom;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit TTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static int compare(const Node& a, const Node& b);
  std::shared_ptr<const Node> node_;
};

struct TypeError {
  enum class Kind : std::uint8_t { UnboundVariable, NotAFunction, ArgMismatch };
  Kind kind;
  std::string detail;
};

using InferResult = std::variant<Ty, TypeError>;

inline bool ok(const InferResult& r) { return std::holds_alternative<Ty>(r); }
inline const Ty& type_of(const InferResult& r) { return std::get<Ty>(r); }
inline const TypeError& error_of(const InferResult& r) { return std::get<TypeError>(r); }

/// Syntax-directed type synthesis.
InferResult infer(const Context& ctx, const TTerm& m);

TTerm tshift(std::size_t d, std::size_t c, const TTerm& m);
TTerm tsubst(std::size_t k, const TTerm& n, const TTerm& m);

/// Full beta on annotated terms (annotations ride along unchanged).
std::set<TTerm> typed_step_reducts(const TTerm& m);

ars::Rel<TTerm> typed_beta_rel();

bool typed_is_normal_form(const TTerm& m);
std::optional<TTerm> typed_step(const TTerm& m, lambda::Strategy strategy);

/// Drops binder annotations.
lambda::Term erase(const TTerm& m);

struct SubjectReductionReport {
  bool precondition_ok = false;
  std::optional<TypeError> precondition_error;
  std::size_t reducts_checked = 0;
  std::vector<TTerm> violations;  // reducts that fail to re-infer the same type
  bool ok() const { return precondition_ok && violations.empty(); }
};

/// Explores all reducts of m to the given depth and re-infers each one;
/// every reduct must synthesize exactly the type of m.
SubjectReductionReport subject_reduction_check(const Context& ctx, const TTerm& m,
                                               std::size_t depth);

struct SnVerdict {
  enum class Kind : std::uint8_t { Sn, CycleFound, CapExhausted };
  Kind kind;
  ars::ReductionGraph<TTerm> graph;
  std::vector<TTerm> cycle;  // CycleFound: x0 -> ... -> xk -> x0

  bool is_sn() const { return kind == Kind::Sn; }
};

/// Builds the reduction graph under the node cap. Sn iff the graph is
/// complete and acyclic; a cycle anywhere in the explored region refutes
/// strong normalization outright.
SnVerdict sn_certificate(const TTerm& m, std::size_t node_cap);

}  // namespace rewritekit::stlc
