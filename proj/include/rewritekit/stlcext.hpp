// stlcext.hpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rewritekit/ars.hpp"

namespace rewritekit::stlcext {

/// Simple type with products and sums: base(n) | A -> B | A * B | A + B.
class ETy {
 public:
  enum class Kind : std::uint8_t { Base, Arr, Prod, Sum };

  static ETy base(std::size_t n);
  static ETy arr(ETy dom, ETy cod);
  static ETy prod(ETy l, ETy r);
  static ETy sum(ETy l, ETy r);

  Kind kind() const { return node_->kind; }
  bool is_base() const { return node_->kind == Kind::Base; }
  bool is_arr() const { return node_->kind == Kind::Arr; }
  bool is_prod() const { return node_->kind == Kind::Prod; }
  bool is_sum() const { return node_->kind == Kind::Sum; }

  std::size_t base_index() const;
  ETy left() const;   // Arr dom / Prod l / Sum l
  ETy right() const;  // Arr cod / Prod r / Sum r

  friend bool operator==(const ETy& a, const ETy& b);
  friend bool operator!=(const ETy& a, const ETy& b) { return !(a == b); }
  friend bool operator<(const ETy& a, const ETy& b);

 private:
  struct Node {
    Kind kind;
    std::size_t index;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit ETy(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static int compare(const Node& a, const Node& b);
  std::shared_ptr<const Node> node_;
};

class Context {
 public:
  Context() = default;
  explicit Context(std::vector<ETy> front_first) : types_(std::move(front_first)) {}

  std::optional<ETy> lookup(std::size_t n) const {
    if (n >= types_.size()) return std::nullopt;
    return types_[n];
  }
  Context extended(const ETy& ty) const {
    std::vector<ETy> next;
    next.reserve(types_.size() + 1);
    next.push_back(ty);
    next.insert(next.end(), types_.begin(), types_.end());
    return Context(std::move(next));
  }
  std::size_t size() const { return types_.size(); }
  const std::vector<ETy>& types() const { return types_; }

 private:
  std::vector<ETy> types_;
};

/// Extended term. Case branches each bind one variable at index 0 (the
/// injected payload); injections carry their full target sum type so
/// synthesis stays one-pass.
class ETerm {
 public:
  enum class Kind : std::uint8_t { Var, Lam, App, Pair, Fst, Snd, Inl, Inr, Case };

  static ETerm var(std::size_t index);
  static ETerm lam(ETy dom, ETerm body);
  static ETerm app(ETerm fun, ETerm arg);
  static ETerm pair(ETerm l, ETerm r);
  static ETerm fst(ETerm m);
  static ETerm snd(ETerm m);
  static ETerm inl(ETy sum_ty, ETerm m);
  static ETerm inr(ETy sum_ty, ETerm m);
  static ETerm case_of(ETerm scrut, ETerm br1, ETerm br2);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  bool is_var() const { return is(Kind::Var); }
  bool is_lam() const { return is(Kind::Lam); }
  bool is_app() const { return is(Kind::App); }
  bool is_pair() const { return is(Kind::Pair); }
  bool is_inl() const { return is(Kind::Inl); }
  bool is_inr() const { return is(Kind::Inr); }
  bool is_case() const { return is(Kind::Case); }

  std::size_t index() const;  // Var
  ETy ann() const;            // Lam dom / Inl / Inr sum annotation
  ETerm child0() const;       // Lam body / App fun / Pair l / Fst / Snd / Inl / Inr / Case scrut
  ETerm child1() const;       // App arg / Pair r / Case br1
  ETerm child2() const;       // Case br2

  std::size_t size() const { return node_->size; }

  friend bool operator==(const ETerm& a, const ETerm& b);
  friend bool operator!=(const ETerm& a, const ETerm& b) { return !(a == b); }
  friend bool operator<(const ETerm& a, const ETerm& b);

 private:
  struct Node {
    Kind kind;
    std::size_t size;
    std::size_t index;
    std::optional<ETy> ann;
    std::shared_ptr<const Node> c0;
    std::shared_ptr<const Node> c1;
    std::shared_ptr<const Node> c2;
  };
  explicit ETerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static int compare(const Node& a, const Node& b);
  std::shared_ptr<const Node> node_;
};

/// Single-step rules, computational first, then the congruence closure.
enum class StepRule : std::uint8_t {
  Beta,
  FstPair,
  SndPair,
  CaseInl,
  CaseInr,
  AppL,
  AppR,
  Lam,
  PairL,
  PairR,
  Fst,
  Snd,
  Inl,
  Inr,
  CaseM,
  CaseN1,
  CaseN2,
};

inline constexpr std::size_t kStepRuleCount = 17;

std::string_view step_rule_name(StepRule rule);
std::optional<StepRule> step_rule_from_name(std::string_view name);
const std::vector<StepRule>& all_step_rules();

ETerm eshift(std::size_t d, std::size_t c, const ETerm& m);
ETerm esubst(std::size_t k, const ETerm& n, const ETerm& m);

/// All single-step reducts labeled by the rule that produced them. The
/// computational rules fire on syntactic redexes (no value restriction).
std::set<std::pair<StepRule, ETerm>> ext_reducts(const ETerm& m);

/// Term projection of ext_reducts.
std::set<ETerm> ext_term_reducts(const ETerm& m);

ars::Rel<ETerm> ext_rel();

bool ext_is_normal_form(const ETerm& m);

/// Leftmost-outermost labeled step.
std::optional<std::pair<StepRule, ETerm>> ext_step(const ETerm& m);

struct TypeError {
  enum class Kind : std::uint8_t {
    UnboundVariable,
    NotAFunction,
    NotAProduct,
    NotASum,
    BadInjectionAnnotation,
    BranchTypeMismatch,
    ArgMismatch,
  };
  Kind kind;
  std::string detail;
};

using InferResult = std::variant<ETy, TypeError>;

inline bool ok(const InferResult& r) { return std::holds_alternative<ETy>(r); }
inline const ETy& type_of(const InferResult& r) { return std::get<ETy>(r); }
inline const TypeError& error_of(const InferResult& r) { return std::get<TypeError>(r); }

InferResult ext_infer(const Context& ctx, const ETerm& m);

/// Lambdas, pairs of values, injections of values.
bool is_value(const ETerm& m);

/// Stuck eliminators and variables: var, app with non-lambda head, fst/snd
/// of a non-pair, case of a non-injection.
bool is_neutral(const ETerm& m);

struct ProgressVerdict {
  enum class Kind : std::uint8_t { IsValue, Steps, Violation, IllTyped };
  Kind kind;
  std::optional<StepRule> witness;      // Steps
  std::optional<TypeError> type_error;  // IllTyped
};

/// For a closed well-typed term, reports whether it is a value or steps
/// (with a witness rule). Violation means neither holds; an ill-typed input
/// is reported distinctly rather than judged.
ProgressVerdict progress_check(const ETerm& m);

struct SubjectReductionReport {
  bool precondition_ok = false;
  std::optional<TypeError> precondition_error;
  std::size_t reducts_checked = 0;
  std::vector<ETerm> violations;
  bool ok() const { return precondition_ok && violations.empty(); }
};

SubjectReductionReport ext_subject_reduction_check(const Context& ctx, const ETerm& m,
                                                   std::size_t depth);

struct SnVerdict {
  enum class Kind : std::uint8_t { Sn, CycleFound, CapExhausted };
  Kind kind;
  ars::ReductionGraph<ETerm> graph;
  std::vector<ETerm> cycle;

  bool is_sn() const { return kind == Kind::Sn; }
};

SnVerdict ext_sn_certificate(const ETerm& m, std::size_t node_cap);

}  // namespace rewritekit::stlcext
