// ski.hpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rewritekit/ars.hpp"

namespace rewritekit::ski {

/// SK combinator term: S, K, or application. Binder-free, so the parallel
/// reduction machinery needs no substitution.
class CTerm {
 public:
  enum class Kind : std::uint8_t { S, K, App };

  static CTerm s();
  static CTerm k();
  static CTerm app(CTerm fun, CTerm arg);

  Kind kind() const { return node_->kind; }
  bool is_s() const { return node_->kind == Kind::S; }
  bool is_k() const { return node_->kind == Kind::K; }
  bool is_app() const { return node_->kind == Kind::App; }

  CTerm fun() const;
  CTerm arg() const;

  std::size_t size() const { return node_->size; }

  friend bool operator==(const CTerm& a, const CTerm& b);
  friend bool operator!=(const CTerm& a, const CTerm& b) { return !(a == b); }
  friend bool operator<(const CTerm& a, const CTerm& b);

 private:
  struct Node {
    Kind kind;
    std::size_t size;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit CTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static int compare(const Node& a, const Node& b);
  std::shared_ptr<const Node> node_;
};

/// All single contractions of K x y -> x and S x y z -> x z (y z), closed
/// under application congruence.
std::set<CTerm> ski_reducts(const CTerm& m);

/// Same contractions with the fired rule ("K" or "S") attached.
std::vector<std::pair<std::string, CTerm>> ski_labeled_reducts(const CTerm& m);

ars::Rel<CTerm> ski_rel();

/// All parallel reducts (any subset of redexes at once); contains m.
std::set<CTerm> ski_parallel_reducts(const CTerm& m);

/// Complete development: contracts every redex present in m. New redexes
/// created by a contraction are left alone.
CTerm ski_complete(const CTerm& m);

struct SkiTakahashiReport {
  CTerm star;
  std::size_t reducts_checked = 0;
  std::vector<CTerm> violations;
  bool ok() const { return violations.empty(); }
};

SkiTakahashiReport ski_takahashi_check(const CTerm& m);

bool ski_is_normal_form(const CTerm& m);

/// Leftmost-outermost single step, with the fired rule name.
std::optional<std::pair<std::string, CTerm>> ski_step(const CTerm& m);

}  // namespace rewritekit::ski
