// lambda.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#include "rewritekit/lambda.hpp"

#include <stdexcept>
#include <utility>

namespace rewritekit::lambda {

Term Term::var(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->size = 1;
  node->index = index;
  return Term(std::move(node));
}

Term Term::app(Term fun, Term arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::App;
  node->size = 1 + fun.size() + arg.size();
  node->index = 0;
  node->left = std::move(fun.node_);
  node->right = std::move(arg.node_);
  return Term(std::move(node));
}

Term Term::lam(Term body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Lam;
  node->size = 1 + body.size();
  node->index = 0;
  node->left = std::move(body.node_);
  return Term(std::move(node));
}

std::size_t Term::index() const {
  if (node_->kind != Kind::Var) throw std::logic_error("Term::index on non-var");
  return node_->index;
}

Term Term::fun() const {
  if (node_->kind != Kind::App) throw std::logic_error("Term::fun on non-app");
  return Term(node_->left);
}

Term Term::arg() const {
  if (node_->kind != Kind::App) throw std::logic_error("Term::arg on non-app");
  return Term(node_->right);
}

Term Term::body() const {
  if (node_->kind != Kind::Lam) throw std::logic_error("Term::body on non-lam");
  return Term(node_->left);
}

int Term::compare(const Node& a, const Node& b) {
  if (&a == &b) return 0;
  if (a.size != b.size) return a.size < b.size ? -1 : 1;
  if (a.kind != b.kind)
    return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  switch (a.kind) {
    case Kind::Var:
      if (a.index != b.index) return a.index < b.index ? -1 : 1;
      return 0;
    case Kind::App: {
      int c = compare(*a.left, *b.left);
      if (c != 0) return c;
      return compare(*a.right, *b.right);
    }
    case Kind::Lam:
      return compare(*a.left, *b.left);
  }
  return 0;
}

bool operator==(const Term& a, const Term& b) {
  return Term::compare(*a.node_, *b.node_) == 0;
}

bool operator<(const Term& a, const Term& b) {
  return Term::compare(*a.node_, *b.node_) < 0;
}

Term shift(std::size_t d, std::size_t c, const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Var:
      return m.index() < c ? m : Term::var(m.index() + d);
    case Term::Kind::App: {
      Term f = shift(d, c, m.fun());
      Term a = shift(d, c, m.arg());
      if (f.same_node(m.fun()) && a.same_node(m.arg())) return m;
      return Term::app(std::move(f), std::move(a));
    }
    case Term::Kind::Lam: {
      Term b = shift(d, c + 1, m.body());
      if (b.same_node(m.body())) return m;
      return Term::lam(std::move(b));
    }
  }
  throw std::logic_error("unreachable");
}

Term subst(std::size_t k, const Term& n, const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Var: {
      std::size_t i = m.index();
      if (i < k) return m;
      if (i == k) return n;
      return Term::var(i - 1);
    }
    case Term::Kind::App:
      return Term::app(subst(k, n, m.fun()), subst(k, n, m.arg()));
    case Term::Kind::Lam:
      return Term::lam(subst(k + 1, shift(1, 0, n), m.body()));
  }
  throw std::logic_error("unreachable");
}

Term subst_leaf_shift(std::size_t k, const Term& n, const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Var: {
      std::size_t i = m.index();
      if (i < k) return m;
      if (i == k) return shift(k, 0, n);
      return Term::var(i - 1);
    }
    case Term::Kind::App:
      return Term::app(subst_leaf_shift(k, n, m.fun()),
                       subst_leaf_shift(k, n, m.arg()));
    case Term::Kind::Lam:
      return Term::lam(subst_leaf_shift(k + 1, shift(1, 0, n), m.body()));
  }
  throw std::logic_error("unreachable");
}

std::set<Term> beta_reducts(const Term& m) {
  std::set<Term> out;
  switch (m.kind()) {
    case Term::Kind::Var:
      break;
    case Term::Kind::App: {
      if (m.fun().is_lam()) out.insert(subst(0, m.arg(), m.fun().body()));
      for (const Term& f : beta_reducts(m.fun())) out.insert(Term::app(f, m.arg()));
      for (const Term& a : beta_reducts(m.arg())) out.insert(Term::app(m.fun(), a));
      break;
    }
    case Term::Kind::Lam:
      for (const Term& b : beta_reducts(m.body())) out.insert(Term::lam(b));
      break;
  }
  return out;
}

ars::Rel<Term> beta_rel() {
  return ars::Rel<Term>{"beta", [](const Term& m) {
                          std::set<Term> s = beta_reducts(m);
                          return std::vector<Term>(s.begin(), s.end());
                        }};
}

std::set<Term> parallel_reducts(const Term& m) {
  std::set<Term> out;
  switch (m.kind()) {
    case Term::Kind::Var:
      out.insert(m);
      break;
    case Term::Kind::Lam:
      for (const Term& b : parallel_reducts(m.body())) out.insert(Term::lam(b));
      break;
    case Term::Kind::App: {
      std::set<Term> args = parallel_reducts(m.arg());
      if (m.fun().is_lam()) {
        std::set<Term> bodies = parallel_reducts(m.fun().body());
        for (const Term& b : bodies) {
          for (const Term& a : args) {
            out.insert(Term::app(Term::lam(b), a));  // congruence
            out.insert(subst(0, a, b));              // beta
          }
        }
      } else {
        for (const Term& f : parallel_reducts(m.fun()))
          for (const Term& a : args) out.insert(Term::app(f, a));
      }
      break;
    }
  }
  return out;
}

Term complete_development(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Var:
      return m;
    case Term::Kind::Lam:
      return Term::lam(complete_development(m.body()));
    case Term::Kind::App:
      if (m.fun().is_lam())
        return subst(0, complete_development(m.arg()),
                     complete_development(m.fun().body()));
      return Term::app(complete_development(m.fun()),
                       complete_development(m.arg()));
  }
  throw std::logic_error("unreachable");
}

TakahashiReport takahashi_check(const Term& m) {
  TakahashiReport report{complete_development(m), 0, {}};
  for (const Term& n : parallel_reducts(m)) {
    ++report.reducts_checked;
    if (parallel_reducts(n).count(report.star) == 0) report.violations.push_back(n);
  }
  return report;
}

namespace {

std::optional<Term> step_normal(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Var:
      return std::nullopt;
    case Term::Kind::Lam:
      if (auto b = step_normal(m.body())) return Term::lam(*b);
      return std::nullopt;
    case Term::Kind::App:
      if (m.fun().is_lam()) return subst(0, m.arg(), m.fun().body());
      if (auto f = step_normal(m.fun())) return Term::app(*f, m.arg());
      if (auto a = step_normal(m.arg())) return Term::app(m.fun(), *a);
      return std::nullopt;
  }
  throw std::logic_error("unreachable");
}

std::optional<Term> step_applicative(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Var:
      return std::nullopt;
    case Term::Kind::Lam:
      if (auto b = step_applicative(m.body())) return Term::lam(*b);
      return std::nullopt;
    case Term::Kind::App:
      if (auto f = step_applicative(m.fun())) return Term::app(*f, m.arg());
      if (auto a = step_applicative(m.arg())) return Term::app(m.fun(), *a);
      if (m.fun().is_lam()) return subst(0, m.arg(), m.fun().body());
      return std::nullopt;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::optional<Term> step(const Term& m, Strategy strategy) {
  return strategy == Strategy::NormalOrder ? step_normal(m) : step_applicative(m);
}

bool is_normal_form(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Var:
      return true;
    case Term::Kind::Lam:
      return is_normal_form(m.body());
    case Term::Kind::App:
      return !m.fun().is_lam() && is_normal_form(m.fun()) && is_normal_form(m.arg());
  }
  throw std::logic_error("unreachable");
}

NormalizeOutcome normalize(const Term& m, Strategy strategy, std::size_t fuel) {
  Term cur = m;
  std::size_t steps = 0;
  for (;;) {
    auto next = step(cur, strategy);
    if (!next) return {true, cur, steps};
    if (steps == fuel) return {false, cur, steps};
    cur = *std::move(next);
    ++steps;
  }
}

}  // namespace rewritekit::lambda
