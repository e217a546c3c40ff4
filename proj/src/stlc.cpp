// stlc.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#include "rewritekit/stlc.hpp"

#include <stdexcept>
#include <utility>

namespace rewritekit::stlc {

Ty Ty::base(std::size_t n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Base;
  node->index = n;
  return Ty(std::move(node));
}

Ty Ty::arr(Ty dom, Ty cod) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Arr;
  node->index = 0;
  node->dom = std::move(dom.node_);
  node->cod = std::move(cod.node_);
  return Ty(std::move(node));
}

std::size_t Ty::base_index() const {
  if (node_->kind != Kind::Base) throw std::logic_error("Ty::base_index on arrow");
  return node_->index;
}

Ty Ty::dom() const {
  if (node_->kind != Kind::Arr) throw std::logic_error("Ty::dom on base");
  return Ty(node_->dom);
}

Ty Ty::cod() const {
  if (node_->kind != Kind::Arr) throw std::logic_error("Ty::cod on base");
  return Ty(node_->cod);
}

int Ty::compare(const Node& a, const Node& b) {
  if (&a == &b) return 0;
  if (a.kind != b.kind)
    return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  if (a.kind == Kind::Base) {
    if (a.index != b.index) return a.index < b.index ? -1 : 1;
    return 0;
  }
  int c = compare(*a.dom, *b.dom);
  if (c != 0) return c;
  return compare(*a.cod, *b.cod);
}

bool operator==(const Ty& a, const Ty& b) { return Ty::compare(*a.node_, *b.node_) == 0; }
bool operator<(const Ty& a, const Ty& b) { return Ty::compare(*a.node_, *b.node_) < 0; }

TTerm TTerm::var(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->size = 1;
  node->index = index;
  return TTerm(std::move(node));
}

TTerm TTerm::app(TTerm fun, TTerm arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::App;
  node->size = 1 + fun.size() + arg.size();
  node->index = 0;
  node->left = std::move(fun.node_);
  node->right = std::move(arg.node_);
  return TTerm(std::move(node));
}

TTerm TTerm::lam(Ty dom, TTerm body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Lam;
  node->size = 1 + body.size();
  node->index = 0;
  node->dom = std::move(dom);
  node->left = std::move(body.node_);
  return TTerm(std::move(node));
}

std::size_t TTerm::index() const {
  if (node_->kind != Kind::Var) throw std::logic_error("TTerm::index on non-var");
  return node_->index;
}

TTerm TTerm::fun() const {
  if (node_->kind != Kind::App) throw std::logic_error("TTerm::fun on non-app");
  return TTerm(node_->left);
}

TTerm TTerm::arg() const {
  if (node_->kind != Kind::App) throw std::logic_error("TTerm::arg on non-app");
  return TTerm(node_->right);
}

Ty TTerm::dom() const {
  if (node_->kind != Kind::Lam) throw std::logic_error("TTerm::dom on non-lam");
  return *node_->dom;
}

TTerm TTerm::body() const {
  if (node_->kind != Kind::Lam) throw std::logic_error("TTerm::body on non-lam");
  return TTerm(node_->left);
}

int TTerm::compare(const Node& a, const Node& b) {
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
    case Kind::Lam: {
      if (*a.dom < *b.dom) return -1;
      if (*b.dom < *a.dom) return 1;
      return compare(*a.left, *b.left);
    }
  }
  return 0;
}

bool operator==(const TTerm& a, const TTerm& b) {
  return TTerm::compare(*a.node_, *b.node_) == 0;
}

bool operator<(const TTerm& a, const TTerm& b) {
  return TTerm::compare(*a.node_, *b.node_) < 0;
}

InferResult infer(const Context& ctx, const TTerm& m) {
  switch (m.kind()) {
    case TTerm::Kind::Var: {
      auto ty = ctx.lookup(m.index());
      if (!ty)
        return TypeError{TypeError::Kind::UnboundVariable,
                         "variable " + std::to_string(m.index()) +
                             " exceeds context of length " + std::to_string(ctx.size())};
      return *ty;
    }
    case TTerm::Kind::Lam: {
      InferResult body = infer(ctx.extended(m.dom()), m.body());
      if (!ok(body)) return body;
      return Ty::arr(m.dom(), type_of(body));
    }
    case TTerm::Kind::App: {
      InferResult fun = infer(ctx, m.fun());
      if (!ok(fun)) return fun;
      InferResult arg = infer(ctx, m.arg());
      if (!ok(arg)) return arg;
      if (!type_of(fun).is_arr())
        return TypeError{TypeError::Kind::NotAFunction, "application head is not an arrow"};
      if (!(type_of(fun).dom() == type_of(arg)))
        return TypeError{TypeError::Kind::ArgMismatch,
                         "argument type does not match the arrow domain"};
      return type_of(fun).cod();
    }
  }
  throw std::logic_error("unreachable");
}

TTerm tshift(std::size_t d, std::size_t c, const TTerm& m) {
  switch (m.kind()) {
    case TTerm::Kind::Var:
      return m.index() < c ? m : TTerm::var(m.index() + d);
    case TTerm::Kind::App:
      return TTerm::app(tshift(d, c, m.fun()), tshift(d, c, m.arg()));
    case TTerm::Kind::Lam:
      return TTerm::lam(m.dom(), tshift(d, c + 1, m.body()));
  }
  throw std::logic_error("unreachable");
}

TTerm tsubst(std::size_t k, const TTerm& n, const TTerm& m) {
  switch (m.kind()) {
    case TTerm::Kind::Var: {
      std::size_t i = m.index();
      if (i < k) return m;
      if (i == k) return n;
      return TTerm::var(i - 1);
    }
    case TTerm::Kind::App:
      return TTerm::app(tsubst(k, n, m.fun()), tsubst(k, n, m.arg()));
    case TTerm::Kind::Lam:
      return TTerm::lam(m.dom(), tsubst(k + 1, tshift(1, 0, n), m.body()));
  }
  throw std::logic_error("unreachable");
}

std::set<TTerm> typed_step_reducts(const TTerm& m) {
  std::set<TTerm> out;
  switch (m.kind()) {
    case TTerm::Kind::Var:
      break;
    case TTerm::Kind::App: {
      if (m.fun().is_lam()) out.insert(tsubst(0, m.arg(), m.fun().body()));
      for (const TTerm& f : typed_step_reducts(m.fun()))
        out.insert(TTerm::app(f, m.arg()));
      for (const TTerm& a : typed_step_reducts(m.arg()))
        out.insert(TTerm::app(m.fun(), a));
      break;
    }
    case TTerm::Kind::Lam:
      for (const TTerm& b : typed_step_reducts(m.body()))
        out.insert(TTerm::lam(m.dom(), b));
      break;
  }
  return out;
}

ars::Rel<TTerm> typed_beta_rel() {
  return ars::Rel<TTerm>{"stlc-beta", [](const TTerm& m) {
                           std::set<TTerm> s = typed_step_reducts(m);
                           return std::vector<TTerm>(s.begin(), s.end());
                         }};
}

bool typed_is_normal_form(const TTerm& m) {
  switch (m.kind()) {
    case TTerm::Kind::Var:
      return true;
    case TTerm::Kind::Lam:
      return typed_is_normal_form(m.body());
    case TTerm::Kind::App:
      return !m.fun().is_lam() && typed_is_normal_form(m.fun()) &&
             typed_is_normal_form(m.arg());
  }
  throw std::logic_error("unreachable");
}

std::optional<TTerm> typed_step(const TTerm& m, lambda::Strategy strategy) {
  switch (m.kind()) {
    case TTerm::Kind::Var:
      return std::nullopt;
    case TTerm::Kind::Lam:
      if (auto b = typed_step(m.body(), strategy)) return TTerm::lam(m.dom(), *b);
      return std::nullopt;
    case TTerm::Kind::App:
      if (strategy == lambda::Strategy::NormalOrder) {
        if (m.fun().is_lam()) return tsubst(0, m.arg(), m.fun().body());
        if (auto f = typed_step(m.fun(), strategy)) return TTerm::app(*f, m.arg());
        if (auto a = typed_step(m.arg(), strategy)) return TTerm::app(m.fun(), *a);
      } else {
        if (auto f = typed_step(m.fun(), strategy)) return TTerm::app(*f, m.arg());
        if (auto a = typed_step(m.arg(), strategy)) return TTerm::app(m.fun(), *a);
        if (m.fun().is_lam()) return tsubst(0, m.arg(), m.fun().body());
      }
      return std::nullopt;
  }
  throw std::logic_error("unreachable");
}

lambda::Term erase(const TTerm& m) {
  switch (m.kind()) {
    case TTerm::Kind::Var:
      return lambda::Term::var(m.index());
    case TTerm::Kind::App:
      return lambda::Term::app(erase(m.fun()), erase(m.arg()));
    case TTerm::Kind::Lam:
      return lambda::Term::lam(erase(m.body()));
  }
  throw std::logic_error("unreachable");
}

SubjectReductionReport subject_reduction_check(const Context& ctx, const TTerm& m,
                                               std::size_t depth) {
  SubjectReductionReport report;
  InferResult root = infer(ctx, m);
  if (!ok(root)) {
    report.precondition_ok = false;
    report.precondition_error = error_of(root);
    return report;
  }
  report.precondition_ok = true;
  const Ty expected = type_of(root);

  std::set<TTerm> seen{m};
  std::vector<TTerm> frontier{m};
  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<TTerm> next;
    for (const TTerm& t : frontier) {
      for (const TTerm& r : typed_step_reducts(t)) {
        if (!seen.insert(r).second) continue;
        ++report.reducts_checked;
        InferResult it = infer(ctx, r);
        if (!ok(it) || !(type_of(it) == expected)) report.violations.push_back(r);
        next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  return report;
}

SnVerdict sn_certificate(const TTerm& m, std::size_t node_cap) {
  auto graph = ars::star_reachable(typed_beta_rel(), m, node_cap);
  std::vector<TTerm> cycle = ars::find_cycle(graph);
  if (!cycle.empty())
    return SnVerdict{SnVerdict::Kind::CycleFound, std::move(graph), std::move(cycle)};
  if (!graph.complete)
    return SnVerdict{SnVerdict::Kind::CapExhausted, std::move(graph), {}};
  return SnVerdict{SnVerdict::Kind::Sn, std::move(graph), {}};
}

}  // namespace rewritekit::stlc
