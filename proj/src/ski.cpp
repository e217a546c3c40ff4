// ski.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#include "rewritekit/ski.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace rewritekit::ski {

namespace {

// Redex views. A node is the root of at most one redex:
//   K x y  ==  App(App(K, x), y)
//   S x y z == App(App(App(S, x), y), z)
struct KRedex {
  CTerm x, y;
};
struct SRedex {
  CTerm x, y, z;
};

std::optional<KRedex> as_k_redex(const CTerm& m) {
  if (!m.is_app() || !m.fun().is_app() || !m.fun().fun().is_k()) return std::nullopt;
  return KRedex{m.fun().arg(), m.arg()};
}

std::optional<SRedex> as_s_redex(const CTerm& m) {
  if (!m.is_app() || !m.fun().is_app() || !m.fun().fun().is_app() ||
      !m.fun().fun().fun().is_s())
    return std::nullopt;
  return SRedex{m.fun().fun().arg(), m.fun().arg(), m.arg()};
}

CTerm s_contractum(const CTerm& x, const CTerm& y, const CTerm& z) {
  return CTerm::app(CTerm::app(x, z), CTerm::app(y, z));
}

}  // namespace

CTerm CTerm::s() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::S;
  node->size = 1;
  return CTerm(std::move(node));
}

CTerm CTerm::k() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::K;
  node->size = 1;
  return CTerm(std::move(node));
}

CTerm CTerm::app(CTerm fun, CTerm arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::App;
  node->size = 1 + fun.size() + arg.size();
  node->left = std::move(fun.node_);
  node->right = std::move(arg.node_);
  return CTerm(std::move(node));
}

CTerm CTerm::fun() const {
  if (node_->kind != Kind::App) throw std::logic_error("CTerm::fun on non-app");
  return CTerm(node_->left);
}

CTerm CTerm::arg() const {
  if (node_->kind != Kind::App) throw std::logic_error("CTerm::arg on non-app");
  return CTerm(node_->right);
}

int CTerm::compare(const Node& a, const Node& b) {
  if (&a == &b) return 0;
  if (a.size != b.size) return a.size < b.size ? -1 : 1;
  if (a.kind != b.kind)
    return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  if (a.kind != Kind::App) return 0;
  int c = compare(*a.left, *b.left);
  if (c != 0) return c;
  return compare(*a.right, *b.right);
}

bool operator==(const CTerm& a, const CTerm& b) {
  return CTerm::compare(*a.node_, *b.node_) == 0;
}

bool operator<(const CTerm& a, const CTerm& b) {
  return CTerm::compare(*a.node_, *b.node_) < 0;
}

std::set<CTerm> ski_reducts(const CTerm& m) {
  std::set<CTerm> out;
  if (!m.is_app()) return out;
  if (auto kr = as_k_redex(m)) out.insert(kr->x);
  if (auto sr = as_s_redex(m)) out.insert(s_contractum(sr->x, sr->y, sr->z));
  for (const CTerm& f : ski_reducts(m.fun())) out.insert(CTerm::app(f, m.arg()));
  for (const CTerm& a : ski_reducts(m.arg())) out.insert(CTerm::app(m.fun(), a));
  return out;
}

std::vector<std::pair<std::string, CTerm>> ski_labeled_reducts(const CTerm& m) {
  std::vector<std::pair<std::string, CTerm>> out;
  if (!m.is_app()) return out;
  if (auto kr = as_k_redex(m)) out.emplace_back("K", kr->x);
  if (auto sr = as_s_redex(m)) out.emplace_back("S", s_contractum(sr->x, sr->y, sr->z));
  for (const auto& [rule, f] : ski_labeled_reducts(m.fun()))
    out.emplace_back(rule, CTerm::app(f, m.arg()));
  for (const auto& [rule, a] : ski_labeled_reducts(m.arg()))
    out.emplace_back(rule, CTerm::app(m.fun(), a));
  return out;
}

ars::Rel<CTerm> ski_rel() {
  return ars::Rel<CTerm>{"ski", [](const CTerm& m) {
                           std::set<CTerm> s = ski_reducts(m);
                           return std::vector<CTerm>(s.begin(), s.end());
                         }};
}

std::set<CTerm> ski_parallel_reducts(const CTerm& m) {
  std::set<CTerm> out;
  if (!m.is_app()) {
    out.insert(m);
    return out;
  }
  std::set<CTerm> funs = ski_parallel_reducts(m.fun());
  std::set<CTerm> args = ski_parallel_reducts(m.arg());
  for (const CTerm& f : funs)
    for (const CTerm& a : args) out.insert(CTerm::app(f, a));
  if (auto kr = as_k_redex(m))
    for (const CTerm& x : ski_parallel_reducts(kr->x)) out.insert(x);
  if (auto sr = as_s_redex(m)) {
    std::set<CTerm> xs = ski_parallel_reducts(sr->x);
    std::set<CTerm> ys = ski_parallel_reducts(sr->y);
    std::set<CTerm> zs = ski_parallel_reducts(sr->z);
    for (const CTerm& x : xs)
      for (const CTerm& y : ys)
        for (const CTerm& z : zs) out.insert(s_contractum(x, y, z));
  }
  return out;
}

CTerm ski_complete(const CTerm& m) {
  if (auto kr = as_k_redex(m)) return ski_complete(kr->x);
  if (auto sr = as_s_redex(m))
    return s_contractum(ski_complete(sr->x), ski_complete(sr->y), ski_complete(sr->z));
  if (m.is_app()) return CTerm::app(ski_complete(m.fun()), ski_complete(m.arg()));
  return m;
}

SkiTakahashiReport ski_takahashi_check(const CTerm& m) {
  SkiTakahashiReport report{ski_complete(m), 0, {}};
  for (const CTerm& n : ski_parallel_reducts(m)) {
    ++report.reducts_checked;
    if (ski_parallel_reducts(n).count(report.star) == 0)
      report.violations.push_back(n);
  }
  return report;
}

bool ski_is_normal_form(const CTerm& m) {
  if (!m.is_app()) return true;
  if (as_k_redex(m) || as_s_redex(m)) return false;
  return ski_is_normal_form(m.fun()) && ski_is_normal_form(m.arg());
}

std::optional<std::pair<std::string, CTerm>> ski_step(const CTerm& m) {
  if (!m.is_app()) return std::nullopt;
  if (auto kr = as_k_redex(m)) return std::pair{std::string("K"), kr->x};
  if (auto sr = as_s_redex(m))
    return std::pair{std::string("S"), s_contractum(sr->x, sr->y, sr->z)};
  if (auto f = ski_step(m.fun()))
    return std::pair{f->first, CTerm::app(f->second, m.arg())};
  if (auto a = ski_step(m.arg()))
    return std::pair{a->first, CTerm::app(m.fun(), a->second)};
  return std::nullopt;
}

}  // namespace rewritekit::ski
