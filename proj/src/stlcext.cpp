// stlcext.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#include "rewritekit/stlcext.hpp"

#include <stdexcept>
#include <utility>

namespace rewritekit::stlcext {

ETy ETy::base(std::size_t n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Base;
  node->index = n;
  return ETy(std::move(node));
}

ETy ETy::arr(ETy dom, ETy cod) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Arr;
  node->index = 0;
  node->left = std::move(dom.node_);
  node->right = std::move(cod.node_);
  return ETy(std::move(node));
}

ETy ETy::prod(ETy l, ETy r) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Prod;
  node->index = 0;
  node->left = std::move(l.node_);
  node->right = std::move(r.node_);
  return ETy(std::move(node));
}

ETy ETy::sum(ETy l, ETy r) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Sum;
  node->index = 0;
  node->left = std::move(l.node_);
  node->right = std::move(r.node_);
  return ETy(std::move(node));
}

std::size_t ETy::base_index() const {
  if (node_->kind != Kind::Base) throw std::logic_error("ETy::base_index on non-base");
  return node_->index;
}

ETy ETy::left() const {
  if (!node_->left) throw std::logic_error("ETy::left on base");
  return ETy(node_->left);
}

ETy ETy::right() const {
  if (!node_->right) throw std::logic_error("ETy::right on base");
  return ETy(node_->right);
}

int ETy::compare(const Node& a, const Node& b) {
  if (&a == &b) return 0;
  if (a.kind != b.kind)
    return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  if (a.kind == Kind::Base) {
    if (a.index != b.index) return a.index < b.index ? -1 : 1;
    return 0;
  }
  int c = compare(*a.left, *b.left);
  if (c != 0) return c;
  return compare(*a.right, *b.right);
}

bool operator==(const ETy& a, const ETy& b) { return ETy::compare(*a.node_, *b.node_) == 0; }
bool operator<(const ETy& a, const ETy& b) { return ETy::compare(*a.node_, *b.node_) < 0; }

ETerm ETerm::var(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->size = 1;
  node->index = index;
  return ETerm(std::move(node));
}

ETerm ETerm::lam(ETy dom, ETerm body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Lam;
  node->size = 1 + body.size();
  node->index = 0;
  node->ann = std::move(dom);
  node->c0 = std::move(body.node_);
  return ETerm(std::move(node));
}

ETerm ETerm::app(ETerm fun, ETerm arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::App;
  node->size = 1 + fun.size() + arg.size();
  node->index = 0;
  node->c0 = std::move(fun.node_);
  node->c1 = std::move(arg.node_);
  return ETerm(std::move(node));
}

ETerm ETerm::pair(ETerm l, ETerm r) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pair;
  node->size = 1 + l.size() + r.size();
  node->index = 0;
  node->c0 = std::move(l.node_);
  node->c1 = std::move(r.node_);
  return ETerm(std::move(node));
}

ETerm ETerm::fst(ETerm m) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Fst;
  node->size = 1 + m.size();
  node->index = 0;
  node->c0 = std::move(m.node_);
  return ETerm(std::move(node));
}

ETerm ETerm::snd(ETerm m) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Snd;
  node->size = 1 + m.size();
  node->index = 0;
  node->c0 = std::move(m.node_);
  return ETerm(std::move(node));
}

ETerm ETerm::inl(ETy sum_ty, ETerm m) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Inl;
  node->size = 1 + m.size();
  node->index = 0;
  node->ann = std::move(sum_ty);
  node->c0 = std::move(m.node_);
  return ETerm(std::move(node));
}

ETerm ETerm::inr(ETy sum_ty, ETerm m) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Inr;
  node->size = 1 + m.size();
  node->index = 0;
  node->ann = std::move(sum_ty);
  node->c0 = std::move(m.node_);
  return ETerm(std::move(node));
}

ETerm ETerm::case_of(ETerm scrut, ETerm br1, ETerm br2) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Case;
  node->size = 1 + scrut.size() + br1.size() + br2.size();
  node->index = 0;
  node->c0 = std::move(scrut.node_);
  node->c1 = std::move(br1.node_);
  node->c2 = std::move(br2.node_);
  return ETerm(std::move(node));
}

std::size_t ETerm::index() const {
  if (node_->kind != Kind::Var) throw std::logic_error("ETerm::index on non-var");
  return node_->index;
}

ETy ETerm::ann() const {
  if (!node_->ann) throw std::logic_error("ETerm::ann: no annotation here");
  return *node_->ann;
}

ETerm ETerm::child0() const {
  if (!node_->c0) throw std::logic_error("ETerm::child0 on leaf");
  return ETerm(node_->c0);
}

ETerm ETerm::child1() const {
  if (!node_->c1) throw std::logic_error("ETerm::child1: no such child");
  return ETerm(node_->c1);
}

ETerm ETerm::child2() const {
  if (!node_->c2) throw std::logic_error("ETerm::child2: no such child");
  return ETerm(node_->c2);
}

int ETerm::compare(const Node& a, const Node& b) {
  if (&a == &b) return 0;
  if (a.size != b.size) return a.size < b.size ? -1 : 1;
  if (a.kind != b.kind)
    return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  if (a.kind == Kind::Var) {
    if (a.index != b.index) return a.index < b.index ? -1 : 1;
    return 0;
  }
  if (a.ann.has_value()) {
    if (*a.ann < *b.ann) return -1;
    if (*b.ann < *a.ann) return 1;
  }
  for (auto sel : {&Node::c0, &Node::c1, &Node::c2}) {
    const auto& ca = a.*sel;
    const auto& cb = b.*sel;
    if (!ca) break;
    int c = compare(*ca, *cb);
    if (c != 0) return c;
  }
  return 0;
}

bool operator==(const ETerm& a, const ETerm& b) {
  return ETerm::compare(*a.node_, *b.node_) == 0;
}

bool operator<(const ETerm& a, const ETerm& b) {
  return ETerm::compare(*a.node_, *b.node_) < 0;
}

std::string_view step_rule_name(StepRule rule) {
  switch (rule) {
    case StepRule::Beta: return "Beta";
    case StepRule::FstPair: return "FstPair";
    case StepRule::SndPair: return "SndPair";
    case StepRule::CaseInl: return "CaseInl";
    case StepRule::CaseInr: return "CaseInr";
    case StepRule::AppL: return "AppL";
    case StepRule::AppR: return "AppR";
    case StepRule::Lam: return "Lam";
    case StepRule::PairL: return "PairL";
    case StepRule::PairR: return "PairR";
    case StepRule::Fst: return "Fst";
    case StepRule::Snd: return "Snd";
    case StepRule::Inl: return "Inl";
    case StepRule::Inr: return "Inr";
    case StepRule::CaseM: return "CaseM";
    case StepRule::CaseN1: return "CaseN1";
    case StepRule::CaseN2: return "CaseN2";
  }
  return "?";
}

const std::vector<StepRule>& all_step_rules() {
  static const std::vector<StepRule> rules = [] {
    std::vector<StepRule> out;
    for (std::size_t i = 0; i < kStepRuleCount; ++i)
      out.push_back(static_cast<StepRule>(i));
    return out;
  }();
  return rules;
}

std::optional<StepRule> step_rule_from_name(std::string_view name) {
  for (StepRule rule : all_step_rules())
    if (step_rule_name(rule) == name) return rule;
  return std::nullopt;
}

ETerm eshift(std::size_t d, std::size_t c, const ETerm& m) {
  switch (m.kind()) {
    case ETerm::Kind::Var:
      return m.index() < c ? m : ETerm::var(m.index() + d);
    case ETerm::Kind::Lam:
      return ETerm::lam(m.ann(), eshift(d, c + 1, m.child0()));
    case ETerm::Kind::App:
      return ETerm::app(eshift(d, c, m.child0()), eshift(d, c, m.child1()));
    case ETerm::Kind::Pair:
      return ETerm::pair(eshift(d, c, m.child0()), eshift(d, c, m.child1()));
    case ETerm::Kind::Fst:
      return ETerm::fst(eshift(d, c, m.child0()));
    case ETerm::Kind::Snd:
      return ETerm::snd(eshift(d, c, m.child0()));
    case ETerm::Kind::Inl:
      return ETerm::inl(m.ann(), eshift(d, c, m.child0()));
    case ETerm::Kind::Inr:
      return ETerm::inr(m.ann(), eshift(d, c, m.child0()));
    case ETerm::Kind::Case:
      // Each branch binds the injected payload at index 0.
      return ETerm::case_of(eshift(d, c, m.child0()), eshift(d, c + 1, m.child1()),
                            eshift(d, c + 1, m.child2()));
  }
  throw std::logic_error("unreachable");
}

ETerm esubst(std::size_t k, const ETerm& n, const ETerm& m) {
  switch (m.kind()) {
    case ETerm::Kind::Var: {
      std::size_t i = m.index();
      if (i < k) return m;
      if (i == k) return n;
      return ETerm::var(i - 1);
    }
    case ETerm::Kind::Lam:
      return ETerm::lam(m.ann(), esubst(k + 1, eshift(1, 0, n), m.child0()));
    case ETerm::Kind::App:
      return ETerm::app(esubst(k, n, m.child0()), esubst(k, n, m.child1()));
    case ETerm::Kind::Pair:
      return ETerm::pair(esubst(k, n, m.child0()), esubst(k, n, m.child1()));
    case ETerm::Kind::Fst:
      return ETerm::fst(esubst(k, n, m.child0()));
    case ETerm::Kind::Snd:
      return ETerm::snd(esubst(k, n, m.child0()));
    case ETerm::Kind::Inl:
      return ETerm::inl(m.ann(), esubst(k, n, m.child0()));
    case ETerm::Kind::Inr:
      return ETerm::inr(m.ann(), esubst(k, n, m.child0()));
    case ETerm::Kind::Case: {
      ETerm shifted = eshift(1, 0, n);
      return ETerm::case_of(esubst(k, n, m.child0()),
                            esubst(k + 1, shifted, m.child1()),
                            esubst(k + 1, shifted, m.child2()));
    }
  }
  throw std::logic_error("unreachable");
}

std::set<std::pair<StepRule, ETerm>> ext_reducts(const ETerm& m) {
  std::set<std::pair<StepRule, ETerm>> out;
  auto congruence = [&out](StepRule rule, const ETerm& sub, auto rebuild) {
    for (const auto& [inner_rule, reduct] : ext_reducts(sub)) {
      (void)inner_rule;
      out.emplace(rule, rebuild(reduct));
    }
  };

  switch (m.kind()) {
    case ETerm::Kind::Var:
      break;
    case ETerm::Kind::Lam:
      congruence(StepRule::Lam, m.child0(),
                 [&m](const ETerm& b) { return ETerm::lam(m.ann(), b); });
      break;
    case ETerm::Kind::App: {
      ETerm f = m.child0();
      ETerm a = m.child1();
      if (f.is_lam()) out.emplace(StepRule::Beta, esubst(0, a, f.child0()));
      congruence(StepRule::AppL, f, [&a](const ETerm& f2) { return ETerm::app(f2, a); });
      congruence(StepRule::AppR, a, [&f](const ETerm& a2) { return ETerm::app(f, a2); });
      break;
    }
    case ETerm::Kind::Pair: {
      ETerm l = m.child0();
      ETerm r = m.child1();
      congruence(StepRule::PairL, l, [&r](const ETerm& l2) { return ETerm::pair(l2, r); });
      congruence(StepRule::PairR, r, [&l](const ETerm& r2) { return ETerm::pair(l, r2); });
      break;
    }
    case ETerm::Kind::Fst: {
      ETerm p = m.child0();
      if (p.is_pair()) out.emplace(StepRule::FstPair, p.child0());
      congruence(StepRule::Fst, p, [](const ETerm& p2) { return ETerm::fst(p2); });
      break;
    }
    case ETerm::Kind::Snd: {
      ETerm p = m.child0();
      if (p.is_pair()) out.emplace(StepRule::SndPair, p.child1());
      congruence(StepRule::Snd, p, [](const ETerm& p2) { return ETerm::snd(p2); });
      break;
    }
    case ETerm::Kind::Inl:
      congruence(StepRule::Inl, m.child0(),
                 [&m](const ETerm& p2) { return ETerm::inl(m.ann(), p2); });
      break;
    case ETerm::Kind::Inr:
      congruence(StepRule::Inr, m.child0(),
                 [&m](const ETerm& p2) { return ETerm::inr(m.ann(), p2); });
      break;
    case ETerm::Kind::Case: {
      ETerm s = m.child0();
      ETerm br1 = m.child1();
      ETerm br2 = m.child2();
      if (s.is_inl()) out.emplace(StepRule::CaseInl, esubst(0, s.child0(), br1));
      if (s.is_inr()) out.emplace(StepRule::CaseInr, esubst(0, s.child0(), br2));
      congruence(StepRule::CaseM, s,
                 [&](const ETerm& s2) { return ETerm::case_of(s2, br1, br2); });
      congruence(StepRule::CaseN1, br1,
                 [&](const ETerm& b2) { return ETerm::case_of(s, b2, br2); });
      congruence(StepRule::CaseN2, br2,
                 [&](const ETerm& b2) { return ETerm::case_of(s, br1, b2); });
      break;
    }
  }
  return out;
}

std::set<ETerm> ext_term_reducts(const ETerm& m) {
  std::set<ETerm> out;
  for (const auto& [rule, reduct] : ext_reducts(m)) out.insert(reduct);
  return out;
}

ars::Rel<ETerm> ext_rel() {
  return ars::Rel<ETerm>{"stlcext", [](const ETerm& m) {
                           std::set<ETerm> s = ext_term_reducts(m);
                           return std::vector<ETerm>(s.begin(), s.end());
                         }};
}

bool ext_is_normal_form(const ETerm& m) { return ext_reducts(m).empty(); }

std::optional<std::pair<StepRule, ETerm>> ext_step(const ETerm& m) {
  auto descend = [&m](StepRule rule, const ETerm& sub,
                      auto rebuild) -> std::optional<std::pair<StepRule, ETerm>> {
    if (auto inner = ext_step(sub)) return std::pair{rule, rebuild(inner->second)};
    return std::nullopt;
  };

  switch (m.kind()) {
    case ETerm::Kind::Var:
      return std::nullopt;
    case ETerm::Kind::Lam:
      return descend(StepRule::Lam, m.child0(),
                     [&m](const ETerm& b) { return ETerm::lam(m.ann(), b); });
    case ETerm::Kind::App: {
      ETerm f = m.child0();
      ETerm a = m.child1();
      if (f.is_lam()) return std::pair{StepRule::Beta, esubst(0, a, f.child0())};
      if (auto r = descend(StepRule::AppL, f,
                           [&a](const ETerm& f2) { return ETerm::app(f2, a); }))
        return r;
      return descend(StepRule::AppR, a,
                     [&f](const ETerm& a2) { return ETerm::app(f, a2); });
    }
    case ETerm::Kind::Pair: {
      ETerm l = m.child0();
      ETerm r = m.child1();
      if (auto s = descend(StepRule::PairL, l,
                           [&r](const ETerm& l2) { return ETerm::pair(l2, r); }))
        return s;
      return descend(StepRule::PairR, r,
                     [&l](const ETerm& r2) { return ETerm::pair(l, r2); });
    }
    case ETerm::Kind::Fst:
      if (m.child0().is_pair()) return std::pair{StepRule::FstPair, m.child0().child0()};
      return descend(StepRule::Fst, m.child0(),
                     [](const ETerm& p2) { return ETerm::fst(p2); });
    case ETerm::Kind::Snd:
      if (m.child0().is_pair()) return std::pair{StepRule::SndPair, m.child0().child1()};
      return descend(StepRule::Snd, m.child0(),
                     [](const ETerm& p2) { return ETerm::snd(p2); });
    case ETerm::Kind::Inl:
      return descend(StepRule::Inl, m.child0(),
                     [&m](const ETerm& p2) { return ETerm::inl(m.ann(), p2); });
    case ETerm::Kind::Inr:
      return descend(StepRule::Inr, m.child0(),
                     [&m](const ETerm& p2) { return ETerm::inr(m.ann(), p2); });
    case ETerm::Kind::Case: {
      ETerm s = m.child0();
      ETerm br1 = m.child1();
      ETerm br2 = m.child2();
      if (s.is_inl()) return std::pair{StepRule::CaseInl, esubst(0, s.child0(), br1)};
      if (s.is_inr()) return std::pair{StepRule::CaseInr, esubst(0, s.child0(), br2)};
      if (auto r = descend(StepRule::CaseM, s, [&](const ETerm& s2) {
            return ETerm::case_of(s2, br1, br2);
          }))
        return r;
      if (auto r = descend(StepRule::CaseN1, br1, [&](const ETerm& b2) {
            return ETerm::case_of(s, b2, br2);
          }))
        return r;
      return descend(StepRule::CaseN2, br2,
                     [&](const ETerm& b2) { return ETerm::case_of(s, br1, b2); });
    }
  }
  throw std::logic_error("unreachable");
}

InferResult ext_infer(const Context& ctx, const ETerm& m) {
  switch (m.kind()) {
    case ETerm::Kind::Var: {
      auto ty = ctx.lookup(m.index());
      if (!ty)
        return TypeError{TypeError::Kind::UnboundVariable,
                         "variable " + std::to_string(m.index()) +
                             " exceeds context of length " + std::to_string(ctx.size())};
      return *ty;
    }
    case ETerm::Kind::Lam: {
      InferResult body = ext_infer(ctx.extended(m.ann()), m.child0());
      if (!ok(body)) return body;
      return ETy::arr(m.ann(), type_of(body));
    }
    case ETerm::Kind::App: {
      InferResult fun = ext_infer(ctx, m.child0());
      if (!ok(fun)) return fun;
      InferResult arg = ext_infer(ctx, m.child1());
      if (!ok(arg)) return arg;
      if (!type_of(fun).is_arr())
        return TypeError{TypeError::Kind::NotAFunction, "application head is not an arrow"};
      if (!(type_of(fun).left() == type_of(arg)))
        return TypeError{TypeError::Kind::ArgMismatch,
                         "argument type does not match the arrow domain"};
      return type_of(fun).right();
    }
    case ETerm::Kind::Pair: {
      InferResult l = ext_infer(ctx, m.child0());
      if (!ok(l)) return l;
      InferResult r = ext_infer(ctx, m.child1());
      if (!ok(r)) return r;
      return ETy::prod(type_of(l), type_of(r));
    }
    case ETerm::Kind::Fst: {
      InferResult p = ext_infer(ctx, m.child0());
      if (!ok(p)) return p;
      if (!type_of(p).is_prod())
        return TypeError{TypeError::Kind::NotAProduct, "fst of a non-product"};
      return type_of(p).left();
    }
    case ETerm::Kind::Snd: {
      InferResult p = ext_infer(ctx, m.child0());
      if (!ok(p)) return p;
      if (!type_of(p).is_prod())
        return TypeError{TypeError::Kind::NotAProduct, "snd of a non-product"};
      return type_of(p).right();
    }
    case ETerm::Kind::Inl: {
      if (!m.ann().is_sum())
        return TypeError{TypeError::Kind::BadInjectionAnnotation,
                         "inl annotation is not a sum type"};
      InferResult payload = ext_infer(ctx, m.child0());
      if (!ok(payload)) return payload;
      if (!(type_of(payload) == m.ann().left()))
        return TypeError{TypeError::Kind::BadInjectionAnnotation,
                         "inl payload does not match the left summand"};
      return m.ann();
    }
    case ETerm::Kind::Inr: {
      if (!m.ann().is_sum())
        return TypeError{TypeError::Kind::BadInjectionAnnotation,
                         "inr annotation is not a sum type"};
      InferResult payload = ext_infer(ctx, m.child0());
      if (!ok(payload)) return payload;
      if (!(type_of(payload) == m.ann().right()))
        return TypeError{TypeError::Kind::BadInjectionAnnotation,
                         "inr payload does not match the right summand"};
      return m.ann();
    }
    case ETerm::Kind::Case: {
      InferResult scrut = ext_infer(ctx, m.child0());
      if (!ok(scrut)) return scrut;
      if (!type_of(scrut).is_sum())
        return TypeError{TypeError::Kind::NotASum, "case scrutinee is not a sum"};
      InferResult br1 = ext_infer(ctx.extended(type_of(scrut).left()), m.child1());
      if (!ok(br1)) return br1;
      InferResult br2 = ext_infer(ctx.extended(type_of(scrut).right()), m.child2());
      if (!ok(br2)) return br2;
      if (!(type_of(br1) == type_of(br2)))
        return TypeError{TypeError::Kind::BranchTypeMismatch,
                         "case branches synthesize different types"};
      return type_of(br1);
    }
  }
  throw std::logic_error("unreachable");
}

bool is_value(const ETerm& m) {
  switch (m.kind()) {
    case ETerm::Kind::Lam:
      return true;
    case ETerm::Kind::Pair:
      return is_value(m.child0()) && is_value(m.child1());
    case ETerm::Kind::Inl:
    case ETerm::Kind::Inr:
      return is_value(m.child0());
    default:
      return false;
  }
}

bool is_neutral(const ETerm& m) {
  switch (m.kind()) {
    case ETerm::Kind::Var:
      return true;
    case ETerm::Kind::App:
      return !m.child0().is_lam();
    case ETerm::Kind::Fst:
    case ETerm::Kind::Snd:
      return !m.child0().is_pair();
    case ETerm::Kind::Case:
      return !m.child0().is_inl() && !m.child0().is_inr();
    default:
      return false;
  }
}

ProgressVerdict progress_check(const ETerm& m) {
  InferResult ty = ext_infer(Context{}, m);
  if (!ok(ty))
    return ProgressVerdict{ProgressVerdict::Kind::IllTyped, std::nullopt, error_of(ty)};
  if (is_value(m))
    return ProgressVerdict{ProgressVerdict::Kind::IsValue, std::nullopt, std::nullopt};
  auto reducts = ext_reducts(m);
  if (!reducts.empty())
    return ProgressVerdict{ProgressVerdict::Kind::Steps, reducts.begin()->first,
                           std::nullopt};
  return ProgressVerdict{ProgressVerdict::Kind::Violation, std::nullopt, std::nullopt};
}

SubjectReductionReport ext_subject_reduction_check(const Context& ctx, const ETerm& m,
                                                   std::size_t depth) {
  SubjectReductionReport report;
  InferResult root = ext_infer(ctx, m);
  if (!ok(root)) {
    report.precondition_ok = false;
    report.precondition_error = error_of(root);
    return report;
  }
  report.precondition_ok = true;
  const ETy expected = type_of(root);

  std::set<ETerm> seen{m};
  std::vector<ETerm> frontier{m};
  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<ETerm> next;
    for (const ETerm& t : frontier) {
      for (const ETerm& r : ext_term_reducts(t)) {
        if (!seen.insert(r).second) continue;
        ++report.reducts_checked;
        InferResult it = ext_infer(ctx, r);
        if (!ok(it) || !(type_of(it) == expected)) report.violations.push_back(r);
        next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  return report;
}

SnVerdict ext_sn_certificate(const ETerm& m, std::size_t node_cap) {
  auto graph = ars::star_reachable(ext_rel(), m, node_cap);
  std::vector<ETerm> cycle = ars::find_cycle(graph);
  if (!cycle.empty())
    return SnVerdict{SnVerdict::Kind::CycleFound, std::move(graph), std::move(cycle)};
  if (!graph.complete)
    return SnVerdict{SnVerdict::Kind::CapExhausted, std::move(graph), {}};
  return SnVerdict{SnVerdict::Kind::Sn, std::move(graph), {}};
}

}  // namespace rewritekit::stlcext
