// rewrite_systems.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#include "rewritekit/rewrite_systems.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace rewritekit::rewrite {

Expr Expr::zero() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Zero;
  node->size = 1;
  return Expr(std::move(node));
}

Expr Expr::one() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::One;
  node->size = 1;
  return Expr(std::move(node));
}

Expr Expr::add(Expr l, Expr r) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Add;
  node->size = 1 + l.size() + r.size();
  node->left = std::move(l.node_);
  node->right = std::move(r.node_);
  return Expr(std::move(node));
}

Expr Expr::mul(Expr l, Expr r) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Mul;
  node->size = 1 + l.size() + r.size();
  node->left = std::move(l.node_);
  node->right = std::move(r.node_);
  return Expr(std::move(node));
}

Expr Expr::left() const {
  if (!node_->left) throw std::logic_error("Expr::left on leaf");
  return Expr(node_->left);
}

Expr Expr::right() const {
  if (!node_->right) throw std::logic_error("Expr::right on leaf");
  return Expr(node_->right);
}

int Expr::compare(const Node& a, const Node& b) {
  if (&a == &b) return 0;
  if (a.size != b.size) return a.size < b.size ? -1 : 1;
  if (a.kind != b.kind)
    return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  if (!a.left) return 0;
  int c = compare(*a.left, *b.left);
  if (c != 0) return c;
  return compare(*a.right, *b.right);
}

bool operator==(const Expr& a, const Expr& b) {
  return Expr::compare(*a.node_, *b.node_) == 0;
}

bool operator<(const Expr& a, const Expr& b) {
  return Expr::compare(*a.node_, *b.node_) < 0;
}

std::vector<std::pair<std::string, Expr>> expr_labeled_reducts(const Expr& e) {
  std::vector<std::pair<std::string, Expr>> out;
  if (e.is_zero() || e.is_one()) return out;

  Expr l = e.left();
  Expr r = e.right();
  if (e.is_add()) {
    if (l.is_zero()) out.emplace_back("add-zero-l", r);
    if (r.is_zero()) out.emplace_back("add-zero-r", l);
  } else {
    if (l.is_one()) out.emplace_back("mul-one-l", r);
    if (r.is_one()) out.emplace_back("mul-one-r", l);
    if (l.is_zero()) out.emplace_back("mul-zero-l", Expr::zero());
    if (r.is_zero()) out.emplace_back("mul-zero-r", Expr::zero());
  }
  for (const auto& [rule, l2] : expr_labeled_reducts(l))
    out.emplace_back(rule, e.is_add() ? Expr::add(l2, r) : Expr::mul(l2, r));
  for (const auto& [rule, r2] : expr_labeled_reducts(r))
    out.emplace_back(rule, e.is_add() ? Expr::add(l, r2) : Expr::mul(l, r2));

  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.second, x.first) < std::tie(y.second, y.first);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& x, const auto& y) {
                          return x.first == y.first && x.second == y.second;
                        }),
            out.end());
  return out;
}

std::set<Expr> expr_reducts(const Expr& e) {
  std::set<Expr> out;
  for (const auto& [rule, reduct] : expr_labeled_reducts(e)) out.insert(reduct);
  return out;
}

std::size_t expr_size(const Expr& e) { return e.size(); }

ars::Rel<Expr> expr_rel() {
  return ars::Rel<Expr>{"expr", [](const Expr& e) {
                          std::set<Expr> s = expr_reducts(e);
                          return std::vector<Expr>(s.begin(), s.end());
                        }};
}

bool is_ab_string(const std::string& w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == 'a' || c == 'b'; });
}

StrRule::StrRule(std::string lhs_in, std::string rhs_in)
    : lhs(std::move(lhs_in)), rhs(std::move(rhs_in)) {
  if (!is_ab_string(lhs) || !is_ab_string(rhs))
    throw std::invalid_argument("StrRule: sides must be over {a,b}");
  if (rhs.size() >= lhs.size())
    throw std::invalid_argument("StrRule: rule must be length-decreasing");
}

const std::vector<StrRule>& idempotency_rules() {
  static const std::vector<StrRule> rules{StrRule("aa", "a"), StrRule("bb", "b")};
  return rules;
}

std::vector<std::pair<std::string, std::string>> srs_labeled_reducts(
    const std::string& w, const std::vector<StrRule>& rules) {
  if (!is_ab_string(w))
    throw std::invalid_argument("srs_reducts: string has symbols outside {a,b}");
  std::vector<std::pair<std::string, std::string>> out;
  for (const StrRule& rule : rules) {
    if (rule.lhs.size() > w.size()) continue;
    for (std::size_t pos = 0; pos + rule.lhs.size() <= w.size(); ++pos) {
      if (w.compare(pos, rule.lhs.size(), rule.lhs) != 0) continue;
      std::string reduct = w;
      reduct.replace(pos, rule.lhs.size(), rule.rhs);
      out.emplace_back(rule.name(), std::move(reduct));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.second, x.first) < std::tie(y.second, y.first);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<std::string> srs_reducts(const std::string& w,
                                  const std::vector<StrRule>& rules) {
  std::set<std::string> out;
  for (auto& [rule, reduct] : srs_labeled_reducts(w, rules)) out.insert(reduct);
  return out;
}

std::size_t str_len(const std::string& w) { return w.size(); }

ars::Rel<std::string> srs_rel(std::vector<StrRule> rules) {
  std::string label = "srs{";
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (i) label += ", ";
    label += rules[i].name();
  }
  label += "}";
  return ars::Rel<std::string>{std::move(label),
                               [rules = std::move(rules)](const std::string& w) {
                                 std::set<std::string> s = srs_reducts(w, rules);
                                 return std::vector<std::string>(s.begin(), s.end());
                               }};
}

bool operator<(const CriticalPair& a, const CriticalPair& b) {
  return std::tie(a.source, a.overlap_position, a.left, a.right) <
         std::tie(b.source, b.overlap_position, b.left, b.right);
}

std::vector<CriticalPair> critical_pairs(const std::vector<StrRule>& rules) {
  std::set<CriticalPair> out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const std::string& l1 = rules[i].lhs;
      const std::string& l2 = rules[j].lhs;
      // Proper suffix/prefix overlaps: l2 starts inside l1 and extends past it.
      for (std::size_t pos = 1; pos < l1.size(); ++pos) {
        std::size_t olap = l1.size() - pos;
        if (olap >= l2.size()) continue;  // handled as containment below
        if (l1.compare(pos, olap, l2, 0, olap) != 0) continue;
        std::string source = l1 + l2.substr(olap);
        std::string left = rules[i].rhs + l2.substr(olap);
        std::string right = l1.substr(0, pos) + rules[j].rhs;
        out.insert({std::move(source), std::move(left), std::move(right), pos});
      }
      // Containment overlaps: l2 occurs fully inside l1.
      for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
        if (i == j && pos == 0 && l1.size() == l2.size()) continue;  // trivial
        if (l1.compare(pos, l2.size(), l2) != 0) continue;
        std::string right = l1;
        right.replace(pos, l2.size(), rules[j].rhs);
        out.insert({l1, rules[i].rhs, std::move(right), pos});
      }
    }
  }
  return std::vector<CriticalPair>(out.begin(), out.end());
}

}  // namespace rewritekit::rewrite
