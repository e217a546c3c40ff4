// testkit.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#include "rewritekit/testkit.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rewritekit::testkit {

using lambda::Term;
using rewrite::Expr;
using ski::CTerm;
using stlc::TTerm;
using stlc::Ty;
using stlcext::ETerm;
using stlcext::ETy;

// -- random generators ---------------------------------------------------

namespace {

Term gen_term_rec(Rng& rng, const GenConfig& cfg, std::size_t budget, std::size_t depth) {
  std::size_t bound = depth + cfg.max_free_index;
  if (budget <= 1 || bound == 0) {
    if (bound == 0) return Term::lam(Term::var(0));
    return Term::var(rng.index(bound));
  }
  std::uint64_t pick = rng.below(budget >= 3 ? 6 : 3);
  if (pick == 0) return Term::var(rng.index(bound));
  if (pick <= 2) return Term::lam(gen_term_rec(rng, cfg, budget - 1, depth + 1));
  std::size_t left = 1 + rng.index(budget - 2);
  return Term::app(gen_term_rec(rng, cfg, left, depth),
                   gen_term_rec(rng, cfg, budget - 1 - left, depth));
}

}  // namespace

Term gen_term(Rng& rng, const GenConfig& cfg) {
  if (cfg.max_size < 1) throw std::invalid_argument("gen_term: max_size must be >= 1");
  return gen_term_rec(rng, cfg, 1 + rng.index(cfg.max_size), 0);
}

namespace {

CTerm gen_ski_rec(Rng& rng, std::size_t budget) {
  if (budget < 3 || rng.below(4) == 0)
    return rng.below(2) == 0 ? CTerm::s() : CTerm::k();
  std::size_t left = 1 + rng.index(budget - 2);
  return CTerm::app(gen_ski_rec(rng, left), gen_ski_rec(rng, budget - 1 - left));
}

Expr gen_expr_rec(Rng& rng, std::size_t budget) {
  if (budget < 3 || rng.below(4) == 0)
    return rng.below(2) == 0 ? Expr::zero() : Expr::one();
  std::size_t left = 1 + rng.index(budget - 2);
  Expr l = gen_expr_rec(rng, left);
  Expr r = gen_expr_rec(rng, budget - 1 - left);
  return rng.below(2) == 0 ? Expr::add(l, r) : Expr::mul(l, r);
}

}  // namespace

CTerm gen_ski(Rng& rng, const GenConfig& cfg) {
  return gen_ski_rec(rng, 1 + rng.index(cfg.max_size));
}

Expr gen_expr(Rng& rng, const GenConfig& cfg) {
  return gen_expr_rec(rng, 1 + rng.index(cfg.max_size));
}

Ty gen_ty(Rng& rng, std::size_t depth) {
  if (depth == 0 || rng.below(2) == 0) return Ty::base(rng.index(2));
  return Ty::arr(gen_ty(rng, depth - 1), gen_ty(rng, depth - 1));
}

ETy gen_ety(Rng& rng, std::size_t depth) {
  if (depth == 0 || rng.below(3) == 0) return ETy::base(rng.index(2));
  switch (rng.below(3)) {
    case 0: return ETy::arr(gen_ety(rng, depth - 1), gen_ety(rng, depth - 1));
    case 1: return ETy::prod(gen_ety(rng, depth - 1), gen_ety(rng, depth - 1));
    default: return ETy::sum(gen_ety(rng, depth - 1), gen_ety(rng, depth - 1));
  }
}

namespace {

TTerm gen_tterm_rec(Rng& rng, const GenConfig& cfg, std::size_t budget, std::size_t depth) {
  std::size_t bound = depth + cfg.max_free_index;
  if (budget <= 1 || bound == 0) {
    if (bound == 0) return TTerm::lam(gen_ty(rng, 1), TTerm::var(0));
    return TTerm::var(rng.index(bound));
  }
  std::uint64_t pick = rng.below(budget >= 3 ? 6 : 3);
  if (pick == 0) return TTerm::var(rng.index(bound));
  if (pick <= 2)
    return TTerm::lam(gen_ty(rng, cfg.type_depth),
                      gen_tterm_rec(rng, cfg, budget - 1, depth + 1));
  std::size_t left = 1 + rng.index(budget - 2);
  return TTerm::app(gen_tterm_rec(rng, cfg, left, depth),
                    gen_tterm_rec(rng, cfg, budget - 1 - left, depth));
}

ETerm gen_eterm_rec(Rng& rng, const GenConfig& cfg, std::size_t budget, std::size_t depth) {
  std::size_t bound = depth + cfg.max_free_index;
  if (budget <= 1 || bound == 0) {
    if (bound == 0) return ETerm::lam(gen_ety(rng, 1), ETerm::var(0));
    return ETerm::var(rng.index(bound));
  }
  switch (rng.below(budget >= 4 ? 9 : (budget >= 3 ? 8 : 6))) {
    case 0:
      return ETerm::var(rng.index(bound));
    case 1:
      return ETerm::lam(gen_ety(rng, cfg.type_depth),
                        gen_eterm_rec(rng, cfg, budget - 1, depth + 1));
    case 2:
      return ETerm::fst(gen_eterm_rec(rng, cfg, budget - 1, depth));
    case 3:
      return ETerm::snd(gen_eterm_rec(rng, cfg, budget - 1, depth));
    case 4:
      return ETerm::inl(gen_ety(rng, cfg.type_depth),
                        gen_eterm_rec(rng, cfg, budget - 1, depth));
    case 5:
      return ETerm::inr(gen_ety(rng, cfg.type_depth),
                        gen_eterm_rec(rng, cfg, budget - 1, depth));
    case 6:
    case 7: {
      std::size_t left = 1 + rng.index(budget - 2);
      ETerm l = gen_eterm_rec(rng, cfg, left, depth);
      ETerm r = gen_eterm_rec(rng, cfg, budget - 1 - left, depth);
      return rng.below(2) == 0 ? ETerm::app(l, r) : ETerm::pair(l, r);
    }
    default: {
      std::size_t s = 1 + rng.index(budget - 3);
      std::size_t b1 = 1 + rng.index(budget - 2 - s);
      std::size_t b2 = budget - 1 - s - b1;
      return ETerm::case_of(gen_eterm_rec(rng, cfg, s, depth),
                            gen_eterm_rec(rng, cfg, b1, depth + 1),
                            gen_eterm_rec(rng, cfg, b2, depth + 1));
    }
  }
}

}  // namespace

TTerm gen_tterm_raw(Rng& rng, const GenConfig& cfg) {
  return gen_tterm_rec(rng, cfg, 1 + rng.index(cfg.max_size), 0);
}

ETerm gen_eterm_raw(Rng& rng, const GenConfig& cfg) {
  return gen_eterm_rec(rng, cfg, 1 + rng.index(cfg.max_size), 0);
}

// -- rule-directed typed generation -------------------------------------------

namespace {

// Types guaranteed closed-inhabited: identities for arrows, componentwise
// for products, one witnessed side for sums.
Ty closed_inhabited_ty(Rng& rng, std::size_t depth) {
  if (depth == 0) {
    Ty b = Ty::base(rng.index(2));
    return Ty::arr(b, b);
  }
  if (rng.below(2) == 0) {
    Ty x = gen_ty(rng, depth - 1);
    return Ty::arr(x, x);
  }
  return Ty::arr(gen_ty(rng, depth - 1), closed_inhabited_ty(rng, depth - 1));
}

ETy closed_inhabited_ety(Rng& rng, std::size_t depth) {
  if (depth == 0) {
    ETy b = ETy::base(rng.index(2));
    return ETy::arr(b, b);
  }
  switch (rng.below(5)) {
    case 0: {
      ETy x = gen_ety(rng, depth - 1);
      return ETy::arr(x, x);
    }
    case 1:
      return ETy::arr(gen_ety(rng, depth - 1), closed_inhabited_ety(rng, depth - 1));
    case 2:
      return ETy::prod(closed_inhabited_ety(rng, depth - 1),
                       closed_inhabited_ety(rng, depth - 1));
    case 3:
      return ETy::sum(closed_inhabited_ety(rng, depth - 1), gen_ety(rng, depth - 1));
    default:
      return ETy::sum(gen_ety(rng, depth - 1), closed_inhabited_ety(rng, depth - 1));
  }
}

constexpr std::size_t kNodeAttempts = 200;  // backtracking budget per premise

std::optional<TTerm> gen_typed_rec(Rng& rng, const GenConfig& cfg,
                                   const stlc::Context& ctx, const Ty& target,
                                   std::size_t budget, std::size_t& fuel) {
  std::vector<std::size_t> var_hits;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (*ctx.lookup(i) == target) var_hits.push_back(i);

  for (std::size_t attempt = 0; attempt < kNodeAttempts; ++attempt) {
    if (fuel == 0) return std::nullopt;
    --fuel;

    // Weighted move list, rebuilt cheaply per attempt.
    enum { MoveVar, MoveLam, MoveApp };
    std::vector<int> moves;
    if (!var_hits.empty()) moves.insert(moves.end(), 3, MoveVar);
    if (target.is_arr() && budget >= 2) moves.insert(moves.end(), 3, MoveLam);
    if (budget >= 3) moves.push_back(MoveApp);
    if (moves.empty()) return std::nullopt;

    switch (moves[rng.index(moves.size())]) {
      case MoveVar:
        return TTerm::var(var_hits[rng.index(var_hits.size())]);
      case MoveLam: {
        auto body =
            gen_typed_rec(rng, cfg, ctx.extended(target.dom()), target.cod(),
                          budget - 1, fuel);
        if (!body) continue;
        return TTerm::lam(target.dom(), *body);
      }
      case MoveApp: {
        Ty arg_ty = gen_ty(rng, rng.index(cfg.type_depth + 1));
        std::size_t arg_budget = 1 + rng.index(budget - 2);
        std::size_t fun_budget = budget - 1 - arg_budget;
        auto fun = gen_typed_rec(rng, cfg, ctx, Ty::arr(arg_ty, target), fun_budget, fuel);
        if (!fun) continue;
        auto arg = gen_typed_rec(rng, cfg, ctx, arg_ty, arg_budget, fuel);
        if (!arg) continue;
        return TTerm::app(*fun, *arg);
      }
    }
  }
  return std::nullopt;
}

std::optional<ETerm> gen_typed_ext_rec(Rng& rng, const GenConfig& cfg,
                                       const stlcext::Context& ctx, const ETy& target,
                                       std::size_t budget, std::size_t& fuel) {
  std::vector<std::size_t> var_hits;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (*ctx.lookup(i) == target) var_hits.push_back(i);

  for (std::size_t attempt = 0; attempt < kNodeAttempts; ++attempt) {
    if (fuel == 0) return std::nullopt;
    --fuel;

    enum { MoveVar, MoveLam, MovePair, MoveInl, MoveInr, MoveApp, MoveFst, MoveSnd, MoveCase };
    std::vector<int> moves;
    if (!var_hits.empty()) moves.insert(moves.end(), 3, MoveVar);
    if (target.is_arr() && budget >= 2) moves.insert(moves.end(), 3, MoveLam);
    if (target.is_prod() && budget >= 3) moves.insert(moves.end(), 3, MovePair);
    if (target.is_sum() && budget >= 2) {
      moves.insert(moves.end(), 2, MoveInl);
      moves.insert(moves.end(), 2, MoveInr);
    }
    if (budget >= 3) {
      moves.push_back(MoveApp);
      moves.push_back(MoveFst);
      moves.push_back(MoveSnd);
    }
    if (budget >= 4) moves.push_back(MoveCase);
    if (moves.empty()) return std::nullopt;

    switch (moves[rng.index(moves.size())]) {
      case MoveVar:
        return ETerm::var(var_hits[rng.index(var_hits.size())]);
      case MoveLam: {
        auto body = gen_typed_ext_rec(rng, cfg, ctx.extended(target.left()),
                                      target.right(), budget - 1, fuel);
        if (!body) continue;
        return ETerm::lam(target.left(), *body);
      }
      case MovePair: {
        std::size_t lb = 1 + rng.index(budget - 2);
        auto l = gen_typed_ext_rec(rng, cfg, ctx, target.left(), lb, fuel);
        if (!l) continue;
        auto r = gen_typed_ext_rec(rng, cfg, ctx, target.right(), budget - 1 - lb, fuel);
        if (!r) continue;
        return ETerm::pair(*l, *r);
      }
      case MoveInl: {
        auto payload = gen_typed_ext_rec(rng, cfg, ctx, target.left(), budget - 1, fuel);
        if (!payload) continue;
        return ETerm::inl(target, *payload);
      }
      case MoveInr: {
        auto payload = gen_typed_ext_rec(rng, cfg, ctx, target.right(), budget - 1, fuel);
        if (!payload) continue;
        return ETerm::inr(target, *payload);
      }
      case MoveApp: {
        ETy arg_ty = gen_ety(rng, rng.index(cfg.type_depth + 1));
        std::size_t arg_budget = 1 + rng.index(budget - 2);
        std::size_t fun_budget = budget - 1 - arg_budget;
        auto fun = gen_typed_ext_rec(rng, cfg, ctx, ETy::arr(arg_ty, target),
                                     fun_budget, fuel);
        if (!fun) continue;
        auto arg = gen_typed_ext_rec(rng, cfg, ctx, arg_ty, arg_budget, fuel);
        if (!arg) continue;
        return ETerm::app(*fun, *arg);
      }
      case MoveFst: {
        ETy other = gen_ety(rng, rng.index(cfg.type_depth + 1));
        auto m = gen_typed_ext_rec(rng, cfg, ctx, ETy::prod(target, other),
                                   budget - 1, fuel);
        if (!m) continue;
        return ETerm::fst(*m);
      }
      case MoveSnd: {
        ETy other = gen_ety(rng, rng.index(cfg.type_depth + 1));
        auto m = gen_typed_ext_rec(rng, cfg, ctx, ETy::prod(other, target),
                                   budget - 1, fuel);
        if (!m) continue;
        return ETerm::snd(*m);
      }
      case MoveCase: {
        ETy a = gen_ety(rng, rng.index(cfg.type_depth + 1));
        ETy b = gen_ety(rng, rng.index(cfg.type_depth + 1));
        std::size_t sb = 1 + rng.index(budget - 3);
        std::size_t b1 = 1 + rng.index(budget - 2 - sb);
        std::size_t b2 = budget - 1 - sb - b1;
        auto scrut = gen_typed_ext_rec(rng, cfg, ctx, ETy::sum(a, b), sb, fuel);
        if (!scrut) continue;
        auto br1 = gen_typed_ext_rec(rng, cfg, ctx.extended(a), target, b1, fuel);
        if (!br1) continue;
        auto br2 = gen_typed_ext_rec(rng, cfg, ctx.extended(b), target, b2, fuel);
        if (!br2) continue;
        return ETerm::case_of(*scrut, *br1, *br2);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TTerm> gen_typed(Rng& rng, const GenConfig& cfg, const stlc::Context& ctx,
                               std::optional<Ty> target) {
  Ty goal = target ? *target : closed_inhabited_ty(rng, cfg.type_depth);
  std::size_t fuel = kNodeAttempts * (cfg.max_size + 1);
  auto term = gen_typed_rec(rng, cfg, ctx, goal, cfg.max_size, fuel);
  if (!term) return std::nullopt;
  stlc::InferResult checked = stlc::infer(ctx, *term);
  if (!stlc::ok(checked) || !(stlc::type_of(checked) == goal))
    throw std::logic_error("gen_typed: generated term failed to re-check");
  return term;
}

std::optional<ETerm> gen_typed_ext(Rng& rng, const GenConfig& cfg,
                                   const stlcext::Context& ctx,
                                   std::optional<ETy> target) {
  ETy goal = target ? *target : closed_inhabited_ety(rng, cfg.type_depth);
  std::size_t fuel = kNodeAttempts * (cfg.max_size + 1);
  auto term = gen_typed_ext_rec(rng, cfg, ctx, goal, cfg.max_size, fuel);
  if (!term) return std::nullopt;
  stlcext::InferResult checked = stlcext::ext_infer(ctx, *term);
  if (!stlcext::ok(checked) || !(stlcext::type_of(checked) == goal))
    throw std::logic_error("gen_typed_ext: generated term failed to re-check");
  return term;
}

// -- exhaustive enumerators ------------------------------------------------

namespace {

using TermMemo = std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>>;

const std::vector<Term>& enum_terms_exact(std::size_t size, std::size_t bound,
                                          TermMemo& memo) {
  auto key = std::make_pair(size, bound);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<Term> out;
  if (size == 1) {
    for (std::size_t i = 0; i < bound; ++i) out.push_back(Term::var(i));
  } else {
    for (const Term& body : enum_terms_exact(size - 1, bound + 1, memo))
      out.push_back(Term::lam(body));
    for (std::size_t left = 1; left + 1 < size; ++left) {
      const auto& funs = enum_terms_exact(left, bound, memo);
      const auto& args = enum_terms_exact(size - 1 - left, bound, memo);
      for (const Term& f : funs)
        for (const Term& a : args) out.push_back(Term::app(f, a));
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::vector<Term> enum_terms(std::size_t max_size, std::size_t free_bound) {
  TermMemo memo;
  std::vector<Term> out;
  for (std::size_t size = 1; size <= max_size; ++size)
    for (const Term& t : enum_terms_exact(size, free_bound, memo)) out.push_back(t);
  return out;
}

std::uint64_t count_terms_exact(std::size_t size, std::size_t free_bound) {
  if (size == 0) return 0;
  if (size == 1) return free_bound;
  std::uint64_t total = count_terms_exact(size - 1, free_bound + 1);
  for (std::size_t left = 1; left + 1 < size; ++left)
    total += count_terms_exact(left, free_bound) *
             count_terms_exact(size - 1 - left, free_bound);
  return total;
}

std::vector<CTerm> enum_ski_terms(std::size_t max_size) {
  std::map<std::size_t, std::vector<CTerm>> by_size;
  by_size[1] = {CTerm::s(), CTerm::k()};
  for (std::size_t size = 2; size <= max_size; ++size) {
    std::vector<CTerm> out;
    for (std::size_t left = 1; left + 1 < size; ++left) {
      auto fi = by_size.find(left);
      auto ai = by_size.find(size - 1 - left);
      if (fi == by_size.end() || ai == by_size.end()) continue;
      for (const CTerm& f : fi->second)
        for (const CTerm& a : ai->second) out.push_back(CTerm::app(f, a));
    }
    by_size[size] = std::move(out);
  }
  std::vector<CTerm> all;
  for (std::size_t size = 1; size <= max_size; ++size)
    for (const CTerm& t : by_size[size]) all.push_back(t);
  return all;
}

std::vector<Expr> enum_exprs(std::size_t max_size) {
  std::map<std::size_t, std::vector<Expr>> by_size;
  by_size[1] = {Expr::zero(), Expr::one()};
  for (std::size_t size = 2; size <= max_size; ++size) {
    std::vector<Expr> out;
    for (std::size_t left = 1; left + 1 < size; ++left) {
      for (const Expr& l : by_size[left]) {
        for (const Expr& r : by_size[size - 1 - left]) {
          out.push_back(Expr::add(l, r));
          out.push_back(Expr::mul(l, r));
        }
      }
    }
    by_size[size] = std::move(out);
  }
  std::vector<Expr> all;
  for (std::size_t size = 1; size <= max_size; ++size)
    for (const Expr& e : by_size[size]) all.push_back(e);
  return all;
}

std::vector<std::string> enum_ab_strings(std::size_t max_len) {
  std::vector<std::string> out{""};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      out.push_back(out[i] + "a");
      out.push_back(out[i] + "b");
    }
    layer_begin = layer_end;
  }
  return out;
}

namespace {

using ETermMemo = std::map<std::pair<std::size_t, std::size_t>, std::vector<ETerm>>;

const std::vector<ETerm>& enum_eterms_exact(std::size_t size, std::size_t bound,
                                            ETermMemo& memo) {
  auto key = std::make_pair(size, bound);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<ETerm> out;
  const ETy b0 = ETy::base(0);
  const ETy s00 = ETy::sum(ETy::base(0), ETy::base(0));
  if (size == 1) {
    for (std::size_t i = 0; i < bound; ++i) out.push_back(ETerm::var(i));
  } else {
    for (const ETerm& body : enum_eterms_exact(size - 1, bound + 1, memo))
      out.push_back(ETerm::lam(b0, body));
    for (const ETerm& m : enum_eterms_exact(size - 1, bound, memo)) {
      out.push_back(ETerm::fst(m));
      out.push_back(ETerm::snd(m));
      out.push_back(ETerm::inl(s00, m));
      out.push_back(ETerm::inr(s00, m));
    }
    for (std::size_t left = 1; left + 1 < size; ++left) {
      const auto& ls = enum_eterms_exact(left, bound, memo);
      const auto& rs = enum_eterms_exact(size - 1 - left, bound, memo);
      for (const ETerm& l : ls) {
        for (const ETerm& r : rs) {
          out.push_back(ETerm::app(l, r));
          out.push_back(ETerm::pair(l, r));
        }
      }
    }
    for (std::size_t s = 1; s + 2 < size; ++s) {
      for (std::size_t b1 = 1; s + b1 + 1 < size; ++b1) {
        std::size_t b2 = size - 1 - s - b1;
        const auto& scruts = enum_eterms_exact(s, bound, memo);
        const auto& brs1 = enum_eterms_exact(b1, bound + 1, memo);
        const auto& brs2 = enum_eterms_exact(b2, bound + 1, memo);
        for (const ETerm& sc : scruts)
          for (const ETerm& x : brs1)
            for (const ETerm& y : brs2) out.push_back(ETerm::case_of(sc, x, y));
      }
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::vector<ETerm> enum_eterms(std::size_t max_size, std::size_t free_bound) {
  ETermMemo memo;
  std::vector<ETerm> out;
  for (std::size_t size = 1; size <= max_size; ++size)
    for (const ETerm& t : enum_eterms_exact(size, free_bound, memo)) out.push_back(t);
  return out;
}

// -- oracles and fixed corpora ----------------------------------------------

std::string collapse_runs(const std::string& w) {
  std::string out;
  for (char c : w)
    if (out.empty() || out.back() != c) out.push_back(c);
  return out;
}

Term omega() {
  Term self_app = Term::lam(Term::app(Term::var(0), Term::var(0)));
  return Term::app(self_app, self_app);
}

TTerm annotated_omega() {
  Ty b0 = Ty::base(0);
  TTerm self_app = TTerm::lam(b0, TTerm::app(TTerm::var(0), TTerm::var(0)));
  return TTerm::app(self_app, self_app);
}

ETerm ext_annotated_omega() {
  ETy b0 = ETy::base(0);
  ETerm self_app = ETerm::lam(b0, ETerm::app(ETerm::var(0), ETerm::var(0)));
  return ETerm::app(self_app, self_app);
}

const std::vector<RuleRegression>& rule_regression_corpus() {
  using stlcext::StepRule;
  static const std::vector<RuleRegression> corpus = [] {
    const ETy b0 = ETy::base(0);
    const ETy f = ETy::arr(b0, b0);
    const ETy ff = ETy::arr(f, f);
    const ETy s = ETy::sum(f, f);
    const ETerm id0 = ETerm::lam(b0, ETerm::var(0));   // : f
    const ETerm id_f = ETerm::lam(f, ETerm::var(0));   // : ff
    const ETerm v0 = ETerm::var(0);
    const ETerm pp = ETerm::pair(ETerm::pair(id0, id0), ETerm::pair(id0, id0));

    std::vector<RuleRegression> out;
    out.push_back({StepRule::Beta, ETerm::app(id_f, id0)});
    out.push_back({StepRule::FstPair, ETerm::fst(ETerm::pair(id0, id0))});
    out.push_back({StepRule::SndPair, ETerm::snd(ETerm::pair(id0, id0))});
    out.push_back({StepRule::CaseInl, ETerm::case_of(ETerm::inl(s, id0), v0, v0)});
    out.push_back({StepRule::CaseInr, ETerm::case_of(ETerm::inr(s, id0), v0, v0)});
    out.push_back({StepRule::AppL,
                   ETerm::app(ETerm::fst(ETerm::pair(id_f, id_f)), id0)});
    out.push_back({StepRule::AppR,
                   ETerm::app(id_f, ETerm::fst(ETerm::pair(id0, id0)))});
    out.push_back({StepRule::Lam,
                   ETerm::lam(b0, ETerm::app(ETerm::lam(b0, v0), v0))});
    out.push_back({StepRule::PairL,
                   ETerm::pair(ETerm::fst(ETerm::pair(id0, id0)), id0)});
    out.push_back({StepRule::PairR,
                   ETerm::pair(id0, ETerm::fst(ETerm::pair(id0, id0)))});
    out.push_back({StepRule::Fst, ETerm::fst(ETerm::fst(pp))});
    out.push_back({StepRule::Snd, ETerm::snd(ETerm::fst(pp))});
    out.push_back({StepRule::Inl, ETerm::inl(s, ETerm::fst(ETerm::pair(id0, id0)))});
    out.push_back({StepRule::Inr, ETerm::inr(s, ETerm::fst(ETerm::pair(id0, id0)))});
    out.push_back({StepRule::CaseM,
                   ETerm::case_of(ETerm::fst(ETerm::pair(ETerm::inl(s, id0),
                                                         ETerm::inl(s, id0))),
                                  v0, v0)});
    out.push_back({StepRule::CaseN1,
                   ETerm::case_of(ETerm::inl(s, id0),
                                  ETerm::app(ETerm::lam(f, v0), v0), v0)});
    out.push_back({StepRule::CaseN2,
                   ETerm::case_of(ETerm::inr(s, id0), v0,
                                  ETerm::app(ETerm::lam(f, v0), v0))});
    return out;
  }();
  return corpus;
}

std::string SuiteReport::summary_line() const {
  std::ostringstream out;
  out << "suite=" << suite << " cases=" << cases << " failures=" << failures.size()
      << " seed=" << seed;
  return out.str();
}

}  // namespace rewritekit::testkit
