// suites.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.
//
// The executable property suites: each one turns a family of lemmas into
// bounded checks over random and small-exhaustive corpora.

#include <algorithm>
#include <array>
#include <functional>

#include "rewritekit/surface.hpp"
#include "rewritekit/testkit.hpp"

namespace rewritekit::testkit {

using lambda::Term;
using rewrite::Expr;
using ski::CTerm;
using stlc::TTerm;
using stlc::Ty;
using stlcext::ETerm;
using stlcext::ETy;

namespace {

constexpr std::size_t kGrid = 3;  // index/offset constants range over 0..2

// Greedy structural shrinking: repeatedly replace the term by an immediate
// subterm on which the predicate still fails.
Term shrink_failing(Term t, const std::function<bool(const Term&)>& fails) {
  for (;;) {
    std::vector<Term> subs;
    switch (t.kind()) {
      case Term::Kind::Var:
        break;
      case Term::Kind::App:
        subs = {t.fun(), t.arg()};
        break;
      case Term::Kind::Lam:
        subs = {t.body()};
        break;
    }
    bool shrunk = false;
    for (const Term& s : subs) {
      if (fails(s)) {
        t = s;
        shrunk = true;
        break;
      }
    }
    if (!shrunk) return t;
  }
}

struct DebruijnChecker {
  SubstFn subst_fn;
  const std::vector<Term>& pool;
  SuiteReport& report;

  // Returns the name of the first violated property, or empty.
  std::string first_violation(const Term& m) const {
    for (std::size_t c = 0; c < kGrid; ++c)
      if (!(lambda::shift(0, c, m) == m)) return "shift_zero";
    for (std::size_t d1 = 0; d1 < kGrid; ++d1)
      for (std::size_t d2 = 0; d2 < kGrid; ++d2)
        for (std::size_t c = 0; c < kGrid; ++c)
          if (!(lambda::shift(d1, c, lambda::shift(d2, c, m)) ==
                lambda::shift(d1 + d2, c, m)))
            return "shift_shift";
    for (std::size_t d1 = 0; d1 < kGrid; ++d1)
      for (std::size_t d2 = 0; d2 < kGrid; ++d2)
        for (std::size_t c1 = 0; c1 < kGrid; ++c1)
          for (std::size_t c2 = c1; c2 < kGrid; ++c2)
            if (!(lambda::shift(d1, c1, lambda::shift(d2, c2, m)) ==
                  lambda::shift(d2, c2 + d1, lambda::shift(d1, c1, m))))
              return "shift_shift_comm";
    for (std::size_t c = 0; c < kGrid; ++c)
      if (!(lambda::shift(1, c + 1, lambda::shift(1, c, m)) == lambda::shift(2, c, m)))
        return "shift_shift_succ";
    for (std::size_t k = 0; k < kGrid; ++k)
      for (const Term& n : pool)
        if (!(subst_fn(k, n, lambda::shift(1, k, m)) == m))
          return "subst_shift_cancel";
    // shift/subst interaction, split on the cutoff relative to the
    // substitution index (validated exhaustively before being frozen).
    for (std::size_t d = 0; d < kGrid; ++d) {
      for (std::size_t k = 0; k < kGrid; ++k) {
        for (const Term& n : pool) {
          for (std::size_t c = 0; c <= k; ++c)
            if (!(lambda::shift(d, c, subst_fn(k, n, m)) ==
                  subst_fn(k + d, lambda::shift(d, c, n), lambda::shift(d, c, m))))
              return "shift_subst_below";
          for (std::size_t c = k + 1; c < kGrid; ++c)
            if (!(lambda::shift(d, c, subst_fn(k, n, m)) ==
                  subst_fn(k, lambda::shift(d, c, n), lambda::shift(d, c + 1, m))))
              return "shift_subst_above";
        }
      }
    }
    for (const Term& n : pool)
      for (const Term& p : pool)
        if (!(subst_fn(0, p, subst_fn(0, n, m)) ==
              subst_fn(0, subst_fn(0, p, n),
                       subst_fn(1, lambda::shift(1, 0, p), m))))
          return "subst_subst";
    return {};
  }

  void check(std::size_t case_index, const Term& m) {
    std::string property = first_violation(m);
    if (property.empty()) return;
    Term minimized = shrink_failing(
        m, [this](const Term& t) { return !first_violation(t).empty(); });
    report.failures.push_back(
        {case_index, property, surface::print(minimized)});
  }
};

}  // namespace

SuiteReport run_debruijn_suite(const GenConfig& cfg, SubstFn subst_fn) {
  SuiteReport report{"debruijn", cfg.seed, 0, {}};
  const std::vector<Term> random_pool = enum_terms(3, 2);
  const std::vector<Term> exhaustive_pool = enum_terms(2, 2);

  Rng rng(cfg.seed);
  DebruijnChecker random_checker{subst_fn, random_pool, report};
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    Term m = gen_term(rng, cfg);
    random_checker.check(report.cases, m);
    ++report.cases;
  }

  std::size_t bound = cfg.exhaustive_size.value_or(8);
  if (bound > 0) {
    DebruijnChecker exhaustive_checker{subst_fn, exhaustive_pool, report};
    for (const Term& m : enum_terms(bound, 4)) {
      exhaustive_checker.check(report.cases, m);
      ++report.cases;
    }
  }
  return report;
}

SuiteReport run_takahashi_suite(const GenConfig& cfg) {
  SuiteReport report{"takahashi", cfg.seed, 0, {}};
  auto check = [&report](const Term& m) {
    lambda::TakahashiReport tk = lambda::takahashi_check(m);
    if (!tk.ok()) {
      Term minimized = shrink_failing(
          m, [](const Term& t) { return !lambda::takahashi_check(t).ok(); });
      report.failures.push_back(
          {report.cases, "takahashi", surface::print(minimized)});
    }
    ++report.cases;
  };

  Rng rng(cfg.seed);
  GenConfig narrowed = cfg;
  narrowed.max_free_index = 3;
  for (std::size_t i = 0; i < cfg.cases; ++i) check(gen_term(rng, narrowed));
  std::size_t bound = cfg.exhaustive_size.value_or(6);
  if (bound > 0)
    for (const Term& m : enum_terms(bound, 3)) check(m);
  return report;
}

SuiteReport run_diamond_suite(const GenConfig& cfg) {
  SuiteReport report{"diamond", cfg.seed, 0, {}};
  std::size_t lambda_bound = cfg.exhaustive_size.value_or(6);
  std::size_t ski_bound = cfg.exhaustive_size.value_or(7);

  // Parallel reduction closes its single-step peaks through the complete
  // development: star(a) is a parallel reduct of every parallel reduct, so
  // every peak (b, c) joins at star(a) in one step each.
  std::vector<Term> lambda_corpus = enum_terms(lambda_bound, 3);
  for (const Term& a : lambda_corpus) {
    Term star = lambda::complete_development(a);
    for (const Term& b : lambda::parallel_reducts(a)) {
      if (lambda::parallel_reducts(b).count(star) == 0)
        report.failures.push_back(
            {report.cases, "lambda-parallel-diamond",
             surface::print(a) + " via " + surface::print(b)});
    }
    ++report.cases;
  }

  std::vector<CTerm> ski_corpus = enum_ski_terms(ski_bound);
  for (const CTerm& a : ski_corpus) {
    CTerm star = ski::ski_complete(a);
    for (const CTerm& b : ski::ski_parallel_reducts(a)) {
      if (ski::ski_parallel_reducts(b).count(star) == 0)
        report.failures.push_back({report.cases, "ski-parallel-diamond",
                                   surface::print(a) + " via " + surface::print(b)});
    }
    ++report.cases;
  }

  // Single-step confluence checks through the generic machinery.
  auto beta_failures =
      ars::check_diamond(lambda::beta_rel(), lambda_corpus, ars::kDefaultDepthBound);
  for (const auto& peak : beta_failures.failures)
    report.failures.push_back({report.cases, "lambda-beta-local-confluence",
                               surface::print(peak.source)});
  report.cases += beta_failures.sources;

  auto ski_failures =
      ars::check_diamond(ski::ski_rel(), ski_corpus, ars::kDefaultDepthBound);
  for (const auto& peak : ski_failures.failures)
    report.failures.push_back(
        {report.cases, "ski-local-confluence", surface::print(peak.source)});
  report.cases += ski_failures.sources;
  return report;
}

SuiteReport run_newman_suite(const GenConfig& cfg) {
  SuiteReport report{"newman", cfg.seed, 0, {}};
  ars::Rel<std::string> srs = rewrite::srs_rel(rewrite::idempotency_rules());
  ars::Rel<Expr> trs = rewrite::expr_rel();

  std::size_t string_bound = cfg.exhaustive_size.value_or(10);
  for (const std::string& w : enum_ab_strings(string_bound)) {
    // Each step shortens the string by exactly one character.
    for (const std::string& r : rewrite::srs_reducts(w, rewrite::idempotency_rules()))
      if (r.size() + 1 != w.size())
        report.failures.push_back({report.cases, "srs-step-measure", w});
    auto verdict = ars::newman_verify(srs, w, ars::kDefaultNodeCap);
    if (!verdict.exploration_complete ||
        verdict.terminating != ars::Tribool::True || !verdict.locally_confluent ||
        !verdict.unique_nf)
      report.failures.push_back({report.cases, "srs-newman", w});
    std::string expected_nf = collapse_runs(w);
    if (verdict.normal_forms.size() != 1 ||
        *verdict.normal_forms.begin() != expected_nf)
      report.failures.push_back({report.cases, "srs-nf-oracle", w});
    ++report.cases;
  }

  std::size_t expr_bound = cfg.exhaustive_size.value_or(9);
  for (const Expr& e : enum_exprs(expr_bound)) {
    for (const Expr& r : rewrite::expr_reducts(e))
      if (r.size() >= e.size())
        report.failures.push_back({report.cases, "expr-step-measure", surface::print(e)});
    auto verdict = ars::newman_verify(trs, e, ars::kDefaultNodeCap);
    if (!verdict.exploration_complete ||
        verdict.terminating != ars::Tribool::True || !verdict.locally_confluent ||
        !verdict.unique_nf)
      report.failures.push_back({report.cases, "expr-newman", surface::print(e)});
    ++report.cases;
  }

  // Critical pairs of the idempotency system: exactly the two self-overlaps,
  // and every emitted pair joins within depth 4.
  auto pairs = rewrite::critical_pairs(rewrite::idempotency_rules());
  if (pairs.size() != 2 || pairs[0].source != "aaa" || pairs[1].source != "bbb")
    report.failures.push_back({report.cases, "critical-pair-inventory",
                               std::to_string(pairs.size()) + " pairs"});
  for (const auto& cp : pairs)
    if (!ars::joinable(srs, cp.left, cp.right, 4))
      report.failures.push_back({report.cases, "critical-pair-joinable", cp.source});
  ++report.cases;
  return report;
}

SuiteReport run_hindley_rosen_suite(const GenConfig& cfg) {
  SuiteReport report{"hindley-rosen", cfg.seed, 0, {}};
  ars::Rel<std::string> r = rewrite::srs_rel({rewrite::StrRule("aa", "a")});
  ars::Rel<std::string> s = rewrite::srs_rel({rewrite::StrRule("bb", "b")});
  ars::Rel<std::string> u = ars::union_rel(r, s);

  std::size_t bound = cfg.exhaustive_size.value_or(8);
  std::vector<std::string> corpus = enum_ab_strings(bound);
  std::size_t depth = bound + 2;

  auto expect_ok = [&report](const ars::PeakReport<std::string>& peaks,
                             const char* property) {
    for (const auto& peak : peaks.failures)
      report.failures.push_back({report.cases, property, peak.source});
  };
  expect_ok(ars::check_diamond(r, corpus, depth), "left-diamond");
  expect_ok(ars::check_diamond(s, corpus, depth), "right-diamond");
  expect_ok(ars::commute_check(r, s, corpus, depth), "commutation");
  expect_ok(ars::check_diamond(u, corpus, depth), "union-diamond");
  report.cases = corpus.size();
  return report;
}

namespace {

stlc::Context random_stlc_context(Rng& rng) {
  std::vector<Ty> types;
  std::size_t n = rng.index(3);
  for (std::size_t i = 0; i < n; ++i) types.push_back(gen_ty(rng, 1));
  return stlc::Context(std::move(types));
}

stlcext::Context random_ext_context(Rng& rng) {
  std::vector<ETy> types;
  std::size_t n = rng.index(3);
  for (std::size_t i = 0; i < n; ++i) types.push_back(gen_ety(rng, 1));
  return stlcext::Context(std::move(types));
}

}  // namespace

SuiteReport run_subject_reduction_suite(const GenConfig& cfg) {
  SuiteReport report{"subject-reduction", cfg.seed, 0, {}};
  GenConfig gen_cfg = cfg;
  gen_cfg.max_size = std::min<std::size_t>(cfg.max_size, 8);

  Rng rng(cfg.seed);
  std::size_t generated = 0;
  while (generated < cfg.cases) {
    stlc::Context ctx = random_stlc_context(rng);
    auto term = gen_typed(rng, gen_cfg, ctx, std::nullopt);
    if (!term) continue;
    ++generated;
    auto sr = stlc::subject_reduction_check(ctx, *term, 5);
    if (!sr.ok())
      report.failures.push_back(
          {report.cases, "stlc-subject-reduction", surface::print(*term)});
    ++report.cases;
  }

  generated = 0;
  while (generated < cfg.cases) {
    stlcext::Context ctx = random_ext_context(rng);
    auto term = gen_typed_ext(rng, gen_cfg, ctx, std::nullopt);
    if (!term) continue;
    ++generated;
    auto sr = stlcext::ext_subject_reduction_check(ctx, *term, 5);
    if (!sr.ok())
      report.failures.push_back(
          {report.cases, "stlcext-subject-reduction", surface::print(*term)});
    ++report.cases;
  }
  return report;
}

namespace {

template <typename Graph>
std::size_t sink_count(const Graph& g) {
  std::size_t n = 0;
  for (const auto& node : g.nodes)
    if (g.successors_of(node).empty()) ++n;
  return n;
}

}  // namespace

SuiteReport run_sn_suite(const GenConfig& cfg) {
  SuiteReport report{"sn", cfg.seed, 0, {}};
  GenConfig gen_cfg = cfg;
  gen_cfg.max_size = std::min<std::size_t>(cfg.max_size, 8);

  Rng rng(cfg.seed);
  std::size_t generated = 0;
  while (generated < cfg.cases) {
    auto term = gen_typed(rng, gen_cfg, stlc::Context{}, std::nullopt);
    if (!term) continue;
    ++generated;
    auto verdict = stlc::sn_certificate(*term, ars::kDefaultNodeCap);
    if (!verdict.is_sn())
      report.failures.push_back({report.cases, "stlc-sn", surface::print(*term)});
    else if (sink_count(verdict.graph) > 1)
      report.failures.push_back({report.cases, "stlc-unique-nf", surface::print(*term)});
    ++report.cases;
  }

  generated = 0;
  while (generated < cfg.cases) {
    auto term = gen_typed_ext(rng, gen_cfg, stlcext::Context{}, std::nullopt);
    if (!term) continue;
    ++generated;
    auto verdict = stlcext::ext_sn_certificate(*term, ars::kDefaultNodeCap);
    if (!verdict.is_sn())
      report.failures.push_back({report.cases, "stlcext-sn", surface::print(*term)});
    else if (sink_count(verdict.graph) > 1)
      report.failures.push_back(
          {report.cases, "stlcext-unique-nf", surface::print(*term)});
    ++report.cases;
  }

  // Control: the looping untyped term must be flagged, not certified.
  if (stlc::sn_certificate(annotated_omega(), ars::kDefaultNodeCap).kind !=
      stlc::SnVerdict::Kind::CycleFound)
    report.failures.push_back({report.cases, "omega-control", "stlc"});
  if (stlcext::ext_sn_certificate(ext_annotated_omega(), ars::kDefaultNodeCap).kind !=
      stlcext::SnVerdict::Kind::CycleFound)
    report.failures.push_back({report.cases, "omega-control", "stlcext"});
  ++report.cases;
  return report;
}

SuiteReport run_progress_suite(const GenConfig& cfg) {
  SuiteReport report{"progress", cfg.seed, 0, {}};
  GenConfig gen_cfg = cfg;
  gen_cfg.max_size = std::min<std::size_t>(cfg.max_size, 8);

  std::array<bool, 9> constructor_seen{};
  std::function<void(const ETerm&)> record = [&](const ETerm& t) {
    constructor_seen[static_cast<std::size_t>(t.kind())] = true;
    switch (t.kind()) {
      case ETerm::Kind::Var:
        break;
      case ETerm::Kind::Lam:
      case ETerm::Kind::Fst:
      case ETerm::Kind::Snd:
      case ETerm::Kind::Inl:
      case ETerm::Kind::Inr:
        record(t.child0());
        break;
      case ETerm::Kind::App:
      case ETerm::Kind::Pair:
        record(t.child0());
        record(t.child1());
        break;
      case ETerm::Kind::Case:
        record(t.child0());
        record(t.child1());
        record(t.child2());
        break;
    }
  };

  Rng rng(cfg.seed);
  std::size_t generated = 0;
  while (generated < cfg.cases) {
    auto term = gen_typed_ext(rng, gen_cfg, stlcext::Context{}, std::nullopt);
    if (!term) continue;
    ++generated;
    record(*term);

    auto verdict = stlcext::progress_check(*term);
    if (verdict.kind != stlcext::ProgressVerdict::Kind::IsValue &&
        verdict.kind != stlcext::ProgressVerdict::Kind::Steps)
      report.failures.push_back({report.cases, "progress", surface::print(*term)});

    // Closed well-typed normal forms must be values.
    ETerm cur = *term;
    bool reached_nf = false;
    for (std::size_t i = 0; i < 300; ++i) {
      auto next = stlcext::ext_step(cur);
      if (!next) {
        reached_nf = true;
        break;
      }
      cur = next->second;
    }
    if (!reached_nf)
      report.failures.push_back({report.cases, "normalization-fuel", surface::print(*term)});
    else if (!stlcext::is_value(cur))
      report.failures.push_back({report.cases, "nf-is-value", surface::print(cur)});
    ++report.cases;
  }

  if (cfg.cases >= 10000) {
    for (std::size_t i = 0; i < constructor_seen.size(); ++i)
      if (!constructor_seen[i])
        report.failures.push_back(
            {report.cases, "constructor-coverage", std::to_string(i)});
  }

  // One regression term per single-step rule, with the type preserved along
  // the labeled step.
  for (const RuleRegression& reg : rule_regression_corpus()) {
    auto ty = stlcext::ext_infer(stlcext::Context{}, reg.term);
    if (!stlcext::ok(ty)) {
      report.failures.push_back({report.cases, "regression-ill-typed",
                                 std::string(stlcext::step_rule_name(reg.rule))});
      ++report.cases;
      continue;
    }
    bool found = false;
    for (const auto& [rule, reduct] : stlcext::ext_reducts(reg.term)) {
      if (rule != reg.rule) continue;
      found = true;
      auto rt = stlcext::ext_infer(stlcext::Context{}, reduct);
      if (!stlcext::ok(rt) || !(stlcext::type_of(rt) == stlcext::type_of(ty)))
        report.failures.push_back({report.cases, "regression-preservation",
                                   std::string(stlcext::step_rule_name(reg.rule))});
    }
    if (!found)
      report.failures.push_back({report.cases, "regression-rule-missing",
                                 std::string(stlcext::step_rule_name(reg.rule))});
    ++report.cases;
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "debruijn",          "takahashi", "diamond", "newman",
      "hindley-rosen",     "subject-reduction", "sn", "progress"};
  return names;
}

std::optional<SuiteReport> run_suite(std::string_view name, const GenConfig& cfg) {
  if (name == "debruijn") return run_debruijn_suite(cfg, lambda::subst);
  if (name == "takahashi") return run_takahashi_suite(cfg);
  if (name == "diamond") return run_diamond_suite(cfg);
  if (name == "newman") return run_newman_suite(cfg);
  if (name == "hindley-rosen") return run_hindley_rosen_suite(cfg);
  if (name == "subject-reduction") return run_subject_reduction_suite(cfg);
  if (name == "sn") return run_sn_suite(cfg);
  if (name == "progress") return run_progress_suite(cfg);
  return std::nullopt;
}

}  // namespace rewritekit::testkit
