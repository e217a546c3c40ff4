// test_rewrite_systems.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#include <doctest.h>

#include <stdexcept>

#include "rewritekit/rewrite_systems.hpp"
#include "rewritekit/testkit.hpp"

using namespace rewritekit;
using rewrite::Expr;
using rewrite::StrRule;

TEST_CASE("expression reducts") {
  CHECK(rewrite::expr_reducts(Expr::zero()).empty());

  Expr start = Expr::add(Expr::mul(Expr::one(), Expr::zero()), Expr::zero());
  std::set<Expr> expected{Expr::add(Expr::zero(), Expr::zero()),
                          Expr::mul(Expr::one(), Expr::zero())};
  CHECK(rewrite::expr_reducts(start) == expected);

  auto verdict = ars::newman_verify(rewrite::expr_rel(), start, 1000);
  CHECK(verdict.normal_forms == std::set<Expr>{Expr::zero()});
  CHECK(verdict.unique_nf);
}

TEST_CASE("every expression rule strictly shrinks the term") {
  for (const Expr& e : testkit::enum_exprs(9))
    for (const Expr& r : rewrite::expr_reducts(e)) CHECK(r.size() < e.size());
}

TEST_CASE("expr_size and str_len") {
  CHECK(rewrite::expr_size(Expr::zero()) == 1);
  CHECK(rewrite::expr_size(Expr::add(Expr::zero(), Expr::one())) == 3);
  CHECK(rewrite::str_len("abab") == 4);
}

TEST_CASE("string reducts") {
  const auto& rules = rewrite::idempotency_rules();
  CHECK(rewrite::srs_reducts("aa", rules) == std::set<std::string>{"a"});
  CHECK(rewrite::srs_reducts("aaa", rules) == std::set<std::string>{"aa"});
  CHECK(rewrite::srs_reducts("ab", rules).empty());
  CHECK(rewrite::srs_reducts("", rules).empty());
  CHECK_THROWS_AS(rewrite::srs_reducts("abc", rules), std::invalid_argument);
}

TEST_CASE("each string step removes exactly one character") {
  const auto& rules = rewrite::idempotency_rules();
  for (const std::string& w : testkit::enum_ab_strings(7))
    for (const std::string& r : rewrite::srs_reducts(w, rules))
      CHECK(r.size() + 1 == w.size());
}

TEST_CASE("rule constructor enforces the invariants") {
  CHECK_THROWS_AS(StrRule("ab", "ab"), std::invalid_argument);   // not decreasing
  CHECK_THROWS_AS(StrRule("a", "ab"), std::invalid_argument);    // growing
  CHECK_THROWS_AS(StrRule("ac", "a"), std::invalid_argument);    // alphabet
  CHECK(StrRule("aba", "b").name() == "aba->b");
}

TEST_CASE("critical pairs of the idempotency rules are the two self-overlaps") {
  auto pairs = rewrite::critical_pairs(rewrite::idempotency_rules());
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].source == "aaa");
  CHECK(pairs[0].left == "aa");
  CHECK(pairs[0].right == "aa");
  CHECK(pairs[0].overlap_position == 1);
  CHECK(pairs[1].source == "bbb");
  CHECK(pairs[1].left == "bb");
  CHECK(pairs[1].right == "bb");
  CHECK(pairs[1].overlap_position == 1);
}

TEST_CASE("critical pairs include containments and cross-rule overlaps") {
  // aba contains b; ab/ba overlap both ways
  std::vector<StrRule> rules{StrRule("aba", "a"), StrRule("b", "")};
  auto pairs = rewrite::critical_pairs(rules);
  bool saw_containment = false;
  for (const auto& cp : pairs)
    if (cp.source == "aba" && cp.right == "aa" && cp.overlap_position == 1)
      saw_containment = true;
  CHECK(saw_containment);
}

TEST_CASE("every emitted critical pair is joinable within depth 4") {
  auto rel = rewrite::srs_rel(rewrite::idempotency_rules());
  for (const auto& cp : rewrite::critical_pairs(rewrite::idempotency_rules())) {
    auto witness = ars::joinable(rel, cp.left, cp.right, 4);
    CHECK(witness.has_value());
  }
}

TEST_CASE("normal forms match the run-collapse oracle") {
  auto rel = rewrite::srs_rel(rewrite::idempotency_rules());
  for (const std::string& w : testkit::enum_ab_strings(8)) {
    auto verdict = ars::newman_verify(rel, w, 5000);
    REQUIRE(verdict.exploration_complete);
    REQUIRE(verdict.normal_forms.size() == 1);
    CHECK(*verdict.normal_forms.begin() == testkit::collapse_runs(w));
  }
}

TEST_CASE("hindley-rosen ingredients on the exhaustive corpus") {
  auto r = rewrite::srs_rel({StrRule("aa", "a")});
  auto s = rewrite::srs_rel({StrRule("bb", "b")});
  auto corpus = testkit::enum_ab_strings(5);
  CHECK(ars::check_diamond(r, corpus, 8).ok());
  CHECK(ars::check_diamond(s, corpus, 8).ok());
  CHECK(ars::commute_check(r, s, corpus, 8).ok());
  CHECK(ars::check_diamond(ars::union_rel(r, s), corpus, 8).ok());
}
