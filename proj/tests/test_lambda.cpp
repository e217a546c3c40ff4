// test_lambda.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#include <doctest.h>

#include "rewritekit/lambda.hpp"
#include "rewritekit/surface.hpp"
#include "rewritekit/testkit.hpp"

using namespace rewritekit;
using lambda::Term;

namespace {

Term v(std::size_t n) { return Term::var(n); }
Term ap(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }
Term lm(Term b) { return Term::lam(std::move(b)); }

}  // namespace

TEST_CASE("shift basics") {
  CHECK(lambda::shift(1, 0, v(0)) == v(1));
  CHECK(lambda::shift(1, 0, lm(v(1))) == lm(v(2)));
  CHECK(lambda::shift(1, 0, lm(v(0))) == lm(v(0)));
  // shift by zero is the identity, here spot-checked, exhaustively in the suite
  Term m = ap(lm(v(0)), ap(v(2), lm(v(3))));
  for (std::size_t c = 0; c < 4; ++c) CHECK(lambda::shift(0, c, m) == m);
}

TEST_CASE("subst basics") {
  Term p = ap(v(4), v(5));
  CHECK(lambda::subst(0, p, v(0)) == p);
  CHECK(lambda::subst(0, p, v(3)) == v(2));
  CHECK(lambda::subst(0, p, lm(v(1))) == lm(lambda::shift(1, 0, p)));
}

TEST_CASE("beta reducts") {
  CHECK(lambda::beta_reducts(v(3)).empty());

  auto r = lambda::beta_reducts(ap(lm(lm(v(1))), v(5)));
  CHECK(r.size() == 1);
  CHECK(*r.begin() == lm(v(6)));

  Term om = testkit::omega();
  auto ro = lambda::beta_reducts(om);
  CHECK(ro.size() == 1);
  CHECK(*ro.begin() == om);
}

TEST_CASE("parallel reducts") {
  CHECK(lambda::parallel_reducts(v(7)) == std::set<Term>{v(7)});

  Term redex = ap(lm(v(0)), v(3));
  std::set<Term> expected{redex, v(3)};
  CHECK(lambda::parallel_reducts(redex) == expected);
}

TEST_CASE("parallel reduction is reflexive") {
  testkit::Rng rng(7);
  testkit::GenConfig cfg;
  cfg.max_size = 9;
  for (int i = 0; i < 300; ++i) {
    Term m = testkit::gen_term(rng, cfg);
    CHECK(lambda::parallel_reducts(m).count(m) == 1);
  }
}

TEST_CASE("complete development") {
  CHECK(lambda::complete_development(v(4)) == v(4));
  CHECK(lambda::complete_development(ap(lm(v(0)), ap(lm(v(0)), v(2)))) == v(2));
  CHECK(lambda::complete_development(ap(v(0), v(1))) == ap(v(0), v(1)));
}

TEST_CASE("takahashi spot checks") {
  CHECK(lambda::takahashi_check(v(0)).ok());
  Term m = ap(lm(v(0)), v(3));
  auto report = lambda::takahashi_check(m);
  CHECK(report.ok());
  CHECK(report.star == v(3));
}

TEST_CASE("single-step reducts are parallel reducts, and parallel reducts are beta-reachable") {
  // random corpus on top of the small exhaustive one used by the suites
  testkit::Rng rng(11);
  testkit::GenConfig cfg;
  cfg.max_size = 8;
  cfg.max_free_index = 3;
  std::vector<Term> corpus = testkit::enum_terms(5, 2);
  for (int i = 0; i < 120; ++i) corpus.push_back(testkit::gen_term(rng, cfg));

  for (const Term& m : corpus) {
    auto par = lambda::parallel_reducts(m);
    for (const Term& b : lambda::beta_reducts(m)) CHECK(par.count(b) == 1);

    // every parallel reduct is reachable within size(m) single beta steps
    std::set<Term> reached{m};
    std::vector<Term> frontier{m};
    for (std::size_t depth = 0; depth < m.size() && !frontier.empty(); ++depth) {
      std::vector<Term> next;
      for (const Term& t : frontier)
        for (const Term& r : lambda::beta_reducts(t))
          if (reached.insert(r).second) next.push_back(r);
      frontier = std::move(next);
    }
    for (const Term& n : par) CHECK(reached.count(n) == 1);
  }
}

TEST_CASE("normalize") {
  using lambda::Strategy;
  auto nf = lambda::normalize(lm(v(0)), Strategy::NormalOrder, 0);
  CHECK(nf.normal_form);
  CHECK(nf.term == lm(v(0)));

  auto k = lambda::normalize(ap(lm(lm(v(1))), v(5)), Strategy::NormalOrder, 10);
  CHECK(k.normal_form);
  CHECK(k.term == lm(v(6)));
  CHECK(k.steps == 1);

  auto om = lambda::normalize(testkit::omega(), Strategy::NormalOrder, 100);
  CHECK(!om.normal_form);
  CHECK(om.term == testkit::omega());
  CHECK(om.steps == 100);
}

TEST_CASE("strategies agree on normal forms") {
  using lambda::Strategy;
  for (const Term& m : testkit::enum_terms(6, 2)) {
    auto a = lambda::normalize(m, Strategy::NormalOrder, 60);
    auto b = lambda::normalize(m, Strategy::ApplicativeOrder, 60);
    if (a.normal_form && b.normal_form) CHECK(a.term == b.term);
    if (a.normal_form) CHECK(lambda::is_normal_form(a.term));
  }
}

TEST_CASE("normal order reaches a normal form whenever the graph is finite and acyclic") {
  for (const Term& m : testkit::enum_terms(6, 2)) {
    auto g = ars::star_reachable(lambda::beta_rel(), m, 5000);
    if (!g.complete || !ars::find_cycle(g).empty()) continue;
    auto out = lambda::normalize(m, lambda::Strategy::NormalOrder, 5000);
    CHECK(out.normal_form);
  }
}

TEST_CASE("beta confluence at desk scale: unique normal forms on terminating terms") {
  for (const Term& m : testkit::enum_terms(6, 2)) {
    auto verdict = ars::newman_verify(lambda::beta_rel(), m, 5000);
    if (verdict.exploration_complete && verdict.terminating == ars::Tribool::True) {
      CHECK(verdict.locally_confluent);
      CHECK(verdict.unique_nf);
    }
  }
}

TEST_CASE("the leaf-shifting subst variant applies a spurious shift at the hit leaf") {
  Term p = ap(v(0), v(1));
  Term shifted = lambda::shift(1, 0, p);
  CHECK(lambda::subst(1, shifted, v(1)) == shifted);
  CHECK(lambda::subst_leaf_shift(1, shifted, v(1)) == lambda::shift(1, 0, shifted));

  // The variants agree wherever no variable equals the substitution index,
  // which is why subst_shift_cancel cannot separate them; the composition
  // law through a crossed binder can.
  Term n = v(2);
  CHECK(lambda::subst(0, p, lambda::subst(0, n, v(1))) ==
        lambda::subst(0, lambda::subst(0, p, n),
                      lambda::subst(1, lambda::shift(1, 0, p), v(1))));
  CHECK(!(lambda::subst_leaf_shift(0, p, lambda::subst_leaf_shift(0, n, v(1))) ==
          lambda::subst_leaf_shift(0, lambda::subst_leaf_shift(0, p, n),
                                   lambda::subst_leaf_shift(1, lambda::shift(1, 0, p),
                                                            v(1)))));
}
