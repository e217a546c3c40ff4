// test_stlc.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#include <doctest.h>

#include "rewritekit/stlc.hpp"
#include "rewritekit/testkit.hpp"

using namespace rewritekit;
using stlc::Context;
using stlc::TTerm;
using stlc::Ty;

namespace {

const Ty b0 = Ty::base(0);
const Ty b1 = Ty::base(1);

TTerm id_of(const Ty& ty) { return TTerm::lam(ty, TTerm::var(0)); }

}  // namespace

TEST_CASE("type synthesis") {
  SUBCASE("identity") {
    auto r = stlc::infer(Context{}, id_of(b0));
    REQUIRE(stlc::ok(r));
    CHECK(stlc::type_of(r) == Ty::arr(b0, b0));
  }
  SUBCASE("argument mismatch") {
    TTerm bad = TTerm::app(id_of(b0), id_of(b1));
    auto r = stlc::infer(Context{}, bad);
    REQUIRE(!stlc::ok(r));
    CHECK(stlc::error_of(r).kind == stlc::TypeError::Kind::ArgMismatch);
  }
  SUBCASE("unbound variable") {
    auto r = stlc::infer(Context{{b0}}, TTerm::var(1));
    REQUIRE(!stlc::ok(r));
    CHECK(stlc::error_of(r).kind == stlc::TypeError::Kind::UnboundVariable);
  }
  SUBCASE("application head must be an arrow") {
    Context ctx{{b0, b1}};
    auto r = stlc::infer(ctx, TTerm::app(TTerm::var(0), TTerm::var(1)));
    REQUIRE(!stlc::ok(r));
    CHECK(stlc::error_of(r).kind == stlc::TypeError::Kind::NotAFunction);
  }
}

TEST_CASE("typed reduction mirrors untyped reduction after erasure") {
  testkit::Rng rng(5);
  testkit::GenConfig cfg;
  cfg.max_size = 9;
  for (int i = 0; i < 400; ++i) {
    TTerm m = testkit::gen_tterm_raw(rng, cfg);
    std::set<lambda::Term> erased_reducts;
    for (const TTerm& r : stlc::typed_step_reducts(m)) erased_reducts.insert(stlc::erase(r));
    CHECK(erased_reducts == lambda::beta_reducts(stlc::erase(m)));
  }
}

TEST_CASE("typed beta keeps annotations on untouched binders") {
  TTerm k = TTerm::lam(b0, TTerm::lam(b1, TTerm::var(1)));
  TTerm applied = TTerm::app(k, TTerm::var(5));
  auto reducts = stlc::typed_step_reducts(applied);
  REQUIRE(reducts.size() == 1);
  CHECK(*reducts.begin() == TTerm::lam(b1, TTerm::var(6)));
}

TEST_CASE("subject reduction on generated terms") {
  testkit::Rng rng(23);
  testkit::GenConfig cfg;
  cfg.max_size = 8;
  std::size_t generated = 0;
  while (generated < 300) {
    auto m = testkit::gen_typed(rng, cfg, Context{}, std::nullopt);
    if (!m) continue;
    ++generated;
    auto report = stlc::subject_reduction_check(Context{}, *m, 5);
    CHECK(report.ok());
  }
}

TEST_CASE("subject reduction propagates the precondition failure") {
  auto report = stlc::subject_reduction_check(Context{}, TTerm::var(0), 3);
  CHECK(!report.precondition_ok);
  REQUIRE(report.precondition_error.has_value());
  CHECK(report.precondition_error->kind == stlc::TypeError::Kind::UnboundVariable);
}

TEST_CASE("substitution lemma on generated pairs") {
  // If ctx |- n : A and A::ctx |- m : B then ctx |- m[n] : B.
  testkit::Rng rng(31);
  testkit::GenConfig cfg;
  cfg.max_size = 6;
  std::size_t checked = 0;
  while (checked < 200) {
    Ty a = testkit::gen_ty(rng, 1);
    Ty target = testkit::gen_ty(rng, 1);
    Context ctx;
    auto n = testkit::gen_typed(rng, cfg, ctx, a);
    if (!n) continue;
    auto m = testkit::gen_typed(rng, cfg, ctx.extended(a), target);
    if (!m) continue;
    ++checked;
    auto r = stlc::infer(ctx, stlc::tsubst(0, *n, *m));
    REQUIRE(stlc::ok(r));
    CHECK(stlc::type_of(r) == target);
  }
}

TEST_CASE("sn certificates") {
  SUBCASE("normal forms have singleton graphs") {
    auto verdict = stlc::sn_certificate(id_of(b0), 100);
    CHECK(verdict.is_sn());
    CHECK(verdict.graph.nodes.size() == 1);
  }
  SUBCASE("desk example is sn with a unique normal form") {
    TTerm m = TTerm::app(id_of(Ty::arr(b0, b0)), id_of(b0));
    auto verdict = stlc::sn_certificate(m, 100);
    CHECK(verdict.is_sn());
    std::size_t sinks = 0;
    for (const auto& n : verdict.graph.nodes)
      if (verdict.graph.successors_of(n).empty()) ++sinks;
    CHECK(sinks == 1);
  }
  SUBCASE("the looping control yields a cycle witness") {
    auto verdict = stlc::sn_certificate(testkit::annotated_omega(), 10);
    REQUIRE(verdict.kind == stlc::SnVerdict::Kind::CycleFound);
    REQUIRE(!verdict.cycle.empty());
    // replay the witness: consecutive entries step, and the last steps back
    for (std::size_t i = 0; i < verdict.cycle.size(); ++i) {
      const TTerm& from = verdict.cycle[i];
      const TTerm& to = verdict.cycle[(i + 1) % verdict.cycle.size()];
      CHECK(stlc::typed_step_reducts(from).count(to) == 1);
    }
  }
  SUBCASE("a tiny cap reports exhaustion on a large graph") {
    // nest redexes so the graph exceeds two nodes
    TTerm inner = TTerm::app(id_of(Ty::arr(b0, b0)), id_of(b0));
    TTerm outer = TTerm::app(TTerm::lam(Ty::arr(b0, b0), TTerm::var(0)), inner);
    auto verdict = stlc::sn_certificate(outer, 2);
    CHECK(verdict.kind == stlc::SnVerdict::Kind::CapExhausted);
  }
}

TEST_CASE("generated well-typed terms are sn with unique normal forms") {
  testkit::Rng rng(47);
  testkit::GenConfig cfg;
  cfg.max_size = 8;
  std::size_t generated = 0;
  while (generated < 300) {
    auto m = testkit::gen_typed(rng, cfg, Context{}, std::nullopt);
    if (!m) continue;
    ++generated;
    auto verdict = stlc::sn_certificate(*m, 10000);
    CHECK(verdict.is_sn());
    auto newman = ars::newman_verify(stlc::typed_beta_rel(), *m, 10000);
    CHECK(newman.unique_nf);
  }
}
