// test_ski.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#include <doctest.h>

#include "rewritekit/ski.hpp"
#include "rewritekit/testkit.hpp"

using namespace rewritekit;
using ski::CTerm;

namespace {

CTerm s() { return CTerm::s(); }
CTerm k() { return CTerm::k(); }
CTerm ap(CTerm f, CTerm a) { return CTerm::app(std::move(f), std::move(a)); }
CTerm ap3(CTerm a, CTerm b, CTerm c) { return ap(ap(a, b), c); }
CTerm ap4(CTerm a, CTerm b, CTerm c, CTerm d) { return ap(ap3(a, b, c), d); }

}  // namespace

TEST_CASE("single-step contractions") {
  CHECK(ski::ski_reducts(ap3(k(), s(), k())) == std::set<CTerm>{s()});
  CHECK(ski::ski_reducts(k()).empty());
  CHECK(ski::ski_reducts(ap4(s(), k(), k(), k())) ==
        std::set<CTerm>{ap(ap(k(), k()), ap(k(), k()))});
}

TEST_CASE("parallel reducts") {
  CHECK(ski::ski_parallel_reducts(s()) == std::set<CTerm>{s()});
  CTerm ksk = ap3(k(), s(), k());
  CHECK(ski::ski_parallel_reducts(ksk) == std::set<CTerm>{ksk, s()});
  for (const CTerm& m : testkit::enum_ski_terms(6))
    CHECK(ski::ski_parallel_reducts(m).count(m) == 1);
}

TEST_CASE("complete development") {
  CHECK(ski::ski_complete(k()) == k());
  CHECK(ski::ski_complete(ap3(k(), s(), k())) == s());
  CTerm ksk = ap3(k(), s(), k());
  CHECK(ski::ski_complete(ap(ksk, ksk)) == ap(s(), s()));
}

TEST_CASE("takahashi property, exhaustive to size 7") {
  for (const CTerm& m : testkit::enum_ski_terms(7)) {
    auto report = ski::ski_takahashi_check(m);
    CHECK(report.ok());
  }
}

TEST_CASE("single steps are parallel steps") {
  for (const CTerm& m : testkit::enum_ski_terms(7)) {
    auto par = ski::ski_parallel_reducts(m);
    for (const CTerm& r : ski::ski_reducts(m)) CHECK(par.count(r) == 1);
  }
}

TEST_CASE("newman verdicts on terminating corpus members") {
  for (const CTerm& m : testkit::enum_ski_terms(6)) {
    auto verdict = ars::newman_verify(ski::ski_rel(), m, 5000);
    if (verdict.exploration_complete && verdict.terminating == ars::Tribool::True) {
      CHECK(verdict.locally_confluent);
      CHECK(verdict.unique_nf);
    }
  }
}

TEST_CASE("labeled step picks the leftmost-outermost redex") {
  auto step = ski::ski_step(ap3(k(), s(), k()));
  REQUIRE(step);
  CHECK(step->first == "K");
  CHECK(step->second == s());

  CHECK(!ski::ski_step(ap(s(), k())));
}
