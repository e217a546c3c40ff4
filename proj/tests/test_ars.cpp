// test_ars.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#include <doctest.h>

#include <string>

#include "rewritekit/ars.hpp"
#include "rewritekit/lambda.hpp"
#include "rewritekit/rewrite_systems.hpp"
#include "rewritekit/testkit.hpp"

using namespace rewritekit;

namespace {

// Tiny explicit relation over single-letter states.
ars::Rel<std::string> table_rel(std::map<std::string, std::vector<std::string>> table) {
  return ars::Rel<std::string>{"table", [table](const std::string& s) {
                                 auto it = table.find(s);
                                 return it == table.end() ? std::vector<std::string>{}
                                                          : it->second;
                               }};
}

ars::Rel<std::string> idem_rel() { return rewrite::srs_rel(rewrite::idempotency_rules()); }

}  // namespace

TEST_CASE("star_reachable on an empty relation") {
  auto rel = table_rel({});
  auto g = ars::star_reachable(rel, std::string("a"), 100);
  CHECK(g.complete);
  CHECK(g.nodes == std::set<std::string>{"a"});
  CHECK(g.edge_count() == 0);
}

TEST_CASE("star_reachable on the idempotency system") {
  auto g = ars::star_reachable(idem_rel(), std::string("aabb"), 100);
  CHECK(g.complete);
  CHECK(g.nodes == std::set<std::string>{"aabb", "abb", "aab", "ab"});
  CHECK(g.has_edge("aabb", "abb"));
  CHECK(g.has_edge("aabb", "aab"));
  CHECK(g.has_edge("abb", "ab"));
  CHECK(g.has_edge("aab", "ab"));
  CHECK(g.edge_count() == 4);
}

TEST_CASE("star_reachable on the self-reproducing lambda term") {
  lambda::Term om = testkit::omega();
  auto g = ars::star_reachable(lambda::beta_rel(), om, 10);
  CHECK(g.complete);
  CHECK(g.nodes.size() == 1);
  CHECK(g.has_edge(om, om));
}

TEST_CASE("star soundness: edges step, nodes hang off the root") {
  auto g = ars::star_reachable(idem_rel(), std::string("aaabba"), 1000);
  REQUIRE(g.complete);
  for (const auto& [src, targets] : g.edges) {
    auto succ = rewrite::srs_reducts(src, rewrite::idempotency_rules());
    for (const std::string& dst : targets) {
      CHECK(succ.count(dst) == 1);
      CHECK(g.nodes.count(dst) == 1);
    }
  }
  // every node is reachable from the root within the graph
  std::set<std::string> seen{g.root};
  std::vector<std::string> frontier{g.root};
  while (!frontier.empty()) {
    std::string n = frontier.back();
    frontier.pop_back();
    for (const std::string& t : g.successors_of(n))
      if (seen.insert(t).second) frontier.push_back(t);
  }
  CHECK(seen == g.nodes);
}

TEST_CASE("node cap truncates and clears the completeness flag") {
  auto g = ars::star_reachable(idem_rel(), std::string("aaaaabbbbb"), 3);
  CHECK(!g.complete);
  CHECK(g.nodes.size() == 3);
}

TEST_CASE("joinable") {
  auto rel = idem_rel();
  SUBCASE("reflexive") {
    auto w = ars::joinable(rel, std::string("ab"), std::string("ab"), 4);
    REQUIRE(w);
    CHECK(w->meet == "ab");
    CHECK(w->left_path.empty());
    CHECK(w->right_path.empty());
  }
  SUBCASE("one step each") {
    auto w = ars::joinable(rel, std::string("abb"), std::string("aab"), 4);
    REQUIRE(w);
    CHECK(w->meet == "ab");
    CHECK(w->left_path == std::vector<std::string>{"ab"});
    CHECK(w->right_path == std::vector<std::string>{"ab"});
  }
  SUBCASE("distinct normal forms never join") {
    auto bad = table_rel({});
    CHECK(!ars::joinable(bad, std::string("x"), std::string("y"), 5));
  }
}

TEST_CASE("join witness validity: replaying both paths lands on the meet") {
  auto rel = idem_rel();
  for (const std::string& b : testkit::enum_ab_strings(5)) {
    for (const std::string& c : testkit::enum_ab_strings(4)) {
      auto w = ars::joinable(rel, b, c, 6);
      if (!w) continue;
      std::string cur = b;
      for (const std::string& nxt : w->left_path) {
        CHECK(rewrite::srs_reducts(cur, rewrite::idempotency_rules()).count(nxt) == 1);
        cur = nxt;
      }
      CHECK(cur == w->meet);
      cur = c;
      for (const std::string& nxt : w->right_path) {
        CHECK(rewrite::srs_reducts(cur, rewrite::idempotency_rules()).count(nxt) == 1);
        cur = nxt;
      }
      CHECK(cur == w->meet);
    }
  }
}

TEST_CASE("check_diamond") {
  SUBCASE("normal forms only") {
    auto rel = table_rel({});
    std::vector<std::string> corpus{"x", "y"};
    auto report = ars::check_diamond(rel, corpus, 4);
    CHECK(report.ok());
    CHECK(report.peaks_checked == 0);
  }
  SUBCASE("exhaustive strings up to length 5") {
    auto report = ars::check_diamond(idem_rel(), testkit::enum_ab_strings(5), 6);
    CHECK(report.ok());
    CHECK(report.peaks_checked > 0);
  }
  SUBCASE("two-point counterexample") {
    auto rel = table_rel({{"a", {"b", "c"}}});
    auto report = ars::check_diamond(rel, {"a"}, 4);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].source == "a");
    CHECK(report.failures[0].left == "b");
    CHECK(report.failures[0].right == "c");
  }
}

TEST_CASE("newman_verify") {
  SUBCASE("arithmetic start term") {
    using rewrite::Expr;
    Expr start = Expr::add(Expr::mul(Expr::one(), Expr::zero()), Expr::zero());
    auto verdict = ars::newman_verify(rewrite::expr_rel(), start, 1000);
    CHECK(verdict.exploration_complete);
    CHECK(verdict.terminating == ars::Tribool::True);
    CHECK(verdict.locally_confluent);
    CHECK(verdict.unique_nf);
    CHECK(verdict.normal_forms == std::set<Expr>{Expr::zero()});
  }
  SUBCASE("self-loop means non-termination") {
    auto verdict = ars::newman_verify(lambda::beta_rel(), testkit::omega(), 10);
    CHECK(verdict.exploration_complete);
    CHECK(verdict.terminating == ars::Tribool::False);
    CHECK(verdict.normal_forms.empty());
    CHECK(verdict.unique_nf);  // zero normal forms
  }
  SUBCASE("overlapping redexes still reach one normal form") {
    auto verdict = ars::newman_verify(idem_rel(), std::string("aaa"), 100);
    CHECK(verdict.exploration_complete);
    CHECK(verdict.terminating == ars::Tribool::True);
    CHECK(verdict.normal_forms == std::set<std::string>{"a"});
    CHECK(verdict.unique_nf);
  }
  SUBCASE("incomplete exploration reports unknown termination") {
    auto verdict = ars::newman_verify(idem_rel(), std::string("aaaaaabbbbbb"), 3);
    CHECK(!verdict.exploration_complete);
    CHECK(verdict.terminating == ars::Tribool::Unknown);
  }
}

TEST_CASE("union_rel") {
  auto r = rewrite::srs_rel({rewrite::StrRule("aa", "a")});
  auto s = rewrite::srs_rel({rewrite::StrRule("bb", "b")});
  auto u = ars::union_rel(r, s);

  SUBCASE("empty union") {
    auto e1 = table_rel({});
    auto e2 = table_rel({});
    auto eu = ars::union_rel(e1, e2);
    CHECK(eu.successors("anything").empty());
  }
  SUBCASE("one redex per side") {
    CHECK(u.successors("aabb") == std::vector<std::string>{"aab", "abb"});
  }
  SUBCASE("idempotence") {
    auto rr = ars::union_rel(r, r);
    CHECK(rr.successors("aaa") == r.successors("aaa"));
  }
}

TEST_CASE("commute_check") {
  auto r = rewrite::srs_rel({rewrite::StrRule("aa", "a")});
  auto s = rewrite::srs_rel({rewrite::StrRule("bb", "b")});
  auto corpus = testkit::enum_ab_strings(5);

  SUBCASE("disjoint-redex relations commute") {
    CHECK(ars::commute_check(r, s, corpus, 8).ok());
  }
  SUBCASE("a confluent relation self-commutes") {
    CHECK(ars::commute_check(idem_rel(), idem_rel(), corpus, 8).ok());
  }
  SUBCASE("non-commuting counterexample") {
    auto r2 = table_rel({{"a", {"b"}}});
    auto s2 = table_rel({{"a", {"c"}}});
    auto report = ars::commute_check(r2, s2, {"a"}, 4);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].left == "b");
    CHECK(report.failures[0].right == "c");
  }
}

TEST_CASE("diamond implies joinability inside a complete graph") {
  // For complete graphs that pass check_diamond, any two reachable nodes join.
  for (const std::string& start : testkit::enum_ab_strings(6)) {
    auto g = ars::star_reachable(idem_rel(), start, 1000);
    REQUIRE(g.complete);
    auto inside = ars::graph_rel(g, "inside");
    std::vector<std::string> nodes(g.nodes.begin(), g.nodes.end());
    REQUIRE(ars::check_diamond(inside, nodes, g.nodes.size() + 1).ok());
    for (const std::string& x : nodes)
      for (const std::string& y : nodes)
        CHECK(ars::joinable(inside, x, y, g.nodes.size() + 1).has_value());
  }
}

TEST_CASE("reports serialize one failing peak per line") {
  auto rel = table_rel({{"a", {"b", "c"}}});
  auto report = ars::check_diamond(rel, {"a"}, 4);
  std::string text = ars::to_text(report, [](const std::string& s) { return s; });
  CHECK(text == "sources=1 peaks=1 failures=1\na | b | c | unjoined\n");
}

TEST_CASE("determinism: identical inputs give identical reports") {
  auto corpus = testkit::enum_ab_strings(5);
  auto r1 = ars::check_diamond(idem_rel(), corpus, 6);
  auto r2 = ars::check_diamond(idem_rel(), corpus, 6);
  CHECK(r1.peaks_checked == r2.peaks_checked);
  CHECK(r1.failures.size() == r2.failures.size());
  auto w1 = ars::joinable(idem_rel(), std::string("aabba"), std::string("ababa"), 6);
  auto w2 = ars::joinable(idem_rel(), std::string("aabba"), std::string("ababa"), 6);
  CHECK(w1.has_value() == w2.has_value());
  if (w1 && w2) {
    CHECK(w1->meet == w2->meet);
    CHECK(w1->left_path == w2->left_path);
    CHECK(w1->right_path == w2->right_path);
  }
}
