// test_cli.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.
//
// Golden corpus for the command-line tool. Each curated invocation runs
// twice; both runs must be byte-identical to each other and to the checked-in
// golden file, with the expected exit code. Set REWRITEKIT_UPDATE_GOLDEN=1
// to regenerate the files after an intentional output change.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "cli_golden.hpp"

namespace {

std::string env_or_fail(const char* name) {
  const char* value = std::getenv(name);
  REQUIRE_MESSAGE(value != nullptr, "environment variable ", name, " must be set");
  return value;
}

}  // namespace

TEST_CASE("golden corpus: byte-identical across runs and against the files") {
  std::string binary = env_or_fail("REWRITEKIT_BIN");
  std::string golden_dir = env_or_fail("REWRITEKIT_GOLDEN_DIR");
  bool update = std::getenv("REWRITEKIT_UPDATE_GOLDEN") != nullptr;

  REQUIRE(cli_golden::cases().size() == 20);

  for (const auto& test : cli_golden::cases()) {
    CAPTURE(test.name);
    auto first = cli_golden::run(binary, test.args);
    auto second = cli_golden::run(binary, test.args);
    REQUIRE(first.has_value());
    REQUIRE(second.has_value());
    CHECK(first->exit_code == test.expected_exit);
    CHECK(first->exit_code == second->exit_code);
    CHECK(first->output == second->output);

    std::string path = golden_dir + "/" + test.name + ".txt";
    if (update) {
      std::ofstream out(path, std::ios::binary);
      REQUIRE(out.good());
      out << first->output;
      continue;
    }
    auto expected = cli_golden::read_file(path);
    REQUIRE_MESSAGE(expected.has_value(), "missing golden file ", path);
    CHECK(first->output == *expected);

    if (test.dot) {
      std::string why;
      CHECK_MESSAGE(cli_golden::validate_dot(first->output, &why), why);
    }
  }
}

TEST_CASE("usage errors exit with 64") {
  std::string binary = env_or_fail("REWRITEKIT_BIN");
  auto unknown_system = cli_golden::run(binary, "normalize --system nope \"v0\"");
  REQUIRE(unknown_system.has_value());
  CHECK(unknown_system->exit_code == 64);

  auto unknown_suite = cli_golden::run(binary, "props --suite nope");
  REQUIRE(unknown_suite.has_value());
  CHECK(unknown_suite->exit_code == 64);

  auto two_inputs = cli_golden::run(binary, "normalize --system lambda --input v0 v1");
  REQUIRE(two_inputs.has_value());
  CHECK(two_inputs->exit_code == 64);

  auto typecheck_untyped = cli_golden::run(binary, "typecheck --system lambda \"v0\"");
  REQUIRE(typecheck_untyped.has_value());
  CHECK(typecheck_untyped->exit_code == 64);
}

TEST_CASE("stdin input and the seed environment override") {
  std::string binary = env_or_fail("REWRITEKIT_BIN");

  auto piped = cli_golden::run_shell("printf '%s' '(\\x.\\y.x) v5' | '" + binary +
                                     "' normalize --system lambda --input -");
  REQUIRE(piped.has_value());
  CHECK(piped->exit_code == 0);
  CHECK(piped->output == "\\. v6\n");

  auto empty = cli_golden::run_shell("'" + binary +
                                     "' normalize --system lambda --input - < /dev/null");
  REQUIRE(empty.has_value());
  CHECK(empty->exit_code == 1);  // empty input is a parse error

  auto seeded_a = cli_golden::run(
      binary, "props --suite debruijn --cases 20 --exhaustive-size 0 --seed 7");
  auto seeded_b = cli_golden::run(
      binary, "props --suite debruijn --cases 20 --exhaustive-size 0 --seed 999");
  REQUIRE(seeded_a.has_value());
  REQUIRE(seeded_b.has_value());
  CHECK(seeded_a->output != seeded_b->output);  // the seed shows up in the record

  auto env_override = cli_golden::run_shell(
      "REWRITEKIT_SEED=7 '" + binary +
      "' props --suite debruijn --cases 20 --exhaustive-size 0 --seed 999");
  REQUIRE(env_override.has_value());
  CHECK(env_override->output == seeded_a->output);
}

TEST_CASE("rule files drive the srs commands") {
  std::string binary = env_or_fail("REWRITEKIT_BIN");
  std::string rules_path = "/tmp/rewritekit_test_rules.txt";
  {
    std::ofstream out(rules_path);
    out << "# collapse only the a-runs\naa -> a\n";
  }
  auto result = cli_golden::run(
      binary, "confluence --system srs --rules " + rules_path + " --input aabb --cap 50");
  REQUIRE(result.has_value());
  CHECK(result->exit_code == 0);
  CHECK(result->output == "terminating=true locallyConfluent=true uniqueNF=true nf=abb\n");
  std::remove(rules_path.c_str());
}
