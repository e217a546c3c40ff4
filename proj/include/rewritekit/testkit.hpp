// testkit.hpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rewritekit/lambda.hpp"
#include "rewritekit/rewrite_systems.hpp"
#include "rewritekit/ski.hpp"
#include "rewritekit/stlc.hpp"
#include "rewritekit/stlcext.hpp"

namespace rewritekit::testkit {

/// splitmix64; identical sequences on every platform for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

 private:
  std::uint64_t state_;
};

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t max_size = 12;       // >= 1
  std::size_t max_free_index = 4;
  std::size_t type_depth = 2;
  std::size_t cases = 10000;
  // Bound for a suite's exhaustive pass: nullopt picks the suite default,
  // 0 skips the pass.
  std::optional<std::size_t> exhaustive_size;
};

// -- random generators ---------------------------------------------------

lambda::Term gen_term(Rng& rng, const GenConfig& cfg);
ski::CTerm gen_ski(Rng& rng, const GenConfig& cfg);
rewrite::Expr gen_expr(Rng& rng, const GenConfig& cfg);

stlc::Ty gen_ty(Rng& rng, std::size_t depth);
stlcext::ETy gen_ety(Rng& rng, std::size_t depth);

/// Raw annotated terms (not necessarily well-typed); used for round-trip
/// and shape properties.
stlc::TTerm gen_tterm_raw(Rng& rng, const GenConfig& cfg);
stlcext::ETerm gen_eterm_raw(Rng& rng, const GenConfig& cfg);

/// Rule-directed generation of a well-typed term of the target type (random
/// target when absent). Backtracks up to 200 attempts per node, then gives
/// up. Every produced term re-checks under the corresponding infer.
std::optional<stlc::TTerm> gen_typed(Rng& rng, const GenConfig& cfg,
                                     const stlc::Context& ctx,
                                     std::optional<stlc::Ty> target);
std::optional<stlcext::ETerm> gen_typed_ext(Rng& rng, const GenConfig& cfg,
                                            const stlcext::Context& ctx,
                                            std::optional<stlcext::ETy> target);

// -- exhaustive enumerators ------------------------------------------------

/// All untyped terms with at most max_size nodes and free indices below
/// free_bound, without duplicates, smallest sizes first.
std::vector<lambda::Term> enum_terms(std::size_t max_size, std::size_t free_bound);

/// Independent counting recurrence for terms of exactly `size` nodes:
/// T(1,k) = k,  T(n,k) = T(n-1,k+1) + sum T(i,k)*T(n-1-i,k).
std::uint64_t count_terms_exact(std::size_t size, std::size_t free_bound);

std::vector<ski::CTerm> enum_ski_terms(std::size_t max_size);
std::vector<rewrite::Expr> enum_exprs(std::size_t max_size);

/// "" plus every string over {a,b} of length <= max_len.
std::vector<std::string> enum_ab_strings(std::size_t max_len);

/// All extended terms up to max_size nodes. Annotations come from a fixed
/// pool (b0 on lambdas, b0+b0 on injections): the shape properties checked
/// over this corpus ignore annotations.
std::vector<stlcext::ETerm> enum_eterms(std::size_t max_size, std::size_t free_bound);

// -- oracles and fixed corpora ----------------------------------------------

/// Collapses every maximal run of equal letters to one letter; independent
/// oracle for idempotency-system normal forms.
std::string collapse_runs(const std::string& w);

/// (\x. x x) (\x. x x)
lambda::Term omega();

/// omega with throwaway annotations; ill-typed, loops under reduction.
stlc::TTerm annotated_omega();
stlcext::ETerm ext_annotated_omega();

struct RuleRegression {
  stlcext::StepRule rule;
  stlcext::ETerm term;  // closed, well-typed, steps by `rule`
};

/// One closed well-typed term per single-step rule label.
const std::vector<RuleRegression>& rule_regression_corpus();

// -- executable property suites ----------------------------------------------

struct SuiteFailure {
  std::size_t case_index;
  std::string property;
  std::string counterexample;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<SuiteFailure> failures;
  bool ok() const { return failures.empty(); }
  std::string summary_line() const;
};

using SubstFn = lambda::Term (*)(std::size_t, const lambda::Term&, const lambda::Term&);

/// The de Bruijn lemma suite, parameterized by the substitution under test
/// so a defective variant is demonstrably caught.
SuiteReport run_debruijn_suite(const GenConfig& cfg, SubstFn subst_fn);

SuiteReport run_takahashi_suite(const GenConfig& cfg);
SuiteReport run_diamond_suite(const GenConfig& cfg);
SuiteReport run_newman_suite(const GenConfig& cfg);
SuiteReport run_hindley_rosen_suite(const GenConfig& cfg);
SuiteReport run_subject_reduction_suite(const GenConfig& cfg);
SuiteReport run_sn_suite(const GenConfig& cfg);
SuiteReport run_progress_suite(const GenConfig& cfg);

const std::vector<std::string>& suite_names();

/// Dispatch by name; empty result for an unknown suite.
std::optional<SuiteReport> run_suite(std::string_view name, const GenConfig& cfg);

}  // namespace rewritekit::testkit
