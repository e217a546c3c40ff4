// rewritekit_main.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.
//
// Command-line front end: parsing, typechecking, normalization, reduction
// tracing, confluence verdicts, critical pairs, property suites and DOT
// graph export for every bundled system.
//
// Exit codes: 0 success, 1 input/type error, 2 bound exhausted, 64 usage.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rewritekit/ars.hpp"
#include "rewritekit/lambda.hpp"
#include "rewritekit/rewrite_systems.hpp"
#include "rewritekit/ski.hpp"
#include "rewritekit/stlc.hpp"
#include "rewritekit/stlcext.hpp"
#include "rewritekit/surface.hpp"
#include "rewritekit/testkit.hpp"

namespace {

using nlohmann::json;
using namespace rewritekit;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitBoundExhausted = 2;
constexpr int kExitUsage = 64;

// -- input plumbing ---------------------------------------------------------

struct InputOpts {
  std::string positional;
  std::string inline_flag;
  std::string file_flag;
};

void add_input_options(CLI::App* cmd, InputOpts& opts) {
  cmd->add_option("INPUT", opts.positional, "term text ('-' reads stdin)");
  cmd->add_option("--input", opts.inline_flag, "term text ('-' reads stdin)");
  cmd->add_option("--file", opts.file_flag, "read the term from a file");
}

std::optional<std::string> resolve_input(const InputOpts& opts) {
  int sources = !opts.positional.empty() + !opts.inline_flag.empty() +
                !opts.file_flag.empty();
  if (sources != 1) {
    std::cerr << "usage error: provide exactly one input (positional, --input or --file)\n";
    return std::nullopt;
  }
  if (!opts.file_flag.empty()) {
    std::ifstream in(opts.file_flag, std::ios::binary);
    if (!in) {
      std::cerr << "usage error: cannot open file '" << opts.file_flag << "'\n";
      return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  const std::string& text = opts.positional.empty() ? opts.inline_flag : opts.positional;
  if (text == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return text;
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("REWRITEKIT_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    std::cerr << "warning: ignoring non-numeric REWRITEKIT_SEED\n";
  }
  return flag_seed;
}

// -- per-system operations ----------------------------------------------------

template <typename T>
struct SystemOps {
  std::string name;
  std::function<surface::ParseResult<T>(std::string_view)> parse;
  std::function<std::string(const T&)> print;
  std::function<ars::Rel<T>()> rel;
  std::function<std::vector<std::pair<std::string, T>>(const T&)> labeled_reducts;
  std::function<std::optional<std::pair<std::string, T>>(const T&)> step_normal;
  std::function<std::optional<std::pair<std::string, T>>(const T&)> step_applicative;
};

SystemOps<lambda::Term> lambda_ops() {
  SystemOps<lambda::Term> ops;
  ops.name = "lambda";
  ops.parse = surface::parse_lambda;
  ops.print = [](const lambda::Term& t) { return surface::print(t); };
  ops.rel = lambda::beta_rel;
  ops.labeled_reducts = [](const lambda::Term& t) {
    std::vector<std::pair<std::string, lambda::Term>> out;
    for (const lambda::Term& r : lambda::beta_reducts(t)) out.emplace_back("beta", r);
    return out;
  };
  ops.step_normal = [](const lambda::Term& t)
      -> std::optional<std::pair<std::string, lambda::Term>> {
    if (auto r = lambda::step(t, lambda::Strategy::NormalOrder))
      return std::pair{std::string("beta"), *r};
    return std::nullopt;
  };
  ops.step_applicative = [](const lambda::Term& t)
      -> std::optional<std::pair<std::string, lambda::Term>> {
    if (auto r = lambda::step(t, lambda::Strategy::ApplicativeOrder))
      return std::pair{std::string("beta"), *r};
    return std::nullopt;
  };
  return ops;
}

SystemOps<ski::CTerm> ski_ops() {
  SystemOps<ski::CTerm> ops;
  ops.name = "ski";
  ops.parse = surface::parse_ski;
  ops.print = [](const ski::CTerm& t) { return surface::print(t); };
  ops.rel = ski::ski_rel;
  ops.labeled_reducts = [](const ski::CTerm& t) { return ski::ski_labeled_reducts(t); };
  ops.step_normal = [](const ski::CTerm& t) { return ski::ski_step(t); };
  ops.step_applicative = nullptr;
  return ops;
}

std::optional<std::pair<std::string, rewrite::Expr>> expr_step(const rewrite::Expr& e) {
  using rewrite::Expr;
  if (e.is_zero() || e.is_one()) return std::nullopt;
  Expr l = e.left();
  Expr r = e.right();
  if (e.is_add()) {
    if (l.is_zero()) return std::pair{std::string("add-zero-l"), r};
    if (r.is_zero()) return std::pair{std::string("add-zero-r"), l};
  } else {
    if (l.is_one()) return std::pair{std::string("mul-one-l"), r};
    if (r.is_one()) return std::pair{std::string("mul-one-r"), l};
    if (l.is_zero()) return std::pair{std::string("mul-zero-l"), Expr::zero()};
    if (r.is_zero()) return std::pair{std::string("mul-zero-r"), Expr::zero()};
  }
  if (auto il = expr_step(l))
    return std::pair{il->first, e.is_add() ? Expr::add(il->second, r)
                                           : Expr::mul(il->second, r)};
  if (auto ir = expr_step(r))
    return std::pair{ir->first, e.is_add() ? Expr::add(l, ir->second)
                                           : Expr::mul(l, ir->second)};
  return std::nullopt;
}

SystemOps<rewrite::Expr> expr_ops() {
  SystemOps<rewrite::Expr> ops;
  ops.name = "expr";
  ops.parse = surface::parse_expr;
  ops.print = [](const rewrite::Expr& e) { return surface::print(e); };
  ops.rel = rewrite::expr_rel;
  ops.labeled_reducts = [](const rewrite::Expr& e) {
    return rewrite::expr_labeled_reducts(e);
  };
  ops.step_normal = expr_step;
  ops.step_applicative = nullptr;
  return ops;
}

std::optional<std::pair<std::string, std::string>> srs_step(
    const std::string& w, const std::vector<rewrite::StrRule>& rules) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (const rewrite::StrRule& rule : rules) {
      if (pos + rule.lhs.size() > w.size()) continue;
      if (w.compare(pos, rule.lhs.size(), rule.lhs) != 0) continue;
      std::string next = w;
      next.replace(pos, rule.lhs.size(), rule.rhs);
      return std::pair{rule.name(), std::move(next)};
    }
  }
  return std::nullopt;
}

SystemOps<std::string> srs_ops(std::vector<rewrite::StrRule> rules) {
  SystemOps<std::string> ops;
  ops.name = "srs";
  ops.parse = surface::parse_srs;
  ops.print = [](const std::string& w) { return w; };
  ops.rel = [rules]() { return rewrite::srs_rel(rules); };
  ops.labeled_reducts = [rules](const std::string& w) {
    return rewrite::srs_labeled_reducts(w, rules);
  };
  ops.step_normal = [rules](const std::string& w) { return srs_step(w, rules); };
  ops.step_applicative = nullptr;
  return ops;
}

SystemOps<stlc::TTerm> stlc_ops() {
  SystemOps<stlc::TTerm> ops;
  ops.name = "stlc";
  ops.parse = surface::parse_stlc;
  ops.print = [](const stlc::TTerm& t) { return surface::print(t); };
  ops.rel = stlc::typed_beta_rel;
  ops.labeled_reducts = [](const stlc::TTerm& t) {
    std::vector<std::pair<std::string, stlc::TTerm>> out;
    for (const stlc::TTerm& r : stlc::typed_step_reducts(t)) out.emplace_back("beta", r);
    return out;
  };
  ops.step_normal = [](const stlc::TTerm& t)
      -> std::optional<std::pair<std::string, stlc::TTerm>> {
    if (auto r = stlc::typed_step(t, lambda::Strategy::NormalOrder))
      return std::pair{std::string("beta"), *r};
    return std::nullopt;
  };
  ops.step_applicative = [](const stlc::TTerm& t)
      -> std::optional<std::pair<std::string, stlc::TTerm>> {
    if (auto r = stlc::typed_step(t, lambda::Strategy::ApplicativeOrder))
      return std::pair{std::string("beta"), *r};
    return std::nullopt;
  };
  return ops;
}

SystemOps<stlcext::ETerm> stlcext_ops() {
  SystemOps<stlcext::ETerm> ops;
  ops.name = "stlcext";
  ops.parse = surface::parse_stlcext;
  ops.print = [](const stlcext::ETerm& t) { return surface::print(t); };
  ops.rel = stlcext::ext_rel;
  ops.labeled_reducts = [](const stlcext::ETerm& t) {
    std::vector<std::pair<std::string, stlcext::ETerm>> out;
    for (const auto& [rule, reduct] : stlcext::ext_reducts(t))
      out.emplace_back(std::string(stlcext::step_rule_name(rule)), reduct);
    return out;
  };
  ops.step_normal = [](const stlcext::ETerm& t)
      -> std::optional<std::pair<std::string, stlcext::ETerm>> {
    if (auto r = stlcext::ext_step(t))
      return std::pair{std::string(stlcext::step_rule_name(r->first)), r->second};
    return std::nullopt;
  };
  ops.step_applicative = nullptr;
  return ops;
}

bool known_system(const std::string& system) {
  return system == "lambda" || system == "ski" || system == "expr" ||
         system == "srs" || system == "stlc" || system == "stlcext";
}

template <typename F>
int with_system(const std::string& system, const std::vector<rewrite::StrRule>& rules,
                F&& run) {
  if (system == "lambda") return run(lambda_ops());
  if (system == "ski") return run(ski_ops());
  if (system == "expr") return run(expr_ops());
  if (system == "srs") return run(srs_ops(rules));
  if (system == "stlc") return run(stlc_ops());
  if (system == "stlcext") return run(stlcext_ops());
  std::cerr << "usage error: unknown system '" << system << "'\n";
  return kExitUsage;
}

std::optional<std::vector<rewrite::StrRule>> load_rules(const std::string& rules_file) {
  if (rules_file.empty()) return rewrite::idempotency_rules();
  std::ifstream in(rules_file, std::ios::binary);
  if (!in) {
    std::cerr << "usage error: cannot open rules file '" << rules_file << "'\n";
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  auto parsed = surface::parse_rule_file(buf.str());
  if (!surface::parsed(parsed)) {
    std::cerr << "error: " << surface::describe(surface::error_of(parsed)) << "\n";
    return std::nullopt;
  }
  return surface::value_of(parsed);
}

// -- output helpers -----------------------------------------------------------

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\' || c == '"') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

template <typename T>
std::string graph_to_dot(const ars::ReductionGraph<T>& g, const SystemOps<T>& ops) {
  // Edge labels: which rules lead from src to dst (joined when several do).
  std::ostringstream out;
  out << "digraph reduction {\n";
  for (const T& node : g.nodes)
    out << "  \"" << dot_escape(ops.print(node)) << "\";\n";
  for (const auto& [src, targets] : g.edges) {
    std::map<T, std::set<std::string>> labels;
    for (const auto& [rule, reduct] : ops.labeled_reducts(src))
      labels[reduct].insert(rule);
    for (const T& dst : targets) {
      out << "  \"" << dot_escape(ops.print(src)) << "\" -> \""
          << dot_escape(ops.print(dst)) << "\"";
      auto it = labels.find(dst);
      if (it != labels.end()) {
        std::string joined;
        for (const std::string& rule : it->second) {
          if (!joined.empty()) joined += ",";
          joined += rule;
        }
        out << " [label=\"" << dot_escape(joined) << "\"]";
      }
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

// -- commands ------------------------------------------------------------------

int cmd_typecheck(const std::string& system, const std::string& input) {
  if (system == "stlc") {
    auto parsed = surface::parse_stlc(input);
    if (!surface::parsed(parsed)) {
      std::cerr << "error: " << surface::describe(surface::error_of(parsed)) << "\n";
      return kExitInputError;
    }
    auto result = stlc::infer(stlc::Context{}, surface::value_of(parsed));
    if (!stlc::ok(result)) {
      std::cerr << "type error: " << stlc::error_of(result).detail << "\n";
      return kExitInputError;
    }
    std::cout << surface::print(stlc::type_of(result)) << "\n";
    return kExitOk;
  }
  if (system == "stlcext") {
    auto parsed = surface::parse_stlcext(input);
    if (!surface::parsed(parsed)) {
      std::cerr << "error: " << surface::describe(surface::error_of(parsed)) << "\n";
      return kExitInputError;
    }
    auto result = stlcext::ext_infer(stlcext::Context{}, surface::value_of(parsed));
    if (!stlcext::ok(result)) {
      std::cerr << "type error: " << stlcext::error_of(result).detail << "\n";
      return kExitInputError;
    }
    std::cout << surface::print(stlcext::type_of(result)) << "\n";
    return kExitOk;
  }
  std::cerr << "usage error: typecheck supports systems stlc and stlcext\n";
  return kExitUsage;
}

template <typename T>
int run_steps(const SystemOps<T>& ops, const std::string& input, bool applicative,
              std::size_t fuel, const std::string& format, bool trace) {
  if (applicative && !ops.step_applicative) {
    std::cerr << "usage error: applicative-order is not available for system "
              << ops.name << "\n";
    return kExitUsage;
  }
  auto parsed = ops.parse(input);
  if (!surface::parsed(parsed)) {
    std::cerr << "error: " << surface::describe(surface::error_of(parsed)) << "\n";
    return kExitInputError;
  }
  const auto& stepper = applicative ? ops.step_applicative : ops.step_normal;
  bool json_lines = format == "json-lines";

  T cur = surface::value_of(parsed);
  std::size_t steps = 0;
  for (;;) {
    auto next = stepper(cur);
    if (!next) {
      if (json_lines)
        std::cout << json{{"event", "nf"}, {"term", ops.print(cur)}, {"step", steps}}
                  << "\n";
      else if (trace)
        std::cout << "nf: " << ops.print(cur) << "\n";
      else
        std::cout << ops.print(cur) << "\n";
      return kExitOk;
    }
    if (steps == fuel) {
      if (json_lines)
        std::cout << json{{"event", "fuel-exhausted"},
                          {"term", ops.print(cur)},
                          {"step", steps}}
                  << "\n";
      else
        std::cout << "fuel exhausted after " << steps << " steps: " << ops.print(cur)
                  << "\n";
      return kExitBoundExhausted;
    }
    cur = next->second;
    ++steps;
    if (trace) {
      if (json_lines)
        std::cout << json{{"event", "step"},
                          {"rule", next->first},
                          {"term", ops.print(cur)},
                          {"step", steps}}
                  << "\n";
      else
        std::cout << next->first << ": " << ops.print(cur) << "\n";
    }
  }
}

template <typename T>
int run_confluence(const SystemOps<T>& ops, const std::string& input, std::size_t cap,
                   const std::string& format) {
  auto parsed = ops.parse(input);
  if (!surface::parsed(parsed)) {
    std::cerr << "error: " << surface::describe(surface::error_of(parsed)) << "\n";
    return kExitInputError;
  }
  auto verdict = ars::newman_verify(ops.rel(), surface::value_of(parsed), cap);
  std::optional<std::string> nf;
  if (verdict.normal_forms.size() == 1)
    nf = ops.print(*verdict.normal_forms.begin());

  if (format == "json-lines") {
    json record{{"event", "verdict"},
                {"terminating", ars::to_string(verdict.terminating)},
                {"locallyConfluent", verdict.locally_confluent},
                {"uniqueNF", verdict.unique_nf},
                {"complete", verdict.exploration_complete}};
    if (nf) record["nf"] = *nf;
    std::cout << record << "\n";
  } else {
    std::cout << "terminating=" << ars::to_string(verdict.terminating)
              << " locallyConfluent=" << (verdict.locally_confluent ? "true" : "false")
              << " uniqueNF=" << (verdict.unique_nf ? "true" : "false");
    if (nf) std::cout << " nf=" << *nf;
    if (!verdict.exploration_complete) std::cout << " warning=incomplete-exploration";
    std::cout << "\n";
  }
  return verdict.exploration_complete ? kExitOk : kExitBoundExhausted;
}

template <typename T>
int run_graph(const SystemOps<T>& ops, const std::string& input, std::size_t cap,
              const std::string& format) {
  auto parsed = ops.parse(input);
  if (!surface::parsed(parsed)) {
    std::cerr << "error: " << surface::describe(surface::error_of(parsed)) << "\n";
    return kExitInputError;
  }
  auto graph = ars::star_reachable(ops.rel(), surface::value_of(parsed), cap);
  if (format == "dot") {
    std::cout << graph_to_dot(graph, ops);
  } else if (format == "json-lines") {
    for (const T& node : graph.nodes)
      std::cout << json{{"event", "node"}, {"term", ops.print(node)}} << "\n";
    for (const auto& [src, targets] : graph.edges)
      for (const T& dst : targets)
        std::cout << json{{"event", "edge"},
                          {"from", ops.print(src)},
                          {"to", ops.print(dst)}}
                  << "\n";
    std::cout << json{{"event", "summary"},
                      {"nodes", graph.nodes.size()},
                      {"edges", graph.edge_count()},
                      {"complete", graph.complete}}
              << "\n";
  } else {
    std::cout << "nodes=" << graph.nodes.size() << " edges=" << graph.edge_count()
              << " complete=" << (graph.complete ? "true" : "false") << "\n";
    for (const auto& [src, targets] : graph.edges)
      for (const T& dst : targets)
        std::cout << ops.print(src) << " -> " << ops.print(dst) << "\n";
  }
  return graph.complete ? kExitOk : kExitBoundExhausted;
}

int cmd_critical_pairs(const std::string& system,
                       const std::vector<rewrite::StrRule>& rules, std::size_t depth) {
  if (system != "srs") {
    std::cerr << "usage error: critical-pairs supports system srs\n";
    return kExitUsage;
  }
  ars::Rel<std::string> rel = rewrite::srs_rel(rules);
  for (const auto& cp : rewrite::critical_pairs(rules)) {
    bool joins = ars::joinable(rel, cp.left, cp.right, depth).has_value();
    std::cout << "source=" << cp.source << " left=" << cp.left
              << " right=" << cp.right << " pos=" << cp.overlap_position
              << " joinable=" << (joins ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_props(const std::string& suite, const testkit::GenConfig& cfg) {
  auto report = testkit::run_suite(suite, cfg);
  if (!report) {
    std::cerr << "usage error: unknown suite '" << suite << "' (expected one of:";
    for (const std::string& name : testkit::suite_names()) std::cerr << " " << name;
    std::cerr << ")\n";
    return kExitUsage;
  }
  constexpr std::size_t kMaxShown = 25;
  for (std::size_t i = 0; i < report->failures.size() && i < kMaxShown; ++i) {
    const auto& f = report->failures[i];
    std::cout << "FAIL #" << f.case_index << " " << f.property << ": "
              << f.counterexample << "\n";
  }
  if (report->failures.size() > kMaxShown)
    std::cout << "... and " << (report->failures.size() - kMaxShown)
              << " more failures\n";
  std::cout << report->summary_line() << "\n";
  return report->ok() ? kExitOk : kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rewritekit: rewriting and typed lambda calculus workbench"};
  app.require_subcommand(1);

  std::string system = "lambda";
  std::string format = "text";
  std::string strategy = "normal-order";
  std::string rules_file;
  std::string suite;
  std::size_t fuel = 1000;
  std::size_t cap = ars::kDefaultNodeCap;
  testkit::GenConfig cfg;
  long long exhaustive_size = -1;
  InputOpts input;

  auto* typecheck = app.add_subcommand("typecheck", "infer the type of a term");
  typecheck->add_option("--system", system, "stlc | stlcext");
  add_input_options(typecheck, input);

  auto* normalize = app.add_subcommand("normalize", "reduce a term to normal form");
  normalize->add_option("--system", system, "lambda|ski|expr|srs|stlc|stlcext");
  normalize->add_option("--strategy", strategy, "normal-order | applicative-order");
  normalize->add_option("--fuel", fuel, "maximum number of steps");
  normalize->add_option("--format", format, "text | json-lines");
  normalize->add_option("--rules", rules_file, "srs rule file (default {aa->a, bb->b})");
  add_input_options(normalize, input);

  auto* trace = app.add_subcommand("trace", "print each reduction step");
  trace->add_option("--system", system, "lambda|ski|expr|srs|stlc|stlcext");
  trace->add_option("--strategy", strategy, "normal-order | applicative-order");
  trace->add_option("--fuel", fuel, "maximum number of steps");
  trace->add_option("--format", format, "text | json-lines");
  trace->add_option("--rules", rules_file, "srs rule file");
  add_input_options(trace, input);

  auto* confluence = app.add_subcommand("confluence", "Newman-style verdict from a start term");
  confluence->add_option("--system", system, "lambda|ski|expr|srs|stlc|stlcext");
  confluence->add_option("--cap", cap, "node cap for exploration");
  confluence->add_option("--format", format, "text | json-lines");
  confluence->add_option("--rules", rules_file, "srs rule file");
  add_input_options(confluence, input);

  auto* graph = app.add_subcommand("graph", "export the reduction graph");
  graph->add_option("--system", system, "lambda|ski|expr|srs|stlc|stlcext");
  graph->add_option("--cap", cap, "node cap for exploration");
  std::string graph_format = "dot";
  graph->add_option("--format", graph_format, "dot | text | json-lines");
  graph->add_option("--rules", rules_file, "srs rule file");
  add_input_options(graph, input);

  std::size_t join_depth = 4;
  auto* critical = app.add_subcommand("critical-pairs", "overlaps between rule left-hand sides");
  critical->add_option("--system", system, "srs");
  critical->add_option("--rules", rules_file, "srs rule file");
  critical->add_option("--depth", join_depth, "join search bound per side");

  auto* props = app.add_subcommand("props", "run a property suite");
  props->add_option("--suite", suite, "debruijn|takahashi|diamond|newman|hindley-rosen|subject-reduction|sn|progress")
      ->required();
  props->add_option("--seed", cfg.seed, "generator seed (REWRITEKIT_SEED overrides)");
  props->add_option("--cases", cfg.cases, "random cases per suite");
  props->add_option("--max-size", cfg.max_size, "maximum generated term size");
  props->add_option("--max-free-index", cfg.max_free_index, "free index bound");
  props->add_option("--type-depth", cfg.type_depth, "maximum generated type depth");
  props->add_option("--exhaustive-size", exhaustive_size,
                    "bound for the exhaustive pass (0 skips it; default per suite)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (!known_system(system)) {
    std::cerr << "usage error: unknown system '" << system << "'\n";
    return kExitUsage;
  }

  auto rules = load_rules(rules_file);
  if (!rules) return kExitUsage;

  auto one_input = [&input]() { return resolve_input(input); };

  try {
    if (typecheck->parsed()) {
      auto text = one_input();
      if (!text) return kExitUsage;
      return cmd_typecheck(system, *text);
    }
    if (normalize->parsed() || trace->parsed()) {
      if (strategy != "normal-order" && strategy != "applicative-order") {
        std::cerr << "usage error: unknown strategy '" << strategy << "'\n";
        return kExitUsage;
      }
      if (format != "text" && format != "json-lines") {
        std::cerr << "usage error: unknown format '" << format << "'\n";
        return kExitUsage;
      }
      auto text = one_input();
      if (!text) return kExitUsage;
      bool applicative = strategy == "applicative-order";
      bool tracing = trace->parsed();
      return with_system(system, *rules, [&](const auto& ops) {
        return run_steps(ops, *text, applicative, fuel, format, tracing);
      });
    }
    if (confluence->parsed()) {
      if (format != "text" && format != "json-lines") {
        std::cerr << "usage error: unknown format '" << format << "'\n";
        return kExitUsage;
      }
      auto text = one_input();
      if (!text) return kExitUsage;
      return with_system(system, *rules, [&](const auto& ops) {
        return run_confluence(ops, *text, cap, format);
      });
    }
    if (graph->parsed()) {
      if (graph_format != "dot" && graph_format != "text" &&
          graph_format != "json-lines") {
        std::cerr << "usage error: unknown format '" << graph_format << "'\n";
        return kExitUsage;
      }
      auto text = one_input();
      if (!text) return kExitUsage;
      return with_system(system, *rules, [&](const auto& ops) {
        return run_graph(ops, *text, cap, graph_format);
      });
    }
    if (critical->parsed()) return cmd_critical_pairs(system, *rules, join_depth);
    if (props->parsed()) {
      cfg.seed = effective_seed(cfg.seed);
      if (exhaustive_size >= 0)
        cfg.exhaustive_size = static_cast<std::size_t>(exhaustive_size);
      return cmd_props(suite, cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitUsage;
}
