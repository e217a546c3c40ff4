// cli_golden.hpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.
//
// Shared golden-corpus harness: the curated CLI invocations, a runner that
// captures combined output and exit status, and a validator for the DOT
// subset the graph command emits.

#pragma once

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace cli_golden {

struct GoldenCase {
  const char* name;          // golden file stem under tests/golden/
  const char* args;          // shell-quoted argument string
  int expected_exit;
  bool dot;                  // validate stdout as DOT
};

inline const std::vector<GoldenCase>& cases() {
  static const std::vector<GoldenCase> table{
      {"01_typecheck_stlc_id", R"x(typecheck --system stlc "\x:b0. x")x", 0, false},
      {"02_typecheck_stlc_mismatch",
       R"x(typecheck --system stlc "(\x:b0. x) (\y:b1. y)")x", 1, false},
      {"03_typecheck_ext_fst_pair",
       R"x(typecheck --system stlcext "fst (\x:b0. x, \y:b1. y)")x", 0, false},
      {"04_typecheck_ext_lam_prod",
       R"x(typecheck --system stlcext "\p:b0*b1. fst p")x", 0, false},
      {"05_typecheck_ext_case_sum",
       R"x(typecheck --system stlcext "\s:b0+b0. case s of { inl => v0 | inr => v0 }")x",
       0, false},
      {"06_typecheck_ext_bad_injection",
       R"x(typecheck --system stlcext "inl[b0+b1] (\x:b0. x)")x", 1, false},
      {"07_normalize_lambda_k", R"x(normalize --system lambda "(\x.\y.x) v5")x", 0, false},
      {"08_normalize_lambda_omega_fuel",
       R"x(normalize --system lambda --fuel 50 "(\x. x x) (\x. x x)")x", 2, false},
      {"09_normalize_lambda_applicative",
       R"x(normalize --system lambda --strategy applicative-order "(\x. x) (\y. y)")x",
       0, false},
      {"10_normalize_ski", R"x(normalize --system ski "K S K")x", 0, false},
      {"11_normalize_expr", R"x(normalize --system expr "(1 * 0) + 0")x", 0, false},
      {"12_critical_pairs_srs", R"x(critical-pairs --system srs)x", 0, false},
      {"13_trace_ext_fst_pair",
       R"x(trace --system stlcext "fst (\x:b0. x, \y:b1. y)")x", 0, false},
      {"14_trace_srs", R"x(trace --system srs aabb)x", 0, false},
      {"15_trace_lambda_json",
       R"x(trace --system lambda --format json-lines "(\x.\y.x) v5")x", 0, false},
      {"16_confluence_srs", R"x(confluence --system srs --input aabb --cap 100)x", 0, false},
      {"17_confluence_lambda_omega",
       R"x(confluence --system lambda --input "(\x.x x)(\x.x x)" --cap 10)x", 0, false},
      {"18_confluence_expr",
       R"x(confluence --system expr --input "(1 * 0) + 0" --cap 100)x", 0, false},
      {"19_graph_lambda_omega",
       R"x(graph --system lambda --input "(\x.x x)(\x.x x)" --cap 5)x", 0, true},
      {"20_graph_srs", R"x(graph --system srs --input aabb --cap 100)x", 0, true},
  };
  return table;
}

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

inline std::optional<RunResult> run_shell(const std::string& command) {
  std::string cmd = command + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string output;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
  int status = pclose(pipe);
  if (status < 0) return std::nullopt;
  return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(output)};
}

inline std::optional<RunResult> run(const std::string& binary, const std::string& args) {
  return run_shell("'" + binary + "' " + args);
}

inline std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Strict validator for the emitted DOT subset:
//   digraph ident? { ( "id" (-> "id")? ([label="..."])? ; )* }
class DotValidator {
 public:
  explicit DotValidator(const std::string& text) : text_(text) {}

  bool run(std::string* why) {
    skip_space();
    if (!word("digraph")) return fail(why, "expected 'digraph'");
    skip_space();
    if (std::isalpha(peek())) ident();
    skip_space();
    if (!eat('{')) return fail(why, "expected '{'");
    skip_space();
    while (peek() != '}') {
      if (peek() == '\0') return fail(why, "unexpected end of input");
      if (!quoted()) return fail(why, "expected a quoted node id");
      skip_space();
      if (peek() == '-') {
        if (!eat('-') || !eat('>')) return fail(why, "expected '->'");
        skip_space();
        if (!quoted()) return fail(why, "expected a quoted edge target");
        skip_space();
      }
      if (peek() == '[') {
        eat('[');
        skip_space();
        if (!ident()) return fail(why, "expected an attribute name");
        skip_space();
        if (!eat('=')) return fail(why, "expected '='");
        skip_space();
        if (!quoted()) return fail(why, "expected a quoted attribute value");
        skip_space();
        if (!eat(']')) return fail(why, "expected ']'");
        skip_space();
      }
      if (!eat(';')) return fail(why, "expected ';'");
      skip_space();
    }
    eat('}');
    skip_space();
    if (peek() != '\0') return fail(why, "trailing content after '}'");
    return true;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool word(const char* w) {
    std::size_t len = std::string(w).size();
    if (text_.compare(pos_, len, w) != 0) return false;
    pos_ += len;
    return true;
  }
  bool ident() {
    if (!std::isalpha(static_cast<unsigned char>(peek()))) return false;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return true;
  }
  bool quoted() {
    if (!eat('"')) return false;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\\') {
        if (pos_ + 1 >= text_.size()) return false;
        char next = text_[pos_ + 1];
        if (next != '\\' && next != '"') return false;
        pos_ += 2;
        continue;
      }
      if (c == '"') {
        ++pos_;
        return true;
      }
      if (c == '\n') return false;  // node ids never span lines
      ++pos_;
    }
    return false;
  }
  bool fail(std::string* why, const char* message) {
    if (why) *why = message + std::string(" at byte ") + std::to_string(pos_);
    return false;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

inline bool validate_dot(const std::string& text, std::string* why) {
  DotValidator validator(text);
  return validator.run(why);
}

}  // namespace cli_golden
