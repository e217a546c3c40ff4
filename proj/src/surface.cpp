// surface.cpp
// Copyright (c) 2026, the rewritekit authors
// Licensed under the Apache License Version 2.0.

#include "rewritekit/surface.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <utility>

namespace rewritekit::surface {

namespace {

enum class Tok : std::uint8_t {
  Backslash, Dot, LParen, RParen, Comma, Colon, Arrow, Star, Plus,
  FatArrow, Pipe, LBrace, RBrace, LBracket, RBracket, Ident, Number, End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

struct ParseFail {
  ParseError err;
};

[[noreturn]] void fail(SourceSpan span, std::string message,
                       std::vector<std::string> expected = {}) {
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  throw ParseFail{ParseError{span, std::move(message), std::move(expected)}};
}

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= input_.size()) {
        out.push_back({Tok::End, "", here(0)});
        return out;
      }
      char c = input_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        out.push_back(ident());
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(number());
        continue;
      }
      out.push_back(symbol());
    }
  }

 private:
  SourceSpan here(std::size_t len) const {
    return SourceSpan{pos_, pos_ + len, line_, col_};
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (input_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (pos_ < input_.size() &&
           std::isspace(static_cast<unsigned char>(input_[pos_])))
      advance(1);
  }

  Token ident() {
    std::size_t start = pos_;
    SourceSpan span = here(0);
    while (pos_ < input_.size()) {
      char c = input_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')
        advance(1);
      else
        break;
    }
    span.byte_end = pos_;
    return {Tok::Ident, std::string(input_.substr(start, pos_ - start)), span};
  }

  Token number() {
    std::size_t start = pos_;
    SourceSpan span = here(0);
    while (pos_ < input_.size() &&
           std::isdigit(static_cast<unsigned char>(input_[pos_])))
      advance(1);
    span.byte_end = pos_;
    return {Tok::Number, std::string(input_.substr(start, pos_ - start)), span};
  }

  Token symbol() {
    SourceSpan span1 = here(1);
    char c = input_[pos_];
    auto two = [&](char second) {
      return pos_ + 1 < input_.size() && input_[pos_ + 1] == second;
    };
    switch (c) {
      case '\\': advance(1); return {Tok::Backslash, "\\", span1};
      case '.': advance(1); return {Tok::Dot, ".", span1};
      case '(': advance(1); return {Tok::LParen, "(", span1};
      case ')': advance(1); return {Tok::RParen, ")", span1};
      case ',': advance(1); return {Tok::Comma, ",", span1};
      case ':': advance(1); return {Tok::Colon, ":", span1};
      case '*': advance(1); return {Tok::Star, "*", span1};
      case '+': advance(1); return {Tok::Plus, "+", span1};
      case '|': advance(1); return {Tok::Pipe, "|", span1};
      case '{': advance(1); return {Tok::LBrace, "{", span1};
      case '}': advance(1); return {Tok::RBrace, "}", span1};
      case '[': advance(1); return {Tok::LBracket, "[", span1};
      case ']': advance(1); return {Tok::RBracket, "]", span1};
      case '-':
        if (two('>')) {
          SourceSpan span = here(2);
          advance(2);
          return {Tok::Arrow, "->", span};
        }
        break;
      case '=':
        if (two('>')) {
          SourceSpan span = here(2);
          advance(2);
          return {Tok::FatArrow, "=>", span};
        }
        break;
      default:
        break;
    }
    fail(span1, std::string("unexpected character '") + c + "'");
  }

  std::string_view input_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

enum class System : std::uint8_t { Lambda, Ski, Expr, Stlc, Stlcext };

bool is_index_literal(const std::string& text, char prefix) {
  if (text.size() < 2 || text[0] != prefix) return false;
  return std::all_of(text.begin() + 1, text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::size_t parse_index(const std::string& text) {
  std::size_t value = 0;
  for (std::size_t i = 1; i < text.size(); ++i)
    value = value * 10 + static_cast<std::size_t>(text[i] - '0');
  return value;
}

bool is_keyword(System system, const std::string& text) {
  if (system != System::Stlcext) return false;
  return text == "fst" || text == "snd" || text == "inl" || text == "inr" ||
         text == "case" || text == "of";
}

class Parser {
 public:
  Parser(System system, std::vector<Token> tokens)
      : system_(system), tokens_(std::move(tokens)) {}

  // -- shared machinery ------------------------------------------------

  const Token& peek() const { return tokens_[pos_]; }
  const Token& get() { return tokens_[pos_++]; }

  bool at(Tok kind) const { return peek().kind == kind; }

  void expect(Tok kind, const char* what) {
    if (!at(kind)) fail(peek().span, std::string("expected ") + what, {what});
    ++pos_;
  }

  void expect_end() {
    if (!at(Tok::End)) fail(peek().span, "trailing input after term");
  }

  bool at_keyword(const char* kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }

  bool at_term_stop() const {
    switch (peek().kind) {
      case Tok::RParen:
      case Tok::Comma:
      case Tok::Pipe:
      case Tok::RBrace:
      case Tok::RBracket:
      case Tok::End:
        return true;
      default:
        return system_ == System::Stlcext && at_keyword("of");
    }
  }

  // Scope stack for named binders; nullopt slots are anonymous binders.
  void push_scope(std::optional<std::string> name) { scopes_.push_back(std::move(name)); }
  void pop_scope() { scopes_.pop_back(); }

  std::size_t resolve(const Token& tok) {
    if (is_index_literal(tok.text, 'v')) return parse_index(tok.text);
    for (std::size_t i = 0; i < scopes_.size(); ++i) {
      const auto& slot = scopes_[scopes_.size() - 1 - i];
      if (slot && *slot == tok.text) return i;
    }
    fail(tok.span, "unbound name '" + tok.text + "'");
  }

  std::optional<std::string> binder_name() {
    if (!at(Tok::Ident)) return std::nullopt;
    const Token& tok = get();
    if (is_index_literal(tok.text, 'v') || is_index_literal(tok.text, 'b') ||
        is_keyword(system_, tok.text))
      fail(tok.span, "'" + tok.text + "' cannot be used as a binder name");
    return tok.text;
  }

  // -- untyped lambda ---------------------------------------------------

  lambda::Term lambda_term() {
    if (at(Tok::Backslash)) {
      get();
      auto name = binder_name();
      expect(Tok::Dot, "'.'");
      push_scope(name);
      lambda::Term body = lambda_term();
      pop_scope();
      return lambda::Term::lam(body);
    }
    return lambda_app();
  }

  lambda::Term lambda_app() {
    std::optional<lambda::Term> acc;
    while (!at_term_stop()) {
      lambda::Term atom = lambda_atom();
      acc = acc ? lambda::Term::app(*acc, atom) : atom;
    }
    if (!acc) fail(peek().span, "expected a term", {"term"});
    return *acc;
  }

  lambda::Term lambda_atom() {
    if (at(Tok::LParen)) {
      get();
      lambda::Term inner = lambda_term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (at(Tok::Ident)) return lambda::Term::var(resolve(get()));
    fail(peek().span, "expected a term", {"identifier", "'('", "'\\'"});
  }

  // -- SK combinators ---------------------------------------------------

  ski::CTerm ski_term() {
    std::optional<ski::CTerm> acc;
    while (!at_term_stop()) {
      ski::CTerm atom = ski_atom();
      acc = acc ? ski::CTerm::app(*acc, atom) : atom;
    }
    if (!acc) fail(peek().span, "expected a term", {"'S'", "'K'", "'('"});
    return *acc;
  }

  ski::CTerm ski_atom() {
    if (at(Tok::LParen)) {
      get();
      ski::CTerm inner = ski_term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (at(Tok::Ident)) {
      const Token& tok = get();
      if (tok.text == "S") return ski::CTerm::s();
      if (tok.text == "K") return ski::CTerm::k();
      fail(tok.span, "expected 'S' or 'K', got '" + tok.text + "'", {"'S'", "'K'"});
    }
    fail(peek().span, "expected a term", {"'S'", "'K'", "'('"});
  }

  // -- arithmetic expressions --------------------------------------------

  rewrite::Expr expr_term() {
    rewrite::Expr acc = expr_mul();
    while (at(Tok::Plus)) {
      get();
      acc = rewrite::Expr::add(acc, expr_mul());
    }
    return acc;
  }

  rewrite::Expr expr_mul() {
    rewrite::Expr acc = expr_atom();
    while (at(Tok::Star)) {
      get();
      acc = rewrite::Expr::mul(acc, expr_atom());
    }
    return acc;
  }

  rewrite::Expr expr_atom() {
    if (at(Tok::LParen)) {
      get();
      rewrite::Expr inner = expr_term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (at(Tok::Number)) {
      const Token& tok = get();
      if (tok.text == "0") return rewrite::Expr::zero();
      if (tok.text == "1") return rewrite::Expr::one();
      fail(tok.span, "expected '0' or '1', got '" + tok.text + "'", {"'0'", "'1'"});
    }
    fail(peek().span, "expected an expression", {"'0'", "'1'", "'('"});
  }

  // -- simple types -------------------------------------------------------

  stlc::Ty stlc_type() {
    stlc::Ty dom = stlc_type_atom();
    if (at(Tok::Arrow)) {
      get();
      return stlc::Ty::arr(dom, stlc_type());
    }
    return dom;
  }

  stlc::Ty stlc_type_atom() {
    if (at(Tok::LParen)) {
      get();
      stlc::Ty inner = stlc_type();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (at(Tok::Ident) && is_index_literal(peek().text, 'b'))
      return stlc::Ty::base(parse_index(get().text));
    fail(peek().span, "expected a type", {"'b<n>'", "'('"});
  }

  stlcext::ETy ext_type() {
    stlcext::ETy dom = ext_type_sum();
    if (at(Tok::Arrow)) {
      get();
      return stlcext::ETy::arr(dom, ext_type());
    }
    return dom;
  }

  stlcext::ETy ext_type_sum() {
    stlcext::ETy acc = ext_type_prod();
    while (at(Tok::Plus)) {
      get();
      acc = stlcext::ETy::sum(acc, ext_type_prod());
    }
    return acc;
  }

  stlcext::ETy ext_type_prod() {
    stlcext::ETy acc = ext_type_atom();
    while (at(Tok::Star)) {
      get();
      acc = stlcext::ETy::prod(acc, ext_type_atom());
    }
    return acc;
  }

  stlcext::ETy ext_type_atom() {
    if (at(Tok::LParen)) {
      get();
      stlcext::ETy inner = ext_type();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (at(Tok::Ident) && is_index_literal(peek().text, 'b'))
      return stlcext::ETy::base(parse_index(get().text));
    fail(peek().span, "expected a type", {"'b<n>'", "'('"});
  }

  // -- STLC ----------------------------------------------------------------

  stlc::TTerm stlc_term() {
    if (at(Tok::Backslash)) {
      get();
      auto name = binder_name();
      expect(Tok::Colon, "':'");
      stlc::Ty dom = stlc_type();
      expect(Tok::Dot, "'.'");
      push_scope(name);
      stlc::TTerm body = stlc_term();
      pop_scope();
      return stlc::TTerm::lam(dom, body);
    }
    std::optional<stlc::TTerm> acc;
    while (!at_term_stop()) {
      stlc::TTerm atom = stlc_atom();
      acc = acc ? stlc::TTerm::app(*acc, atom) : atom;
    }
    if (!acc) fail(peek().span, "expected a term", {"term"});
    return *acc;
  }

  stlc::TTerm stlc_atom() {
    if (at(Tok::LParen)) {
      get();
      stlc::TTerm inner = stlc_term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (at(Tok::Ident)) return stlc::TTerm::var(resolve(get()));
    fail(peek().span, "expected a term", {"identifier", "'('", "'\\'"});
  }

  // -- STLC with products and sums ------------------------------------------

  stlcext::ETerm ext_term() {
    if (at(Tok::Backslash)) {
      get();
      auto name = binder_name();
      expect(Tok::Colon, "':'");
      stlcext::ETy dom = ext_type();
      expect(Tok::Dot, "'.'");
      push_scope(name);
      stlcext::ETerm body = ext_term();
      pop_scope();
      return stlcext::ETerm::lam(dom, body);
    }
    std::optional<stlcext::ETerm> acc;
    while (!at_term_stop()) {
      stlcext::ETerm atom = ext_atom();
      acc = acc ? stlcext::ETerm::app(*acc, atom) : atom;
    }
    if (!acc) fail(peek().span, "expected a term", {"term"});
    return *acc;
  }

  stlcext::ETerm ext_atom() {
    if (at(Tok::LParen)) {
      get();
      stlcext::ETerm first = ext_term();
      if (at(Tok::Comma)) {
        get();
        stlcext::ETerm second = ext_term();
        expect(Tok::RParen, "')'");
        return stlcext::ETerm::pair(first, second);
      }
      expect(Tok::RParen, "')'");
      return first;
    }
    if (at_keyword("fst")) {
      get();
      return stlcext::ETerm::fst(ext_atom());
    }
    if (at_keyword("snd")) {
      get();
      return stlcext::ETerm::snd(ext_atom());
    }
    if (at_keyword("inl") || at_keyword("inr")) {
      bool left = peek().text == "inl";
      get();
      expect(Tok::LBracket, "'['");
      stlcext::ETy ann = ext_type();
      expect(Tok::RBracket, "']'");
      stlcext::ETerm payload = ext_atom();
      return left ? stlcext::ETerm::inl(ann, payload) : stlcext::ETerm::inr(ann, payload);
    }
    if (at_keyword("case")) {
      get();
      stlcext::ETerm scrut = ext_term();
      if (!at_keyword("of")) fail(peek().span, "expected 'of'", {"'of'"});
      get();
      expect(Tok::LBrace, "'{'");
      if (!at_keyword("inl")) fail(peek().span, "expected 'inl'", {"'inl'"});
      get();
      expect(Tok::FatArrow, "'=>'");
      push_scope(std::nullopt);  // branch binds the payload at index 0
      stlcext::ETerm br1 = ext_term();
      pop_scope();
      expect(Tok::Pipe, "'|'");
      if (!at_keyword("inr")) fail(peek().span, "expected 'inr'", {"'inr'"});
      get();
      expect(Tok::FatArrow, "'=>'");
      push_scope(std::nullopt);
      stlcext::ETerm br2 = ext_term();
      pop_scope();
      expect(Tok::RBrace, "'}'");
      return stlcext::ETerm::case_of(scrut, br1, br2);
    }
    if (at(Tok::Ident)) {
      if (is_keyword(system_, peek().text))
        fail(peek().span, "unexpected keyword '" + peek().text + "'");
      return stlcext::ETerm::var(resolve(get()));
    }
    fail(peek().span, "expected a term",
         {"identifier", "'('", "'\\'", "'fst'", "'snd'", "'inl'", "'inr'", "'case'"});
  }

 private:
  System system_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::optional<std::string>> scopes_;
};

template <typename T, typename Fn>
ParseResult<T> run_parser(System system, std::string_view input, Fn parse_fn) {
  try {
    Lexer lexer(input);
    Parser parser(system, lexer.run());
    T result = parse_fn(parser);
    parser.expect_end();
    return result;
  } catch (ParseFail& f) {
    return std::move(f.err);
  }
}

}  // namespace

ParseResult<lambda::Term> parse_lambda(std::string_view input) {
  return run_parser<lambda::Term>(System::Lambda, input,
                                  [](Parser& p) { return p.lambda_term(); });
}

ParseResult<ski::CTerm> parse_ski(std::string_view input) {
  return run_parser<ski::CTerm>(System::Ski, input,
                                [](Parser& p) { return p.ski_term(); });
}

ParseResult<rewrite::Expr> parse_expr(std::string_view input) {
  return run_parser<rewrite::Expr>(System::Expr, input,
                                   [](Parser& p) { return p.expr_term(); });
}

ParseResult<std::string> parse_srs(std::string_view input) {
  std::size_t begin = 0;
  std::size_t end = input.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(input[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(input[end - 1]))) --end;
  for (std::size_t i = begin; i < end; ++i) {
    char c = input[i];
    if (c != 'a' && c != 'b')
      return ParseError{SourceSpan{i, i + 1, 1, i + 1},
                        std::string("symbol '") + c + "' is outside the alphabet {a, b}",
                        {"'a'", "'b'"}};
  }
  return std::string(input.substr(begin, end - begin));
}

ParseResult<stlc::TTerm> parse_stlc(std::string_view input) {
  return run_parser<stlc::TTerm>(System::Stlc, input,
                                 [](Parser& p) { return p.stlc_term(); });
}

ParseResult<stlcext::ETerm> parse_stlcext(std::string_view input) {
  return run_parser<stlcext::ETerm>(System::Stlcext, input,
                                    [](Parser& p) { return p.ext_term(); });
}

ParseResult<std::vector<rewrite::StrRule>> parse_rule_file(std::string_view input) {
  std::vector<rewrite::StrRule> rules;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (offset <= input.size()) {
    std::size_t eol = input.find('\n', offset);
    std::string_view line = input.substr(
        offset, eol == std::string_view::npos ? input.size() - offset : eol - offset);
    ++line_no;
    SourceSpan span{offset, offset + line.size(), line_no, 1};

    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
      return s;
    };
    std::string_view body = trim(line);
    if (!body.empty() && body.front() != '#') {
      std::size_t arrow = body.find("->");
      if (arrow == std::string_view::npos)
        return ParseError{span, "rule line must contain '->'", {"'lhs -> rhs'"}};
      std::string lhs{trim(body.substr(0, arrow))};
      std::string rhs{trim(body.substr(arrow + 2))};
      try {
        rules.emplace_back(std::move(lhs), std::move(rhs));
      } catch (const std::invalid_argument& e) {
        return ParseError{span, e.what(), {}};
      }
    }
    if (eol == std::string_view::npos) break;
    offset = eol + 1;
  }
  return rules;
}

namespace {

std::string wrap_if(bool cond, std::string inner) {
  return cond ? "(" + std::move(inner) + ")" : std::move(inner);
}

}  // namespace

std::string print(const lambda::Term& t) {
  switch (t.kind()) {
    case lambda::Term::Kind::Var:
      return "v" + std::to_string(t.index());
    case lambda::Term::Kind::Lam:
      return "\\. " + print(t.body());
    case lambda::Term::Kind::App:
      return "(" + wrap_if(t.fun().is_lam(), print(t.fun())) + " " +
             wrap_if(t.arg().is_lam(), print(t.arg())) + ")";
  }
  return {};
}

std::string print(const ski::CTerm& t) {
  switch (t.kind()) {
    case ski::CTerm::Kind::S:
      return "S";
    case ski::CTerm::Kind::K:
      return "K";
    case ski::CTerm::Kind::App:
      return print(t.fun()) + " " + wrap_if(t.arg().is_app(), print(t.arg()));
  }
  return {};
}

namespace {

// Precedence printer for expressions: + is 1, * is 2, atoms 3; both
// operators associate to the left.
std::string print_expr(const rewrite::Expr& e, int level) {
  switch (e.kind()) {
    case rewrite::Expr::Kind::Zero:
      return "0";
    case rewrite::Expr::Kind::One:
      return "1";
    case rewrite::Expr::Kind::Add:
      return wrap_if(level > 1, print_expr(e.left(), 1) + " + " + print_expr(e.right(), 2));
    case rewrite::Expr::Kind::Mul:
      return wrap_if(level > 2, print_expr(e.left(), 2) + " * " + print_expr(e.right(), 3));
  }
  return {};
}

// Type precedence: -> is 1 (right associative), + is 2, * is 3, atoms 4.
std::string print_ety(const stlcext::ETy& ty, int level) {
  switch (ty.kind()) {
    case stlcext::ETy::Kind::Base:
      return "b" + std::to_string(ty.base_index());
    case stlcext::ETy::Kind::Arr:
      return wrap_if(level > 1, print_ety(ty.left(), 2) + " -> " + print_ety(ty.right(), 1));
    case stlcext::ETy::Kind::Sum:
      return wrap_if(level > 2, print_ety(ty.left(), 2) + " + " + print_ety(ty.right(), 3));
    case stlcext::ETy::Kind::Prod:
      return wrap_if(level > 3, print_ety(ty.left(), 3) + " * " + print_ety(ty.right(), 4));
  }
  return {};
}

}  // namespace

std::string print(const rewrite::Expr& e) { return print_expr(e, 1); }

std::string print(const stlc::Ty& ty) {
  if (ty.is_base()) return "b" + std::to_string(ty.base_index());
  return wrap_if(ty.dom().is_arr(), print(ty.dom())) + " -> " + print(ty.cod());
}

std::string print(const stlc::TTerm& t) {
  switch (t.kind()) {
    case stlc::TTerm::Kind::Var:
      return "v" + std::to_string(t.index());
    case stlc::TTerm::Kind::Lam:
      return "\\:" + print(t.dom()) + ". " + print(t.body());
    case stlc::TTerm::Kind::App:
      return "(" + wrap_if(t.fun().is_lam(), print(t.fun())) + " " +
             wrap_if(t.arg().is_lam(), print(t.arg())) + ")";
  }
  return {};
}

std::string print(const stlcext::ETy& ty) { return print_ety(ty, 1); }

std::string print(const stlcext::ETerm& t) {
  using Kind = stlcext::ETerm::Kind;
  switch (t.kind()) {
    case Kind::Var:
      return "v" + std::to_string(t.index());
    case Kind::Lam:
      return "\\:" + print(t.ann()) + ". " + print(t.child0());
    case Kind::App:
      return "(" + wrap_if(t.child0().is_lam(), print(t.child0())) + " " +
             wrap_if(t.child1().is_lam(), print(t.child1())) + ")";
    case Kind::Pair:
      return "(" + print(t.child0()) + ", " + print(t.child1()) + ")";
    case Kind::Fst:
      return "fst " + wrap_if(t.child0().is_lam(), print(t.child0()));
    case Kind::Snd:
      return "snd " + wrap_if(t.child0().is_lam(), print(t.child0()));
    case Kind::Inl:
      return "inl[" + print(t.ann()) + "] " +
             wrap_if(t.child0().is_lam(), print(t.child0()));
    case Kind::Inr:
      return "inr[" + print(t.ann()) + "] " +
             wrap_if(t.child0().is_lam(), print(t.child0()));
    case Kind::Case:
      return "case " + print(t.child0()) + " of { inl => " + print(t.child1()) +
             " | inr => " + print(t.child2()) + " }";
  }
  return {};
}

std::string describe(const ParseError& err) {
  std::ostringstream out;
  out << err.span.line << ":" << err.span.column << ": " << err.message;
  if (!err.expected.empty()) {
    out << " (expected ";
    for (std::size_t i = 0; i < err.expected.size(); ++i) {
      if (i) out << ", ";
      out << err.expected[i];
    }
    out << ")";
  }
  return out.str();
}

}  // namespace rewritekit::surface
