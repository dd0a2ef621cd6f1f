#include "causal/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "causal/builtins.hpp"

namespace causal::dsl {

DslError::DslError(SourceSpan span, const std::string& message)
    : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " +
                         message),
      span_(span),
      message_(message) {}

namespace {

constexpr std::size_t kMaxBits = 15;

const std::map<std::string_view, CircuitKind>& kinds() {
  static const std::map<std::string_view, CircuitKind> table{
      {"dff", CircuitKind::Dff},   {"srlatch", CircuitKind::SrLatch},
      {"mux", CircuitKind::Mux},   {"sync", CircuitKind::Sync},
      {"multiclock", CircuitKind::MultiClock}, {"abmem", CircuitKind::AbMem}};
  return table;
}

std::optional<BoolExpr::Op> operator_from(std::string_view word) {
  if (word == "not") return BoolExpr::Op::Not;
  if (word == "and") return BoolExpr::Op::And;
  if (word == "or") return BoolExpr::Op::Or;
  if (word == "xor") return BoolExpr::Op::Xor;
  return std::nullopt;
}

const char* operator_name(BoolExpr::Op op) {
  switch (op) {
    case BoolExpr::Op::Not: return "not";
    case BoolExpr::Op::And: return "and";
    case BoolExpr::Op::Or: return "or";
    case BoolExpr::Op::Xor: return "xor";
    default: return "";
  }
}

const char* clause_keyword(Clause::Type t) {
  switch (t) {
    case Clause::Type::Clock: return "clock";
    case Clause::Type::State: return "state";
    case Clause::Type::In: return "in";
    case Clause::Type::Next: return "next";
    case Clause::Type::Out: return "out";
    case Clause::Type::Domain: return "domain";
  }
  return "";
}

// Lexer ----------------------------------------------------------------------

struct Token {
  enum class Kind { Ident, Number, LBrace, RBrace, LParen, RParen, Semi, Comma, Eq, End };
  Kind kind;
  std::string text;
  SourceSpan span;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::size_t len) {
    out.push_back({k, std::string(src.substr(i, len)), {line, col, len}});
    i += len;
    col += len;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') {
        ++i;
      }
    } else if (c >= 'a' && c <= 'z') {
      std::size_t n = 1;
      while (i + n < src.size() &&
             ((src[i + n] >= 'a' && src[i + n] <= 'z') ||
              (src[i + n] >= '0' && src[i + n] <= '9') || src[i + n] == '_')) {
        ++n;
      }
      push(Token::Kind::Ident, n);
    } else if (c >= '0' && c <= '9') {
      std::size_t n = 1;
      while (i + n < src.size() && src[i + n] >= '0' && src[i + n] <= '9') {
        ++n;
      }
      push(Token::Kind::Number, n);
    } else {
      Token::Kind k;
      switch (c) {
        case '{': k = Token::Kind::LBrace; break;
        case '}': k = Token::Kind::RBrace; break;
        case '(': k = Token::Kind::LParen; break;
        case ')': k = Token::Kind::RParen; break;
        case ';': k = Token::Kind::Semi; break;
        case ',': k = Token::Kind::Comma; break;
        case '=': k = Token::Kind::Eq; break;
        default: {
          std::string shown = std::isprint(static_cast<unsigned char>(c))
                                  ? std::string(1, c)
                                  : "\\x" + std::to_string(static_cast<unsigned char>(c));
          throw ParseError({line, col, 1}, "unexpected character '" + shown + "'");
        }
      }
      push(k, 1);
    }
  }
  out.push_back({Token::Kind::End, "", {line, col, 1}});
  return out;
}

// Parser ---------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  CircuitAst file() {
    CircuitAst ast;
    expect_word("circuit");
    const Token& name = expect(Token::Kind::Ident, "circuit name");
    ast.name = name.text;
    ast.name_span = name.span;
    expect(Token::Kind::LBrace, "'{'");
    bool have_kind = false;
    while (peek().kind != Token::Kind::RBrace) {
      if (peek().kind == Token::Kind::Ident && peek().text == "kind") {
        const Token& kw = next();
        if (have_kind) {
          throw ParseError(kw.span, "duplicate clause 'kind'");
        }
        const Token& k = expect(Token::Kind::Ident, "circuit kind");
        auto found = kind_from_string(k.text);
        if (!found) {
          throw ParseError(k.span, "unknown kind '" + k.text + "'");
        }
        ast.kind = *found;
        ast.kind_span = k.span;
        have_kind = true;
        expect(Token::Kind::Semi, "';'");
        continue;
      }
      ast.clauses.push_back(clause(false));
    }
    next();
    if (peek().kind != Token::Kind::End) {
      throw ParseError(peek().span, "unexpected '" + peek().text + "' after circuit");
    }
    if (!have_kind) {
      throw ParseError(ast.name_span, "missing 'kind' clause");
    }
    return ast;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::End) {
      ++pos_;
    }
    return t;
  }

  [[noreturn]] void unexpected(const std::string& what) const {
    const Token& t = peek();
    if (t.kind == Token::Kind::End) {
      throw ParseError(t.span, "expected " + what + ", got end of input");
    }
    throw ParseError(t.span, "expected " + what + ", got '" + t.text + "'");
  }

  const Token& expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) {
      unexpected(what);
    }
    return next();
  }

  const Token& expect_word(std::string_view word) {
    if (peek().kind != Token::Kind::Ident || peek().text != word) {
      unexpected("'" + std::string(word) + "'");
    }
    return next();
  }

  const Token& name(const std::string& what) {
    const Token& t = expect(Token::Kind::Ident, what);
    if (operator_from(t.text)) {
      throw ParseError(t.span, "'" + t.text + "' is a reserved word");
    }
    return t;
  }

  void add_name(Clause& c, const Token& t) {
    c.names.push_back(t.text);
    c.name_spans.push_back(t.span);
  }

  Clause clause(bool in_domain) {
    if (peek().kind != Token::Kind::Ident) {
      unexpected("clause");
    }
    const Token& kw = next();
    Clause c;
    c.span = kw.span;
    if (kw.text == "kind") {
      throw ParseError(kw.span, "'kind' not allowed inside a domain");
    } else if (kw.text == "clock") {
      c.type = Clause::Type::Clock;
      add_name(c, name("clock name"));
      if (peek().kind == Token::Kind::Comma) {
        next();
        add_name(c, name("clock name"));
      }
    } else if (kw.text == "state") {
      c.type = Clause::Type::State;
      const Token& w = expect(Token::Kind::Number, "state width");
      c.width_span = w.span;
      if (w.text.size() > 6) {
        throw ParseError(w.span, "state width too large");
      }
      c.width = std::stoul(w.text);
      expect_word("init");
      const Token& bits = expect(Token::Kind::Number, "init bits");
      if (bits.text.find_first_not_of("01") != std::string::npos) {
        throw ParseError(bits.span, "init must be a string of 0 and 1");
      }
      c.init = bits.text;
      c.init_span = bits.span;
    } else if (kw.text == "in") {
      c.type = Clause::Type::In;
      add_name(c, name("input name"));
    } else if (kw.text == "next" || kw.text == "out") {
      c.type = kw.text == "next" ? Clause::Type::Next : Clause::Type::Out;
      add_name(c, name(kw.text == "next" ? "register name" : "output name"));
      expect(Token::Kind::Eq, "'='");
      c.expr = expr();
    } else if (kw.text == "domain") {
      if (in_domain) {
        throw ParseError(kw.span, "nested domain");
      }
      c.type = Clause::Type::Domain;
      add_name(c, name("domain name"));
      expect(Token::Kind::LBrace, "'{'");
      while (peek().kind != Token::Kind::RBrace) {
        c.body.push_back(clause(true));
      }
      next();
      return c;
    } else {
      throw ParseError(kw.span, "unknown clause '" + kw.text + "'");
    }
    expect(Token::Kind::Semi, "';'");
    return c;
  }

  BoolExpr expr() {
    const Token& t = peek();
    BoolExpr e;
    e.span = t.span;
    if (t.kind == Token::Kind::Number) {
      if (t.text != "0" && t.text != "1") {
        throw ParseError(t.span, "expected 0 or 1, got '" + t.text + "'");
      }
      e.op = t.text == "0" ? BoolExpr::Op::Zero : BoolExpr::Op::One;
      next();
      return e;
    }
    if (t.kind != Token::Kind::Ident) {
      unexpected("expression");
    }
    next();
    auto op = operator_from(t.text);
    if (!op) {
      e.op = BoolExpr::Op::Var;
      e.name = t.text;
      return e;
    }
    e.op = *op;
    expect(Token::Kind::LParen, "'('");
    e.args.push_back(expr());
    while (peek().kind == Token::Kind::Comma) {
      next();
      e.args.push_back(expr());
    }
    expect(Token::Kind::RParen, "')'");
    if (*op == BoolExpr::Op::Not && e.args.size() != 1) {
      throw ParseError(e.span, "arity mismatch: 'not' takes 1 argument, got " +
                                   std::to_string(e.args.size()));
    }
    if (*op != BoolExpr::Op::Not && e.args.size() < 2) {
      throw ParseError(e.span, std::string("arity mismatch: '") + operator_name(*op) +
                                   "' takes at least 2 arguments, got 1");
    }
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Validation -----------------------------------------------------------------

/// q<digits> -> register index
std::optional<std::size_t> register_index(std::string_view name, std::string_view prefix = "q") {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) {
    return std::nullopt;
  }
  auto digits = name.substr(prefix.size());
  if (digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    return std::nullopt;
  }
  return std::stoul(std::string(digits));
}

struct ScopeView {
  std::string name;  // domain name, empty at top level
  SourceSpan span;
  const std::vector<Clause>* clauses = nullptr;

  std::size_t width() const {
    for (const auto& c : *clauses) {
      if (c.type == Clause::Type::State) return c.width;
    }
    return 0;
  }
  std::vector<std::string> inputs() const {
    std::vector<std::string> out;
    for (const auto& c : *clauses) {
      if (c.type == Clause::Type::In) out.push_back(c.names[0]);
    }
    return out;
  }
};

class Validator {
 public:
  explicit Validator(const CircuitAst& ast) : ast_(ast) {}

  void run() {
    const std::string kind = to_string(ast_.kind);
    const ScopeView top{"", ast_.name_span, &ast_.clauses};
    switch (ast_.kind) {
      case CircuitKind::Dff:
        fixed(top, kind, {Clause::Type::Clock, Clause::Type::In}, 1);
        break;
      case CircuitKind::SrLatch:
      case CircuitKind::Mux:
        fixed(top, kind, {Clause::Type::In}, 2);
        break;
      case CircuitKind::AbMem:
        fixed(top, kind, {Clause::Type::In}, 1);
        break;
      case CircuitKind::Sync:
        sync_scope(top, kind, nullptr);
        break;
      case CircuitKind::MultiClock:
        multiclock();
        break;
    }
    if (!errors_.empty()) {
      auto first = std::min_element(errors_.begin(), errors_.end(), [](const auto& a, const auto& b) {
        return std::pair{a.span().line, a.span().column} < std::pair{b.span().line, b.span().column};
      });
      throw *first;
    }
  }

 private:
  void error(SourceSpan span, const std::string& msg) { errors_.emplace_back(span, msg); }

  void not_allowed(const Clause& c, const std::string& kind) {
    error(c.span, std::string("clause '") + clause_keyword(c.type) + "' not allowed for kind " +
                      kind);
  }

  void one_clock_name(const Clause& c) {
    if (c.names.size() > 1) {
      error(c.name_spans[1], "clock takes a single name here");
    }
  }

  void unique_inputs(const ScopeView& scope) {
    std::set<std::string> seen;
    for (const auto& c : *scope.clauses) {
      if (c.type != Clause::Type::In) continue;
      if (!seen.insert(c.names[0]).second) {
        error(c.name_spans[0], "duplicate input '" + c.names[0] + "'");
      }
    }
  }

  // dff, srlatch, mux, abmem: only the listed clauses, at most `max_inputs` ins.
  void fixed(const ScopeView& scope, const std::string& kind, std::set<Clause::Type> allowed,
             std::size_t max_inputs) {
    std::size_t ins = 0;
    bool clock = false;
    for (const auto& c : *scope.clauses) {
      if (!allowed.count(c.type)) {
        not_allowed(c, kind);
      } else if (c.type == Clause::Type::In && ++ins > max_inputs) {
        error(c.span, "too many 'in' clauses for kind " + kind);
      } else if (c.type == Clause::Type::Clock) {
        if (clock) error(c.span, "duplicate clause 'clock'");
        clock = true;
        one_clock_name(c);
      }
    }
    unique_inputs(scope);
  }

  void sync_scope(const ScopeView& scope, const std::string& kind, const ScopeView* peer) {
    bool clock = false;
    const Clause* state = nullptr;
    std::size_t outs = 0;
    std::size_t ins = 0;
    std::set<std::string> nexts;
    std::set<std::string> out_names;
    for (const auto& c : *scope.clauses) {
      switch (c.type) {
        case Clause::Type::Clock:
          if (clock) error(c.span, "duplicate clause 'clock'");
          clock = true;
          one_clock_name(c);
          break;
        case Clause::Type::State:
          if (state) {
            error(c.span, "duplicate clause 'state'");
          } else {
            state = &c;
          }
          if (c.width == 0) {
            error(c.width_span, "state width must be positive");
          } else if (c.width > 64) {
            error(c.width_span, "state width too large");
          }
          break;
        case Clause::Type::In:
          if (register_index(c.names[0])) {
            error(c.name_spans[0], "input '" + c.names[0] + "' clashes with a register name");
          }
          if (++ins > kMaxBits) error(c.span, "too many inputs");
          break;
        case Clause::Type::Next:
          if (!nexts.insert(c.names[0]).second) {
            error(c.name_spans[0], "duplicate next for '" + c.names[0] + "'");
          }
          break;
        case Clause::Type::Out:
          if (!out_names.insert(c.names[0]).second) {
            error(c.name_spans[0], "duplicate output '" + c.names[0] + "'");
          }
          if (++outs > kMaxBits) error(c.span, "too many outputs");
          break;
        case Clause::Type::Domain:
          not_allowed(c, kind);
          break;
      }
    }
    const std::string where = scope.name.empty() ? "kind " + kind : "domain " + scope.name;
    if (!state) error(scope.span, where + " requires a 'state' clause");
    if (outs == 0) error(scope.span, where + " requires an 'out' clause");
    unique_inputs(scope);

    const std::size_t width = scope.width();
    const auto inputs = scope.inputs();
    for (const auto& c : *scope.clauses) {
      if (c.type == Clause::Type::Next) {
        auto idx = register_index(c.names[0]);
        if (!idx || *idx >= width) {
          error(c.name_spans[0], "undeclared variable '" + c.names[0] + "'");
        }
      }
      if (c.expr) {
        check_vars(*c.expr, width, inputs, c.type == Clause::Type::Next ? peer : nullptr, peer);
      }
    }
  }

  void check_vars(const BoolExpr& e, std::size_t width, const std::vector<std::string>& inputs,
                  const ScopeView* readable_peer, const ScopeView* peer) {
    if (e.op == BoolExpr::Op::Var) {
      if (auto idx = register_index(e.name); idx && *idx < width) return;
      if (std::find(inputs.begin(), inputs.end(), e.name) != inputs.end()) return;
      if (peer) {
        if (auto idx = register_index(e.name, peer->name + "_q"); idx && *idx < peer->width()) {
          if (!readable_peer) {
            error(e.span, "output cannot read registers of domain " + peer->name);
          }
          return;
        }
      }
      error(e.span, "undeclared variable '" + e.name + "'");
      return;
    }
    for (const auto& a : e.args) {
      check_vars(a, width, inputs, readable_peer, peer);
    }
  }

  void multiclock() {
    std::vector<ScopeView> domains;
    std::set<std::string> names;
    for (const auto& c : ast_.clauses) {
      if (c.type != Clause::Type::Domain) {
        not_allowed(c, "multiclock");
        continue;
      }
      if (!names.insert(c.names[0]).second) {
        error(c.name_spans[0], "duplicate domain '" + c.names[0] + "'");
        continue;
      }
      if (domains.size() == 2) {
        error(c.span, "multiclock takes exactly two domains");
        continue;
      }
      domains.push_back({c.names[0], c.name_spans[0], &c.body});
    }
    if (domains.size() < 2) {
      error(ast_.name_span, "multiclock requires two domains");
      return;
    }
    sync_scope(domains[0], "multiclock", &domains[1]);
    sync_scope(domains[1], "multiclock", &domains[0]);
  }

  const CircuitAst& ast_;
  std::vector<ParseError> errors_;
};

// Printer --------------------------------------------------------------------

void print_expr(std::ostream& os, const BoolExpr& e) {
  switch (e.op) {
    case BoolExpr::Op::Zero: os << '0'; return;
    case BoolExpr::Op::One: os << '1'; return;
    case BoolExpr::Op::Var: os << e.name; return;
    default:
      os << operator_name(e.op) << '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) os << ", ";
        print_expr(os, e.args[i]);
      }
      os << ')';
  }
}

void print_clause(std::ostream& os, const Clause& c, const std::string& indent) {
  os << indent << clause_keyword(c.type);
  switch (c.type) {
    case Clause::Type::Clock:
      os << ' ' << c.names[0];
      if (c.names.size() > 1) os << ", " << c.names[1];
      break;
    case Clause::Type::State:
      os << ' ' << c.width << " init " << c.init;
      break;
    case Clause::Type::In:
      os << ' ' << c.names[0];
      break;
    case Clause::Type::Next:
    case Clause::Type::Out:
      os << ' ' << c.names[0] << " = ";
      print_expr(os, *c.expr);
      break;
    case Clause::Type::Domain:
      os << ' ' << c.names[0] << " {\n";
      for (const auto& sub : c.body) {
        print_clause(os, sub, indent + "  ");
      }
      os << indent << "}\n";
      return;
  }
  os << ";\n";
}

// Elaboration ----------------------------------------------------------------

struct Compiled {
  BoolExpr::Op op;
  std::size_t slot = 0;
  std::vector<Compiled> args;
};

std::uint8_t evaluate(const Compiled& e, const std::vector<std::uint8_t>& env) {
  switch (e.op) {
    case BoolExpr::Op::Zero: return 0;
    case BoolExpr::Op::One: return 1;
    case BoolExpr::Op::Var: return env[e.slot];
    case BoolExpr::Op::Not: return evaluate(e.args[0], env) ^ 1U;
    case BoolExpr::Op::And: {
      std::uint8_t v = 1;
      for (const auto& a : e.args) v &= evaluate(a, env);
      return v;
    }
    case BoolExpr::Op::Or: {
      std::uint8_t v = 0;
      for (const auto& a : e.args) v |= evaluate(a, env);
      return v;
    }
    case BoolExpr::Op::Xor: {
      std::uint8_t v = 0;
      for (const auto& a : e.args) v ^= evaluate(a, env);
      return v;
    }
  }
  return 0;
}

// Environment layout: own registers, then inputs, then peer registers.
struct SlotMap {
  std::size_t width = 0;
  std::vector<std::string> inputs;
  std::string peer_prefix;
  std::size_t peer_width = 0;

  std::optional<std::size_t> slot(const std::string& name, bool allow_peer) const {
    if (auto idx = register_index(name); idx && *idx < width) return *idx;
    auto it = std::find(inputs.begin(), inputs.end(), name);
    if (it != inputs.end()) return width + static_cast<std::size_t>(it - inputs.begin());
    if (allow_peer && !peer_prefix.empty()) {
      if (auto idx = register_index(name, peer_prefix); idx && *idx < peer_width) {
        return width + inputs.size() + *idx;
      }
    }
    return std::nullopt;
  }
};

Compiled compile(const BoolExpr& e, const SlotMap& slots, bool allow_peer) {
  Compiled c{e.op, 0, {}};
  if (e.op == BoolExpr::Op::Var) {
    auto s = slots.slot(e.name, allow_peer);
    if (!s) {
      throw ElaborationError(e.span, "expression references undeclared variable '" + e.name + "'");
    }
    c.slot = *s;
  }
  for (const auto& a : e.args) {
    c.args.push_back(compile(a, slots, allow_peer));
  }
  return c;
}

SlotMap slot_map(const ScopeView& scope, const ScopeView* peer) {
  SlotMap m;
  m.width = scope.width();
  m.inputs = scope.inputs();
  if (peer) {
    m.peer_prefix = peer->name + "_q";
    m.peer_width = peer->width();
  }
  return m;
}

SyncSpec build_sync(const ScopeView& scope, const ScopeView* peer) {
  const Clause* state = nullptr;
  for (const auto& c : *scope.clauses) {
    if (c.type == Clause::Type::State) state = &c;
  }
  if (!state || state->width == 0) {
    throw ElaborationError(scope.span, "synchronous scope without state");
  }
  if (state->init.size() != state->width) {
    throw ElaborationError(state->init_span,
                           "init has " + std::to_string(state->init.size()) +
                               " bits but state width is " + std::to_string(state->width));
  }
  const SlotMap slots = slot_map(scope, peer);
  const std::size_t width = slots.width;
  const std::size_t n_in = slots.inputs.size();
  const std::size_t peer_width = slots.peer_width;

  std::vector<std::optional<Compiled>> next(width);
  std::vector<Compiled> outs;
  for (const auto& c : *scope.clauses) {
    if (c.type == Clause::Type::Next) {
      auto idx = register_index(c.names[0]);
      if (!idx || *idx >= width) {
        throw ElaborationError(c.name_spans[0], "undeclared variable '" + c.names[0] + "'");
      }
      next[*idx] = compile(*c.expr, slots, true);
    } else if (c.type == Clause::Type::Out) {
      outs.push_back(compile(*c.expr, slots, false));
    }
  }

  SyncSpec spec;
  spec.register_count = width;
  for (char b : state->init) {
    spec.initial_state.push_back(b == '1' ? 1 : 0);
  }
  spec.input_alphabet = make_alphabet(Alphabet::bit_strings(n_in));
  spec.output_alphabet = make_alphabet(Alphabet::bit_strings(outs.size()));

  auto environment = [width, n_in, peer_width](const RegisterState& own, const RegisterState& peer_q,
                                               Symbol input) {
    std::vector<std::uint8_t> env(width + n_in + peer_width, 0);
    std::copy(own.begin(), own.end(), env.begin());
    for (std::size_t j = 0; j < n_in; ++j) {
      env[width + j] = static_cast<std::uint8_t>((input >> (n_in - 1 - j)) & 1U);
    }
    std::copy_n(peer_q.begin(), std::min(peer_q.size(), peer_width), env.begin() + width + n_in);
    return env;
  };
  spec.next_state = [next, environment](const RegisterState& own, const RegisterState& peer_q,
                                        Symbol input) {
    const auto env = environment(own, peer_q, input);
    RegisterState out = own;
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (next[i]) out[i] = evaluate(*next[i], env);
    }
    return out;
  };
  spec.output_fn = [outs, environment](const RegisterState& own, Symbol input) {
    const auto env = environment(own, {}, input);
    Symbol v = 0;
    for (const auto& o : outs) {
      v = static_cast<Symbol>((v << 1) | evaluate(o, env));
    }
    return v;
  };
  return spec;
}

}  // namespace

std::string to_string(CircuitKind kind) {
  for (const auto& [name, k] : kinds()) {
    if (k == kind) return std::string(name);
  }
  return "unknown";
}

std::optional<CircuitKind> kind_from_string(std::string_view name) {
  auto it = kinds().find(name);
  if (it == kinds().end()) return std::nullopt;
  return it->second;
}

bool operator==(const BoolExpr& a, const BoolExpr& b) {
  return a.op == b.op && a.name == b.name && a.args == b.args;
}

bool operator==(const Clause& a, const Clause& b) {
  return a.type == b.type && a.names == b.names && a.width == b.width && a.init == b.init &&
         a.expr == b.expr && a.body == b.body;
}

bool operator==(const CircuitAst& a, const CircuitAst& b) {
  return a.name == b.name && a.kind == b.kind && a.clauses == b.clauses;
}

CircuitAst parse(std::string_view text) {
  Parser parser(lex(text));
  CircuitAst ast = parser.file();
  Validator(ast).run();
  return ast;
}

std::string print(const CircuitAst& ast) {
  std::ostringstream os;
  os << "circuit " << ast.name << " {\n  kind " << to_string(ast.kind) << ";\n";
  for (const auto& c : ast.clauses) {
    print_clause(os, c, "  ");
  }
  os << "}\n";
  return os.str();
}

bool is_data_polymorphic(CircuitKind kind) {
  return kind == CircuitKind::Dff || kind == CircuitKind::Mux || kind == CircuitKind::AbMem;
}

CircuitElement elaborate(const CircuitAst& ast, const ElaborateOptions& options) {
  const Alphabet data = options.data_alphabet.value_or(Alphabet::binary());
  CircuitElement e;
  switch (ast.kind) {
    case CircuitKind::Dff:
      e = make_dff(data);
      break;
    case CircuitKind::SrLatch:
      e = make_sr_latch();
      break;
    case CircuitKind::Mux:
      e = make_mux(data);
      break;
    case CircuitKind::AbMem:
      e = make_abmem(data);
      break;
    case CircuitKind::Sync:
      e = make_sync(build_sync({"", ast.name_span, &ast.clauses}, nullptr));
      break;
    case CircuitKind::MultiClock: {
      std::vector<ScopeView> domains;
      for (const auto& c : ast.clauses) {
        if (c.type == Clause::Type::Domain) {
          domains.push_back({c.names[0], c.name_spans[0], &c.body});
        }
      }
      if (domains.size() != 2) {
        throw ElaborationError(ast.name_span, "multiclock requires two domains");
      }
      e = make_multiclock(build_sync(domains[0], &domains[1]),
                          build_sync(domains[1], &domains[0]));
      break;
    }
  }
  e.name = ast.name;
  return e;
}

CircuitAst parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError({1, 1, 1}, "cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace causal::dsl
