#pragma once

// The .kcir circuit description format.
//
//   file   := "circuit" IDENT "{" clause* "}"
//   clause := "kind" KIND ";"
//           | "clock" IDENT ("," IDENT)? ";"
//           | "state" INT "init" BITS ";"
//           | "in" IDENT ";"
//           | "next" IDENT "=" expr ";"
//           | "out" IDENT "=" expr ";"
//           | "domain" IDENT "{" clause* "}"
//   expr   := "0" | "1" | IDENT | ("not"|"and"|"or"|"xor") "(" expr ("," expr)* ")"
//
// KIND is one of dff, srlatch, mux, sync, multiclock, abmem. Comments run
// from '#' to end of line. Identifiers match [a-z][a-z0-9_]*. Registers of a
// sync scope are q0..q(n-1); character i of the init string is q_i. In a
// multiclock circuit a domain reads the other domain's registers as
// <domain>_q<i>.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "causal/circuit.hpp"

namespace causal::dsl {

/// 1-based line and column, length in bytes.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class DslError : public std::runtime_error {
 public:
  DslError(SourceSpan span, const std::string& message);
  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }

 private:
  SourceSpan span_;
  std::string message_;
};

class ParseError : public DslError {
 public:
  using DslError::DslError;
};

class ElaborationError : public DslError {
 public:
  using DslError::DslError;
};

enum class CircuitKind { Dff, SrLatch, Mux, Sync, MultiClock, AbMem };

std::string to_string(CircuitKind kind);
std::optional<CircuitKind> kind_from_string(std::string_view name);

/// Equality ignores spans.
struct BoolExpr {
  enum class Op { Zero, One, Var, Not, And, Or, Xor };

  Op op = Op::Zero;
  std::string name;  // Var only
  std::vector<BoolExpr> args;
  SourceSpan span;

  friend bool operator==(const BoolExpr& a, const BoolExpr& b);
};

struct Clause {
  enum class Type { Clock, State, In, Next, Out, Domain };

  Type type = Type::In;
  SourceSpan span;                      // keyword
  std::vector<std::string> names;       // clock names; in/next/out/domain name
  std::vector<SourceSpan> name_spans;
  std::size_t width = 0;                // state
  std::string init;                     // state
  SourceSpan width_span;
  SourceSpan init_span;
  std::optional<BoolExpr> expr;         // next/out
  std::vector<Clause> body;             // domain

  friend bool operator==(const Clause& a, const Clause& b);
};

/// The kind clause is lifted out of `clauses`; the rest keep source order.
struct CircuitAst {
  std::string name;
  SourceSpan name_span;
  CircuitKind kind = CircuitKind::Dff;
  SourceSpan kind_span;
  std::vector<Clause> clauses;

  friend bool operator==(const CircuitAst& a, const CircuitAst& b);
};

/// Parses and validates one circuit. Throws ParseError for the first error
/// in source order; no AST is returned on error.
CircuitAst parse(std::string_view text);

/// Canonical text; parse(print(ast)) == ast.
std::string print(const CircuitAst& ast);

struct ElaborateOptions {
  /// Data alphabet for dff, mux and abmem; binary when absent.
  std::optional<Alphabet> data_alphabet;
};

CircuitElement elaborate(const CircuitAst& ast, const ElaborateOptions& options = {});

/// Reads a file and parses it. Throws ParseError (span 1:1) when unreadable.
CircuitAst parse_file(const std::string& path);

/// True for kinds whose data channels accept any alphabet.
bool is_data_polymorphic(CircuitKind kind);

}  // namespace causal::dsl
