#pragma once

/**
 * A small construction-script language (.taxi files).
 *
 *   script    := stmt*
 *   stmt      := IDENT "=" expr | "assert_eq" expr expr | "render" STRING | "dump"
 *   expr      := literal | STRING | IDENT | NAME "(" [expr ("," expr)*] ")"
 *   literal   := rational | "(" rational "," rational ")"
 *   rational  := ["-"] (INT | INT "/" INT | DECIMAL)
 *
 * One statement per line, "#" starts a comment. Scripts have a single static
 * scope and no control flow. Evaluation is exact; assert_eq has no tolerance.
 */

#include "taxisect/errors.hpp"
#include "taxisect/geometry.hpp"
#include "taxisect/scene.hpp"

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace taxisect::script {

struct Location {
  int line = 1;
  int column = 1;
  std::string str() const { return std::to_string(line) + ":" + std::to_string(column); }
};

// Base for located script errors.
class ScriptError : public Error {
 public:
  ScriptError(Location where, const std::string& message)
      : Error(where.str() + ": " + message), where_(where), message_(message) {}
  const Location& where() const { return where_; }
  const std::string& message() const { return message_; }

 private:
  Location where_;
  std::string message_;
};

class SyntaxError : public ScriptError {
 public:
  using ScriptError::ScriptError;
};

class RuntimeError : public ScriptError {
 public:
  using ScriptError::ScriptError;
};

struct Expr;

struct RationalLit {
  std::string text;
  friend bool operator==(const RationalLit&, const RationalLit&) = default;
};
struct PairLit {
  RationalLit x;
  RationalLit y;
  friend bool operator==(const PairLit&, const PairLit&) = default;
};
struct StringLit {
  std::string value;
  friend bool operator==(const StringLit&, const StringLit&) = default;
};
struct Ident {
  std::string name;
  friend bool operator==(const Ident&, const Ident&) = default;
};
struct Call {
  std::string name;
  std::vector<Expr> args;
  friend bool operator==(const Call&, const Call&);
};

struct Expr {
  std::variant<RationalLit, PairLit, StringLit, Ident, Call> node;
  Location where;

  // Structural: locations are ignored.
  friend bool operator==(const Expr& lhs, const Expr& rhs) { return lhs.node == rhs.node; }
};

inline bool operator==(const Call& lhs, const Call& rhs) {
  return lhs.name == rhs.name && lhs.args == rhs.args;
}

struct Binding {
  std::string name;
  Expr value;
  friend bool operator==(const Binding&, const Binding&) = default;
};
struct AssertEq {
  Expr actual;
  Expr expected;
  friend bool operator==(const AssertEq&, const AssertEq&) = default;
};
struct Render {
  std::string path;
  friend bool operator==(const Render&, const Render&) = default;
};
struct Dump {
  friend bool operator==(const Dump&, const Dump&) = default;
};

struct Statement {
  std::variant<Binding, AssertEq, Render, Dump> node;
  Location where;

  friend bool operator==(const Statement& lhs, const Statement& rhs) { return lhs.node == rhs.node; }
};

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;
};

// Throws SyntaxError (syntax, unknown function, arity) with a location.
Script parse(std::string_view source);

// Canonical source text; parse(pretty_print(s)) == s.
std::string pretty_print(const Script& script);

using RayList = std::vector<Ray>;
using Value = std::variant<Rational, Point, Direction, Line, Ray, Segment, TaxicabCircle, RayList>;

std::string type_name(const Value& v);
std::string format_value(const Value& v);

class Env {
 public:
  // Throws RuntimeError on redefinition.
  void bind(const std::string& name, Value value, Location where);
  const Value* find(const std::string& name) const;
  const std::vector<std::string>& order() const { return order_; }
  const std::map<std::string, Value>& values() const { return values_; }

  friend bool operator==(const Env&, const Env&) = default;

 private:
  std::map<std::string, Value> values_;
  std::vector<std::string> order_;
};

struct AssertionFailure {
  Location where;
  std::string expected;
  std::string actual;
  std::string str() const {
    return where.str() + ": assert_eq failed: expected " + expected + ", actual " + actual;
  }
};

struct RenderRequest {
  std::string path;
  std::string svg;
};

struct ExecResult {
  Env env;
  Scene scene;
  std::vector<AssertionFailure> failures;
  std::vector<RenderRequest> renders;
  std::vector<std::string> dumps;  // env JSON snapshots, in order
};

// Runs every statement in order. Assertion failures are collected and
// execution continues; type errors, unbound names and kernel domain errors
// throw RuntimeError located inside the offending statement.
ExecResult execute(const Script& script);

std::string emit_json(const Env& env);

}  // namespace taxisect::script
