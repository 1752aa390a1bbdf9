#include "taxisect/script.hpp"

#include "taxisect/angles.hpp"
#include "taxisect/constructions.hpp"
#include "taxisect/json_io.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <sstream>

namespace taxisect::script {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, Number, String, LParen, RParen, Comma, Slash, Equals, Minus, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  Location where;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blanks();
      Location at = here();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", at});
        return out;
      }
      char c = src_[pos_];
      if (c == '\n') {
        advance();
        out.push_back({Tok::Newline, "\\n", at});
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          advance();
        }
        out.push_back({Tok::Ident, std::string(src_.substr(start, pos_ - start)), at});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back({Tok::Number, number(), at});
      } else if (c == '"') {
        out.push_back({Tok::String, string_literal(at), at});
      } else {
        advance();
        switch (c) {
          case '(': out.push_back({Tok::LParen, "(", at}); break;
          case ')': out.push_back({Tok::RParen, ")", at}); break;
          case ',': out.push_back({Tok::Comma, ",", at}); break;
          case '/': out.push_back({Tok::Slash, "/", at}); break;
          case '=': out.push_back({Tok::Equals, "=", at}); break;
          case '-': out.push_back({Tok::Minus, "-", at}); break;
          default: throw SyntaxError(at, std::string("unexpected character '") + c + "'");
        }
      }
    }
  }

 private:
  Location here() const { return {line_, column_}; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blanks() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string number() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
    };
    digits();
    if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      advance();
      digits();
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  std::string string_literal(Location at) {
    advance();  // opening quote
    std::string out;
    while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size() &&
          (src_[pos_ + 1] == '"' || src_[pos_ + 1] == '\\')) {
        advance();
      }
      out += src_[pos_];
      advance();
    }
    if (pos_ >= src_.size() || src_[pos_] != '"') throw SyntaxError(at, "unterminated string");
    advance();
    return out;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// ---------------------------------------------------------------------------
// Parser

struct Arity {
  std::size_t min;
  std::size_t max;
};

const std::map<std::string, Arity>& builtins() {
  static const std::map<std::string, Arity> table = {
      {"point", {2, 2}},     {"dir", {2, 2}},     {"segment", {2, 2}}, {"ray", {2, 2}},
      {"line_through", {2, 2}}, {"circle", {2, 2}}, {"tdist", {2, 2}},  {"edist2", {2, 2}},
      {"intersect", {2, 3}}, {"vertex", {2, 2}},  {"nsect", {3, 3}},   {"section", {4, 5}},
      {"measure", {3, 3}},   {"param", {1, 1}},
  };
  return table;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Script run() {
    Script script;
    while (true) {
      while (peek().kind == Tok::Newline) ++pos_;
      if (peek().kind == Tok::End) return script;
      script.statements.push_back(statement());
      if (peek().kind != Tok::Newline && peek().kind != Tok::End) {
        throw SyntaxError(peek().where, "expected end of line, found '" + peek().text + "'");
      }
    }
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw SyntaxError(peek().where, std::string("expected ") + what + ", found " + describe(peek()));
    }
    return toks_[pos_++];
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    if (t.kind == Tok::Newline) return "end of line";
    return "'" + t.text + "'";
  }

  Statement statement() {
    const Token& head = expect(Tok::Ident, "a statement");
    Location at = head.where;
    if (head.text == "assert_eq") {
      Expr actual = expr();
      Expr expected = expr();
      return {AssertEq{std::move(actual), std::move(expected)}, at};
    }
    if (head.text == "render") {
      const Token& path = expect(Tok::String, "a quoted path after render");
      return {Render{path.text}, at};
    }
    if (head.text == "dump") return {Dump{}, at};
    expect(Tok::Equals, "'=' after identifier");
    return {Binding{head.text, expr()}, at};
  }

  RationalLit rational() {
    std::string text;
    if (peek().kind == Tok::Minus) {
      ++pos_;
      text = "-";
    }
    const Token& whole = expect(Tok::Number, "a number");
    text += whole.text;
    if (peek().kind == Tok::Slash) {
      if (whole.text.find('.') != std::string::npos) {
        throw SyntaxError(peek().where, "a decimal cannot have a denominator");
      }
      ++pos_;
      const Token& den = expect(Tok::Number, "a denominator");
      if (den.text.find('.') != std::string::npos) {
        throw SyntaxError(den.where, "denominator must be an integer");
      }
      text += "/" + den.text;
    }
    return {text};
  }

  Expr expr() {
    const Token& t = peek();
    Location at = t.where;
    switch (t.kind) {
      case Tok::Minus:
      case Tok::Number:
        return {rational(), at};
      case Tok::String:
        ++pos_;
        return {StringLit{t.text}, at};
      case Tok::LParen: {
        ++pos_;
        RationalLit x = rational();
        expect(Tok::Comma, "',' in point literal");
        RationalLit y = rational();
        expect(Tok::RParen, "')' closing point literal");
        return {PairLit{std::move(x), std::move(y)}, at};
      }
      case Tok::Ident: {
        ++pos_;
        // "f(" is a call; "x (" only when x is a builtin, so "assert_eq C (1, 2)" reads as two operands
        const Token& next = peek();
        bool adjacent = next.where.line == at.line && next.where.column == at.column + static_cast<int>(t.text.size());
        if (next.kind != Tok::LParen || (!adjacent && !builtins().contains(t.text))) return {Ident{t.text}, at};
        return {call(t), at};
      }
      default:
        throw SyntaxError(at, "expected an expression, found " + describe(t));
    }
  }

  Call call(const Token& name) {
    auto it = builtins().find(name.text);
    if (it == builtins().end()) throw SyntaxError(name.where, "unknown function '" + name.text + "'");
    expect(Tok::LParen, "'('");
    Call c{name.text, {}};
    if (peek().kind != Tok::RParen) {
      c.args.push_back(expr());
      while (peek().kind == Tok::Comma) {
        ++pos_;
        c.args.push_back(expr());
      }
    }
    expect(Tok::RParen, "')' closing argument list");
    const Arity& arity = it->second;
    if (c.args.size() < arity.min || c.args.size() > arity.max) {
      std::string wanted = arity.min == arity.max
                               ? std::to_string(arity.min)
                               : std::to_string(arity.min) + " to " + std::to_string(arity.max);
      throw SyntaxError(name.where, name.text + " takes " + wanted + " argument(s), got " +
                                        std::to_string(c.args.size()));
    }
    return c;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printing

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string print(const Expr& e) {
  struct {
    std::string operator()(const RationalLit& r) const { return r.text; }
    std::string operator()(const PairLit& p) const { return "(" + p.x.text + ", " + p.y.text + ")"; }
    std::string operator()(const StringLit& s) const { return quote(s.value); }
    std::string operator()(const Ident& i) const { return i.name; }
    std::string operator()(const Call& c) const {
      std::string out = c.name + "(";
      for (std::size_t i = 0; i < c.args.size(); ++i) out += (i ? ", " : "") + print(c.args[i]);
      return out + ")";
    }
  } visitor;
  return std::visit(visitor, e.node);
}

// ---------------------------------------------------------------------------
// Evaluation

// Values plus the string arguments some builtins take.
using Operand = std::variant<Value, std::string>;

class Interpreter {
 public:
  ExecResult run(const Script& script) {
    for (const Statement& s : script.statements) statement(s);
    return std::move(result_);
  }

 private:
  [[noreturn]] static void fail(const Location& at, const std::string& message) {
    throw RuntimeError(at, message);
  }

  void statement(const Statement& s) {
    if (const auto* b = std::get_if<Binding>(&s.node)) {
      Value v = value(b->value);
      result_.env.bind(b->name, v, s.where);
      draw(b->name, v);
    } else if (const auto* a = std::get_if<AssertEq>(&s.node)) {
      Value actual = value(a->actual);
      Value expected = value(a->expected);
      if (!same(actual, expected, a->expected.where)) {
        result_.failures.push_back({s.where, format_value(expected), format_value(actual)});
      }
    } else if (const auto* r = std::get_if<Render>(&s.node)) {
      result_.renders.push_back({r->path, emit_svg(result_.scene)});
    } else {
      result_.dumps.push_back(emit_json(result_.env));
    }
  }

  static bool same(const Value& actual, const Value& expected, const Location& at) {
    auto vec = [](const Value& v) -> std::optional<Point> {
      if (const auto* p = std::get_if<Point>(&v)) return *p;
      if (const auto* d = std::get_if<Direction>(&v)) return d->vec();
      return std::nullopt;
    };
    if (actual.index() == expected.index()) return actual == expected;
    auto lhs = vec(actual);
    auto rhs = vec(expected);
    if (lhs && rhs) return *lhs == *rhs;
    fail(at, "cannot compare " + type_name(actual) + " with " + type_name(expected));
  }

  void draw(const std::string& name, const Value& v) {
    Scene& scene = result_.scene;
    const Style aux{StrokeWidth::Thin, Dash::Dashed, LabelPlacement::NE};
    if (const auto* p = std::get_if<Point>(&v)) scene.add(*p, name);
    if (const auto* s = std::get_if<Segment>(&v)) scene.add(*s, name);
    if (const auto* l = std::get_if<Line>(&v)) scene.add(LineSpan{*l, std::nullopt}, name, aux);
    if (const auto* r = std::get_if<Ray>(&v)) scene.add(RaySpan{*r}, name);
    if (const auto* c = std::get_if<TaxicabCircle>(&v)) scene.add(*c, name, {StrokeWidth::Thin});
    if (const auto* rays = std::get_if<RayList>(&v)) {
      for (std::size_t i = 0; i < rays->size(); ++i) {
        scene.add(RaySpan{(*rays)[i]}, name + "[" + std::to_string(i) + "]", aux);
      }
    }
  }

  Value value(const Expr& e) {
    Operand op = operand(e);
    if (auto* v = std::get_if<Value>(&op)) return std::move(*v);
    fail(e.where, "a string is not a value here");
  }

  Rational rational(const RationalLit& lit, const Location& at) {
    try {
      return Rational::parse(lit.text);
    } catch (const DivisionByZero&) {
      fail(at, "division by zero in literal " + lit.text);
    }
  }

  Operand operand(const Expr& e) {
    if (const auto* r = std::get_if<RationalLit>(&e.node)) return Value{rational(*r, e.where)};
    if (const auto* p = std::get_if<PairLit>(&e.node)) {
      return Value{Point{rational(p->x, e.where), rational(p->y, e.where)}};
    }
    if (const auto* s = std::get_if<StringLit>(&e.node)) return s->value;
    if (const auto* i = std::get_if<Ident>(&e.node)) {
      const Value* v = result_.env.find(i->name);
      if (v == nullptr) fail(e.where, "unbound identifier '" + i->name + "'");
      return *v;
    }
    const auto& c = std::get<Call>(e.node);
    std::vector<Operand> args;
    for (const Expr& a : c.args) args.push_back(operand(a));
    try {
      return Value{apply(c, args, e.where)};
    } catch (const ScriptError&) {
      throw;
    } catch (const Error& err) {
      fail(e.where, std::string(c.name) + ": " + err.what());
    }
  }

  // -- argument coercion ----------------------------------------------------

  struct Args {
    const Call& call;
    const std::vector<Operand>& ops;
    Location at;

    Location where(std::size_t i) const { return call.args[i].where; }

    const Value& val(std::size_t i) const {
      if (const auto* v = std::get_if<Value>(&ops[i])) return *v;
      fail(where(i), call.name + ": argument " + std::to_string(i + 1) + " must not be a string");
    }

    template <typename T>
    const T& as(std::size_t i, const char* wanted) const {
      const Value& v = val(i);
      if (const auto* t = std::get_if<T>(&v)) return *t;
      fail(where(i), call.name + ": argument " + std::to_string(i + 1) + " must be a " + wanted +
                         ", got " + type_name(v));
    }

    const Rational& num(std::size_t i) const { return as<Rational>(i, "rational"); }
    const Point& pt(std::size_t i) const { return as<Point>(i, "point"); }

    Direction dir(std::size_t i) const {
      const Value& v = val(i);
      if (const auto* d = std::get_if<Direction>(&v)) return *d;
      if (const auto* p = std::get_if<Point>(&v)) {
        if (p->x.is_zero() && p->y.is_zero()) fail(where(i), call.name + ": zero direction");
        return Direction::of(*p);
      }
      fail(where(i), call.name + ": argument " + std::to_string(i + 1) +
                         " must be a direction, got " + type_name(v));
    }

    int integer(std::size_t i) const {
      const Rational& r = num(i);
      if (!r.is_integer() || r.num() > std::numeric_limits<int>::max() ||
          r.num() < std::numeric_limits<int>::min()) {
        fail(where(i), call.name + ": argument " + std::to_string(i + 1) + " must be an integer");
      }
      return static_cast<int>(r.num());
    }

    const std::string& str(std::size_t i) const {
      if (const auto* s = std::get_if<std::string>(&ops[i])) return *s;
      fail(where(i), call.name + ": argument " + std::to_string(i + 1) + " must be a string");
    }
  };

  Value intersect(const Args& a) {
    const Value& x = a.val(0);
    const Value& y = a.val(1);
    IntersectionResult r;
    auto circle_with = [&](const Value& other, const TaxicabCircle& c) -> std::optional<IntersectionResult> {
      if (const auto* l = std::get_if<Line>(&other)) return intersect_line_circle(*l, c);
      if (const auto* ray = std::get_if<Ray>(&other)) return intersect_ray_circle(*ray, c);
      return std::nullopt;
    };
    const auto* lx = std::get_if<Line>(&x);
    const auto* ly = std::get_if<Line>(&y);
    if (lx && ly) {
      r = intersect_lines(*lx, *ly);
    } else if (const auto* c = std::get_if<TaxicabCircle>(&y); c && circle_with(x, *c)) {
      r = *circle_with(x, *c);
    } else if (const auto* c2 = std::get_if<TaxicabCircle>(&x); c2 && circle_with(y, *c2)) {
      r = *circle_with(y, *c2);
    } else {
      fail(a.at, "intersect: unsupported operands " + type_name(x) + " and " + type_name(y));
    }

    auto pts = points_of(r);
    if (a.ops.size() == 3) {
      int k = a.integer(2);
      if (k < 0 || static_cast<std::size_t>(k) >= pts.size()) {
        fail(a.where(2), "intersect: index " + std::to_string(k) + " out of range (" + describe(r) + ")");
      }
      return pts[static_cast<std::size_t>(k)];
    }
    if (const auto* o = std::get_if<OverlapSegment>(&r)) return o->segment;
    if (pts.size() == 1) return pts[0];
    if (pts.empty()) fail(a.at, "intersect: no intersection");
    fail(a.at, "intersect: two intersection points (" + describe(r) + "); pass an index");
  }

  Value apply(const Call& c, const std::vector<Operand>& ops, const Location& at) {
    Args a{c, ops, at};
    const std::string& f = c.name;
    if (f == "point") return Point{a.num(0), a.num(1)};
    if (f == "dir") return Direction(a.num(0), a.num(1));
    if (f == "segment") return Segment(a.pt(0), a.pt(1));
    if (f == "ray") return Ray{a.pt(0), a.dir(1)};
    if (f == "line_through") return line_through(a.pt(0), a.pt(1));
    if (f == "circle") return TaxicabCircle(a.pt(0), a.num(1));
    if (f == "tdist") return taxicab_distance(a.pt(0), a.pt(1));
    if (f == "edist2") return euclidean_distance_squared(a.pt(0), a.pt(1));
    if (f == "intersect") return intersect(a);
    if (f == "vertex") {
      const std::string& which = a.str(1);
      static const std::map<std::string, Compass> names = {
          {"N", Compass::North}, {"S", Compass::South}, {"E", Compass::East}, {"W", Compass::West}};
      auto it = names.find(which);
      if (it == names.end()) fail(a.where(1), "vertex: expected \"N\", \"S\", \"E\" or \"W\"");
      return circle_vertex(a.as<TaxicabCircle>(0, "circle"), it->second);
    }
    if (f == "nsect") {
      auto result = nsect_segment(a.pt(0), a.pt(1), a.integer(2));
      Scene construction = scene_from_trace(result.trace);
      for (SceneItem& item : construction.items) item.label.clear();
      result_.scene.append(construction);
      return result.point;
    }
    if (f == "section") {
      Rational radius = ops.size() == 5 ? a.num(4) : Rational(1);
      auto result = section_angle(Angle{a.pt(0), a.dir(1), a.dir(2)}, a.integer(3), radius);
      return result.rays;
    }
    if (f == "measure") return measure_angle(Angle{a.pt(0), a.dir(1), a.dir(2)});
    if (f == "param") return direction_to_param(a.dir(0)).value();
    fail(at, "unknown function '" + f + "'");
  }

  ExecResult result_;
};

nlohmann::json json_of_value(const Value& v) {
  struct {
    nlohmann::json operator()(const Rational& r) const { return json_of(r); }
    nlohmann::json operator()(const Point& p) const { return json_of(p); }
    nlohmann::json operator()(const Direction& d) const { return json_of(d); }
    nlohmann::json operator()(const Line& l) const { return json_of(l); }
    nlohmann::json operator()(const Ray& r) const { return json_of(r); }
    nlohmann::json operator()(const Segment& s) const { return json_of(s); }
    nlohmann::json operator()(const TaxicabCircle& c) const { return json_of(c); }
    nlohmann::json operator()(const RayList& rays) const {
      nlohmann::json out = nlohmann::json::array();
      for (const Ray& r : rays) out.push_back(json_of(r));
      return out;
    }
  } visitor;
  return std::visit(visitor, v);
}

}  // namespace

Script parse(std::string_view source) { return Parser(Lexer(source).run()).run(); }

std::string pretty_print(const Script& script) {
  std::ostringstream os;
  for (const Statement& s : script.statements) {
    if (const auto* b = std::get_if<Binding>(&s.node)) {
      os << b->name << " = " << print(b->value);
    } else if (const auto* a = std::get_if<AssertEq>(&s.node)) {
      os << "assert_eq " << print(a->actual) << " " << print(a->expected);
    } else if (const auto* r = std::get_if<Render>(&s.node)) {
      os << "render " << quote(r->path);
    } else {
      os << "dump";
    }
    os << "\n";
  }
  return os.str();
}

std::string type_name(const Value& v) {
  static const char* const names[] = {"rational", "point", "direction", "line",
                                      "ray",      "segment", "circle",  "raylist"};
  return names[v.index()];
}

std::string format_value(const Value& v) {
  struct {
    std::string operator()(const Rational& r) const { return r.str(); }
    std::string operator()(const Point& p) const { return p.str(); }
    std::string operator()(const Direction& d) const {
      return "dir(" + d.dx().str() + ", " + d.dy().str() + ")";
    }
    std::string operator()(const Line& l) const { return l.str(); }
    std::string operator()(const Ray& r) const {
      return "ray(" + r.origin.str() + ", dir(" + r.dir.dx().str() + ", " + r.dir.dy().str() + "))";
    }
    std::string operator()(const Segment& s) const {
      return "segment(" + s.p().str() + ", " + s.q().str() + ")";
    }
    std::string operator()(const TaxicabCircle& c) const {
      return "circle(" + c.center().str() + ", " + c.radius().str() + ")";
    }
    std::string operator()(const RayList& rays) const {
      std::string out = "[";
      for (std::size_t i = 0; i < rays.size(); ++i) out += (i ? ", " : "") + (*this)(rays[i]);
      return out + "]";
    }
  } visitor;
  return std::visit(visitor, v);
}

void Env::bind(const std::string& name, Value value, Location where) {
  if (values_.count(name) != 0) throw RuntimeError(where, "'" + name + "' is already defined");
  values_.emplace(name, std::move(value));
  order_.push_back(name);
}

const Value* Env::find(const std::string& name) const {
  auto it = values_.find(name);
  return it == values_.end() ? nullptr : &it->second;
}

ExecResult execute(const Script& script) { return Interpreter().run(script); }

std::string emit_json(const Env& env) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [name, v] : env.values()) out[name] = json_of_value(v);
  return canonical_dump(out);
}

}  // namespace taxisect::script
