// Copyright 2026 The Volver Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "volver/xpath.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <string>

#include "volver/text.hpp"

namespace volver::html {

namespace {

enum class Tok {
  Slash, DoubleSlash, LBracket, RBracket, LParen, RParen, At, Comma, Eq, Ne,
  Dot, DotDot, Star, Name, Literal, Number, End
};

struct Token {
  Tok kind;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '/') {
      if (i + 1 < s.size() && s[i + 1] == '/') {
        out.push_back({Tok::DoubleSlash, "//"});
        i += 2;
      } else {
        out.push_back({Tok::Slash, "/"});
        ++i;
      }
    } else if (c == '[') {
      out.push_back({Tok::LBracket, "["}), ++i;
    } else if (c == ']') {
      out.push_back({Tok::RBracket, "]"}), ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "("}), ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")"}), ++i;
    } else if (c == '@') {
      out.push_back({Tok::At, "@"}), ++i;
    } else if (c == ',') {
      out.push_back({Tok::Comma, ","}), ++i;
    } else if (c == '*') {
      out.push_back({Tok::Star, "*"}), ++i;
    } else if (c == '=') {
      out.push_back({Tok::Eq, "="}), ++i;
    } else if (c == '!' && i + 1 < s.size() && s[i + 1] == '=') {
      out.push_back({Tok::Ne, "!="});
      i += 2;
    } else if (c == '.' && i + 1 < s.size() && s[i + 1] == '.') {
      out.push_back({Tok::DotDot, ".."});
      i += 2;
    } else if (c == '.' && !(i + 1 < s.size() &&
                             std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      out.push_back({Tok::Dot, "."}), ++i;
    } else if (c == '"' || c == '\'') {
      std::size_t end = s.find(c, i + 1);
      if (end == std::string_view::npos) throw XPathError("unterminated literal");
      out.push_back({Tok::Literal, std::string(s.substr(i + 1, end - i - 1))});
      i = end + 1;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = i;
      while (i < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
        ++i;
      }
      out.push_back({Tok::Number, std::string(s.substr(start, i - start))});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                              s[i] == '_' || s[i] == '-' || s[i] == '.' ||
                              s[i] == ':')) {
        ++i;
      }
      out.push_back({Tok::Name, std::string(s.substr(start, i - start))});
    } else {
      throw XPathError(std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, ""});
  return out;
}

}  // namespace

enum class XPathAxis { Child, Self, Parent, Attribute };
enum class XPathTest { Name, AnyElement, Text, AnyNode };

struct Step {
  XPathAxis axis = XPathAxis::Child;
  XPathTest test = XPathTest::AnyNode;
  std::string name;
  bool descendant = false;  // preceded by '//'
  std::vector<std::shared_ptr<const XPathExpr>> predicates;
};

struct XPathExpr {
  enum class Kind { Or, And, Eq, Ne, Literal, Number, Call, Path };
  Kind kind = Kind::Path;
  std::vector<std::shared_ptr<const XPathExpr>> args;
  std::string text;  // literal value or function name
  double number = 0;
  bool absolute = false;
  std::vector<Step> steps;
};

namespace {

using ExprPtr = std::shared_ptr<const XPathExpr>;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprPtr parse() {
    ExprPtr e = parse_or();
    if (peek().kind != Tok::End) {
      throw XPathError("unexpected token '" + peek().text + "'");
    }
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw XPathError(std::string("expected ") + what);
    ++pos_;
  }

  ExprPtr binary(XPathExpr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<XPathExpr>();
    e->kind = kind;
    e->args = {std::move(lhs), std::move(rhs)};
    return e;
  }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_and();
    while (peek().kind == Tok::Name && peek().text == "or") {
      ++pos_;
      lhs = binary(XPathExpr::Kind::Or, lhs, parse_and());
    }
    return lhs;
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_equality();
    while (peek().kind == Tok::Name && peek().text == "and") {
      ++pos_;
      lhs = binary(XPathExpr::Kind::And, lhs, parse_equality());
    }
    return lhs;
  }

  ExprPtr parse_equality() {
    ExprPtr lhs = parse_primary();
    while (peek().kind == Tok::Eq || peek().kind == Tok::Ne) {
      auto kind = take().kind == Tok::Eq ? XPathExpr::Kind::Eq : XPathExpr::Kind::Ne;
      lhs = binary(kind, lhs, parse_primary());
    }
    return lhs;
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    if (t.kind == Tok::Literal) {
      auto e = std::make_shared<XPathExpr>();
      e->kind = XPathExpr::Kind::Literal;
      e->text = take().text;
      return e;
    }
    if (t.kind == Tok::Number) {
      auto e = std::make_shared<XPathExpr>();
      e->kind = XPathExpr::Kind::Number;
      e->number = std::strtod(take().text.c_str(), nullptr);
      return e;
    }
    if (t.kind == Tok::LParen) {
      ++pos_;
      ExprPtr inner = parse_or();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Name && peek(1).kind == Tok::LParen && t.text != "text" &&
        t.text != "node") {
      auto e = std::make_shared<XPathExpr>();
      e->kind = XPathExpr::Kind::Call;
      e->text = take().text;
      static const std::set<std::string> known = {
          "contains", "starts-with", "not", "normalize-space", "string",
          "concat", "position", "last", "count"};
      if (!known.count(e->text)) throw XPathError("unknown function " + e->text + "()");
      ++pos_;
      if (peek().kind != Tok::RParen) {
        e->args.push_back(parse_or());
        while (peek().kind == Tok::Comma) {
          ++pos_;
          e->args.push_back(parse_or());
        }
      }
      expect(Tok::RParen, "')' after arguments");
      return e;
    }
    return parse_path();
  }

  bool starts_step() const {
    switch (peek().kind) {
      case Tok::Name:
      case Tok::Star:
      case Tok::At:
      case Tok::Dot:
      case Tok::DotDot:
        return true;
      default:
        return false;
    }
  }

  ExprPtr parse_path() {
    auto e = std::make_shared<XPathExpr>();
    e->kind = XPathExpr::Kind::Path;
    bool descendant = false;
    if (peek().kind == Tok::Slash) {
      ++pos_;
      e->absolute = true;
      if (!starts_step()) return e;
    } else if (peek().kind == Tok::DoubleSlash) {
      ++pos_;
      e->absolute = true;
      descendant = true;
    }
    if (!starts_step()) throw XPathError("expected a location step");
    while (true) {
      Step step = parse_step();
      step.descendant = descendant;
      e->steps.push_back(std::move(step));
      if (peek().kind == Tok::Slash) {
        descendant = false;
      } else if (peek().kind == Tok::DoubleSlash) {
        descendant = true;
      } else {
        break;
      }
      ++pos_;
    }
    return e;
  }

  Step parse_step() {
    Step step;
    Token t = take();
    switch (t.kind) {
      case Tok::Dot:
        step.axis = XPathAxis::Self;
        step.test = XPathTest::AnyNode;
        return step;
      case Tok::DotDot:
        step.axis = XPathAxis::Parent;
        step.test = XPathTest::AnyNode;
        return step;
      case Tok::At: {
        step.axis = XPathAxis::Attribute;
        Token n = take();
        if (n.kind == Tok::Star) {
          step.test = XPathTest::AnyElement;
        } else if (n.kind == Tok::Name) {
          step.test = XPathTest::Name;
          step.name = text::to_lower_ascii(n.text);
        } else {
          throw XPathError("expected attribute name after '@'");
        }
        break;
      }
      case Tok::Star:
        step.test = XPathTest::AnyElement;
        break;
      case Tok::Name:
        if ((t.text == "text" || t.text == "node") && peek().kind == Tok::LParen) {
          ++pos_;
          expect(Tok::RParen, "')'");
          step.test = t.text == "text" ? XPathTest::Text : XPathTest::AnyNode;
        } else {
          step.test = XPathTest::Name;
          step.name = text::to_lower_ascii(t.text);
        }
        break;
      default:
        throw XPathError("expected a location step");
    }
    while (peek().kind == Tok::LBracket) {
      ++pos_;
      step.predicates.push_back(parse_or());
      expect(Tok::RBracket, "']'");
    }
    return step;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

struct Item {
  const Node* node = nullptr;
  const Attribute* attr = nullptr;

  bool operator==(const Item&) const = default;
};

bool document_before(const Item& a, const Item& b) {
  if (a.node->order != b.node->order) return a.node->order < b.node->order;
  if (!a.attr || !b.attr) return !a.attr && b.attr;
  return a.attr < b.attr;
}

struct Value {
  enum class Type { Nodes, String, Number, Boolean } type = Type::Nodes;
  std::vector<Item> nodes;
  std::string str;
  double num = 0;
  bool boolean = false;
};

std::string string_value(const Item& item) {
  if (item.attr) return item.attr->value;
  if (item.node->type == NodeType::Text || item.node->type == NodeType::Comment) {
    return item.node->data;
  }
  return item.node->text_content();
}

double to_number(std::string_view s) {
  std::string t(text::trim(s));
  if (t.empty()) return std::numeric_limits<double>::quiet_NaN();
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) return std::numeric_limits<double>::quiet_NaN();
  return v;
}

std::string to_string(const Value& v) {
  switch (v.type) {
    case Value::Type::Nodes:
      return v.nodes.empty() ? std::string() : string_value(v.nodes.front());
    case Value::Type::String:
      return v.str;
    case Value::Type::Number: {
      if (std::isnan(v.num)) return "NaN";
      if (v.num == std::floor(v.num) && std::abs(v.num) < 1e15) {
        return std::to_string(static_cast<long long>(v.num));
      }
      return std::to_string(v.num);
    }
    case Value::Type::Boolean:
      return v.boolean ? "true" : "false";
  }
  return {};
}

double to_number(const Value& v) {
  switch (v.type) {
    case Value::Type::Number:
      return v.num;
    case Value::Type::Boolean:
      return v.boolean ? 1 : 0;
    default:
      return to_number(to_string(v));
  }
}

bool to_boolean(const Value& v) {
  switch (v.type) {
    case Value::Type::Nodes:
      return !v.nodes.empty();
    case Value::Type::String:
      return !v.str.empty();
    case Value::Type::Number:
      return v.num != 0 && !std::isnan(v.num);
    case Value::Type::Boolean:
      return v.boolean;
  }
  return false;
}

Value make_string(std::string s) {
  Value v;
  v.type = Value::Type::String;
  v.str = std::move(s);
  return v;
}
Value make_number(double n) {
  Value v;
  v.type = Value::Type::Number;
  v.num = n;
  return v;
}
Value make_bool(bool b) {
  Value v;
  v.type = Value::Type::Boolean;
  v.boolean = b;
  return v;
}

struct Context {
  Item item;
  std::size_t position = 1;
  std::size_t size = 1;
};

bool compare_values(const Value& a, const Value& b, bool equal) {
  auto cmp = [&](const std::string& x, const std::string& y) {
    return (x == y) == equal;
  };
  if (a.type == Value::Type::Nodes && b.type == Value::Type::Nodes) {
    for (const Item& x : a.nodes) {
      for (const Item& y : b.nodes) {
        if (cmp(string_value(x), string_value(y))) return true;
      }
    }
    return false;
  }
  if (a.type == Value::Type::Nodes || b.type == Value::Type::Nodes) {
    const Value& ns = a.type == Value::Type::Nodes ? a : b;
    const Value& other = a.type == Value::Type::Nodes ? b : a;
    if (other.type == Value::Type::Boolean) {
      return (to_boolean(ns) == other.boolean) == equal;
    }
    for (const Item& x : ns.nodes) {
      if (other.type == Value::Type::Number) {
        if ((to_number(string_value(x)) == other.num) == equal) return true;
      } else if (cmp(string_value(x), other.str)) {
        return true;
      }
    }
    return false;
  }
  if (a.type == Value::Type::Boolean || b.type == Value::Type::Boolean) {
    return (to_boolean(a) == to_boolean(b)) == equal;
  }
  if (a.type == Value::Type::Number || b.type == Value::Type::Number) {
    return (to_number(a) == to_number(b)) == equal;
  }
  return cmp(a.str, b.str);
}

Value evaluate(const XPathExpr& e, const Context& ctx);

void descendants_or_self(const Node* node, std::vector<const Node*>& out) {
  out.push_back(node);
  for (const auto& child : node->children) descendants_or_self(child.get(), out);
}

bool matches_test(const Step& step, const Node* node) {
  switch (step.test) {
    case XPathTest::Name:
      return node->is_element() && node->name == step.name;
    case XPathTest::AnyElement:
      return node->is_element();
    case XPathTest::Text:
      return node->type == NodeType::Text;
    case XPathTest::AnyNode:
      return true;
  }
  return false;
}

std::vector<Item> apply_step(const Step& step, const std::vector<Item>& input) {
  std::vector<Item> result;
  std::vector<const Node*> contexts;
  for (const Item& item : input) {
    if (item.attr) {
      if (!step.descendant && step.axis == XPathAxis::Self) result.push_back(item);
      if (!step.descendant && step.axis == XPathAxis::Parent) {
        result.push_back(Item{item.node, nullptr});
      }
      continue;
    }
    if (step.descendant) {
      descendants_or_self(item.node, contexts);
    } else {
      contexts.push_back(item.node);
    }
  }
  for (const Node* ctx : contexts) {
    std::vector<Item> candidates;
    switch (step.axis) {
      case XPathAxis::Child:
        for (const auto& child : ctx->children) {
          if (matches_test(step, child.get())) candidates.push_back({child.get(), nullptr});
        }
        break;
      case XPathAxis::Self:
        if (matches_test(step, ctx)) candidates.push_back({ctx, nullptr});
        break;
      case XPathAxis::Parent:
        if (ctx->parent && matches_test(step, ctx->parent)) {
          candidates.push_back({ctx->parent, nullptr});
        }
        break;
      case XPathAxis::Attribute:
        if (ctx->is_element()) {
          for (const auto& a : ctx->attributes) {
            if (step.test == XPathTest::AnyElement || a.name == step.name) {
              candidates.push_back({ctx, &a});
            }
          }
        }
        break;
    }
    for (const auto& pred : step.predicates) {
      std::vector<Item> kept;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        Value v = evaluate(*pred, Context{candidates[i], i + 1, candidates.size()});
        bool keep = v.type == Value::Type::Number
                        ? v.num == static_cast<double>(i + 1)
                        : to_boolean(v);
        if (keep) kept.push_back(candidates[i]);
      }
      candidates = std::move(kept);
    }
    result.insert(result.end(), candidates.begin(), candidates.end());
  }
  std::stable_sort(result.begin(), result.end(), document_before);
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

Value evaluate_path(const XPathExpr& e, const Context& ctx) {
  std::vector<Item> current;
  if (e.absolute) {
    const Node* root = ctx.item.node;
    while (root->parent) root = root->parent;
    current.push_back({root, nullptr});
  } else {
    current.push_back(ctx.item);
  }
  for (const Step& step : e.steps) {
    current = apply_step(step, current);
    if (current.empty()) break;
  }
  Value v;
  v.type = Value::Type::Nodes;
  v.nodes = std::move(current);
  return v;
}

Value call(const XPathExpr& e, const Context& ctx) {
  auto arg = [&](std::size_t i) { return evaluate(*e.args.at(i), ctx); };
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (e.args.size() < lo || e.args.size() > hi) {
      throw XPathError("wrong number of arguments to " + e.text + "()");
    }
  };
  const std::string& f = e.text;
  if (f == "contains") {
    arity(2, 2);
    return make_bool(to_string(arg(0)).find(to_string(arg(1))) != std::string::npos);
  }
  if (f == "starts-with") {
    arity(2, 2);
    return make_bool(to_string(arg(0)).rfind(to_string(arg(1)), 0) == 0);
  }
  if (f == "not") {
    arity(1, 1);
    return make_bool(!to_boolean(arg(0)));
  }
  if (f == "normalize-space" || f == "string") {
    arity(0, 1);
    std::string s = e.args.empty() ? string_value(ctx.item) : to_string(arg(0));
    return make_string(f == "string" ? s : text::collapse_whitespace(s));
  }
  if (f == "concat") {
    if (e.args.size() < 2) throw XPathError("concat() needs two arguments");
    std::string s;
    for (std::size_t i = 0; i < e.args.size(); ++i) s += to_string(arg(i));
    return make_string(std::move(s));
  }
  if (f == "position") {
    arity(0, 0);
    return make_number(static_cast<double>(ctx.position));
  }
  if (f == "last") {
    arity(0, 0);
    return make_number(static_cast<double>(ctx.size));
  }
  if (f == "count") {
    arity(1, 1);
    Value v = arg(0);
    if (v.type != Value::Type::Nodes) throw XPathError("count() needs a node-set");
    return make_number(static_cast<double>(v.nodes.size()));
  }
  throw XPathError("unknown function " + f + "()");
}

Value evaluate(const XPathExpr& e, const Context& ctx) {
  switch (e.kind) {
    case XPathExpr::Kind::Or:
      return make_bool(to_boolean(evaluate(*e.args[0], ctx)) ||
                       to_boolean(evaluate(*e.args[1], ctx)));
    case XPathExpr::Kind::And:
      return make_bool(to_boolean(evaluate(*e.args[0], ctx)) &&
                       to_boolean(evaluate(*e.args[1], ctx)));
    case XPathExpr::Kind::Eq:
    case XPathExpr::Kind::Ne:
      return make_bool(compare_values(evaluate(*e.args[0], ctx),
                                      evaluate(*e.args[1], ctx),
                                      e.kind == XPathExpr::Kind::Eq));
    case XPathExpr::Kind::Literal:
      return make_string(e.text);
    case XPathExpr::Kind::Number:
      return make_number(e.number);
    case XPathExpr::Kind::Call:
      return call(e, ctx);
    case XPathExpr::Kind::Path:
      return evaluate_path(e, ctx);
  }
  return {};
}

Value run(const XPathExpr& e, const Node& context) {
  Value v = evaluate(e, Context{Item{&context, nullptr}, 1, 1});
  return v;
}

}  // namespace

XPath XPath::compile(std::string_view expression) {
  XPath xp;
  xp.source_ = std::string(expression);
  xp.expr_ = Parser(tokenize(expression)).parse();
  return xp;
}

std::vector<const Node*> XPath::select(const Node& context) const {
  Value v = run(*expr_, context);
  std::vector<const Node*> out;
  if (v.type != Value::Type::Nodes) return out;
  for (const Item& item : v.nodes) {
    if (!item.attr) out.push_back(item.node);
  }
  return out;
}

std::vector<std::string> XPath::strings(const Node& context) const {
  Value v = run(*expr_, context);
  std::vector<std::string> out;
  if (v.type != Value::Type::Nodes) {
    out.push_back(text::collapse_whitespace(to_string(v)));
    return out;
  }
  for (const Item& item : v.nodes) {
    out.push_back(text::collapse_whitespace(string_value(item)));
  }
  return out;
}

const Node* XPath::first(const Node& context) const {
  auto nodes = select(context);
  return nodes.empty() ? nullptr : nodes.front();
}

std::vector<const Node*> select(const Node& context, std::string_view xpath) {
  return XPath::compile(xpath).select(context);
}

std::vector<std::string> select_strings(const Node& context,
                                        std::string_view xpath) {
  return XPath::compile(xpath).strings(context);
}

}  // namespace volver::html
