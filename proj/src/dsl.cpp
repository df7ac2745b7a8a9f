#include "rdi/dsl.hpp"

#include <cctype>

namespace rdi::dsl {

namespace {

using NodePtr = std::shared_ptr<const Node>;

const std::map<std::string, Function, std::less<>>& function_table() {
  static const std::map<std::string, Function, std::less<>> table = {
      {"exp", Function::Exp},       {"sqrt", Function::Sqrt},       {"sin", Function::Sin},
      {"cos", Function::Cos},       {"arcsin", Function::Arcsin},   {"arctan", Function::Arctan},
      {"arcsinh", Function::Arcsinh}, {"log", Function::Log}};
  return table;
}

struct Token {
  enum class Kind { Number, Identifier, Operator, LeftParen, RightParen, End };
  Kind kind;
  std::size_t offset;
  std::string text;
};

bool is_ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool is_ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }
bool is_digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(ch) || (ch == '.' && i + 1 < src.size() && is_digit(src[i + 1]))) {
      while (i < src.size() && is_digit(src[i])) ++i;
      if (i < src.size() && src[i] == '.') {
        ++i;
        while (i < src.size() && is_digit(src[i])) ++i;
      }
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
        if (j < src.size() && is_digit(src[j])) {
          i = j;
          while (i < src.size() && is_digit(src[i])) ++i;
        }
      }
      out.push_back({Token::Kind::Number, start, std::string(src.substr(start, i - start))});
    } else if (is_ident_start(ch)) {
      while (i < src.size() && is_ident_char(src[i])) ++i;
      out.push_back({Token::Kind::Identifier, start, std::string(src.substr(start, i - start))});
    } else if (ch == '+' || ch == '-' || ch == '*' || ch == '/' || ch == '^') {
      out.push_back({Token::Kind::Operator, start, std::string(1, ch)});
      ++i;
    } else if (ch == '(') {
      out.push_back({Token::Kind::LeftParen, start, "("});
      ++i;
    } else if (ch == ')') {
      out.push_back({Token::Kind::RightParen, start, ")"});
      ++i;
    } else {
      throw SyntaxError(std::string("unexpected character '") + ch + "'", start);
    }
  }
  out.push_back({Token::Kind::End, src.size(), ""});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const std::set<std::string>& parameters)
      : tokens_(tokenize(src)), parameters_(parameters) {}

  NodePtr parse() {
    NodePtr e = additive();
    if (peek().kind != Token::Kind::End) unexpected(peek());
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool at_operator(char op) const {
    return peek().kind == Token::Kind::Operator && peek().text[0] == op;
  }

  [[noreturn]] static void unexpected(const Token& t) {
    if (t.kind == Token::Kind::End) throw SyntaxError("unexpected end of expression", t.offset);
    throw SyntaxError("unexpected '" + t.text + "'", t.offset);
  }

  static NodePtr binary(char op, NodePtr l, NodePtr r, std::size_t offset) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Binary;
    n->op = op;
    n->offset = offset;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  NodePtr additive() {
    NodePtr l = multiplicative();
    while (at_operator('+') || at_operator('-')) {
      const Token& op = next();
      l = binary(op.text[0], l, multiplicative(), op.offset);
    }
    return l;
  }

  NodePtr multiplicative() {
    NodePtr l = unary();
    while (at_operator('*') || at_operator('/')) {
      const Token& op = next();
      l = binary(op.text[0], l, unary(), op.offset);
    }
    return l;
  }

  NodePtr unary() {
    if (at_operator('-')) {
      const Token& op = next();
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Negate;
      n->offset = op.offset;
      n->lhs = unary();
      return n;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (at_operator('^')) {
      const Token& op = next();
      return binary('^', base, unary(), op.offset);
    }
    return base;
  }

  NodePtr primary() {
    const Token& t = next();
    auto n = std::make_shared<Node>();
    n->offset = t.offset;
    switch (t.kind) {
      case Token::Kind::Number:
        n->kind = Node::Kind::Number;
        n->text = t.text;
        n->number = parse_real(t.text);
        return n;
      case Token::Kind::LeftParen: {
        NodePtr inner = additive();
        if (peek().kind != Token::Kind::RightParen) {
          if (peek().kind == Token::Kind::End)
            throw SyntaxError("missing ')'", peek().offset);
          unexpected(peek());
        }
        next();
        return inner;
      }
      case Token::Kind::Identifier: {
        if (peek().kind == Token::Kind::LeftParen) {
          const auto f = function_table().find(t.text);
          if (f == function_table().end()) throw UnknownIdentifierError(t.text, t.offset);
          next();
          n->kind = Node::Kind::Call;
          n->text = t.text;
          n->function = f->second;
          n->lhs = additive();
          if (peek().kind != Token::Kind::RightParen) {
            if (peek().kind == Token::Kind::End)
              throw SyntaxError("missing ')'", peek().offset);
            unexpected(peek());
          }
          next();
          return n;
        }
        if (!coordinate_names().count(t.text) && !constant_names().count(t.text) &&
            !parameters_.count(t.text))
          throw UnknownIdentifierError(t.text, t.offset);
        n->kind = Node::Kind::Identifier;
        n->text = t.text;
        return n;
      }
      default:
        unexpected(t);
    }
  }

  std::vector<Token> tokens_;
  const std::set<std::string>& parameters_;
  std::size_t pos_ = 0;
};

// Binding strength used by the printer: + - < * / < unary minus < ^ < atoms.
int precedence(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Negate: return 3;
    case Node::Kind::Binary:
      if (n.op == '+' || n.op == '-') return 1;
      if (n.op == '*' || n.op == '/') return 2;
      return 4;
    default: return 5;
  }
}

void print(const Node& n, int min_prec, std::string& out) {
  const bool wrap = precedence(n) < min_prec;
  if (wrap) out += '(';
  switch (n.kind) {
    case Node::Kind::Number:
    case Node::Kind::Identifier:
      out += n.text;
      break;
    case Node::Kind::Negate:
      out += '-';
      print(*n.lhs, 3, out);
      break;
    case Node::Kind::Call:
      out += n.text;
      out += '(';
      print(*n.lhs, 0, out);
      out += ')';
      break;
    case Node::Kind::Binary:
      if (n.op == '^') {
        print(*n.lhs, 5, out);
        out += '^';
        print(*n.rhs, 3, out);
      } else if (n.op == '+' || n.op == '-') {
        print(*n.lhs, 1, out);
        out += n.op == '+' ? " + " : " - ";
        print(*n.rhs, 2, out);
      } else {
        print(*n.lhs, 2, out);
        out += n.op;
        print(*n.rhs, 3, out);
      }
      break;
  }
  if (wrap) out += ')';
}

void collect(const Node& n, std::set<std::string>& out) {
  if (n.kind == Node::Kind::Identifier) out.insert(n.text);
  if (n.lhs) collect(*n.lhs, out);
  if (n.rhs) collect(*n.rhs, out);
}

}  // namespace

const std::set<std::string>& coordinate_names() {
  static const std::set<std::string> names = {"t", "x", "y", "z"};
  return names;
}

const std::set<std::string>& constant_names() {
  static const std::set<std::string> names = {"hbar", "c", "e", "m", "epsilon0", "pi"};
  return names;
}

std::set<std::string> Expr::identifiers() const {
  std::set<std::string> out;
  if (root_) collect(*root_, out);
  return out;
}

std::string Expr::to_string() const {
  std::string out;
  if (root_) print(*root_, 0, out);
  return out;
}

Expr parse(std::string_view source, const std::set<std::string>& parameters) {
  return Expr(Parser(source, parameters).parse());
}

}  // namespace rdi::dsl
