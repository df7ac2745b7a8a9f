#pragma once

// Expression language for state parametrizations in configuration files:
// literals, identifiers, + - * / ^, unary minus and a fixed set of functions,
// evaluated over jets so derivatives come out exactly.

#include "rdi/errors.hpp"
#include "rdi/jet.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace rdi::dsl {

enum class Function { Exp, Sqrt, Sin, Cos, Arcsin, Arctan, Arcsinh, Log };

struct Node {
  enum class Kind { Number, Identifier, Negate, Call, Binary };

  Kind kind;
  std::size_t offset = 0;  ///< byte position in the source
  Real number{0};
  std::string text;  ///< literal spelling, identifier or function name
  Function function = Function::Exp;
  char op = 0;  ///< one of + - * / ^
  std::shared_ptr<const Node> lhs, rhs;
};

/// Immutable, cheaply copyable syntax tree.
class Expr {
 public:
  Expr() = default;
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  const Node& root() const { return *root_; }
  explicit operator bool() const { return static_cast<bool>(root_); }

  /// Identifiers the expression refers to, sorted.
  std::set<std::string> identifiers() const;
  /// Canonical text with the fewest parentheses that reparse to the same tree.
  std::string to_string() const;

 private:
  std::shared_ptr<const Node> root_;
};

/// t, x, y, z.
const std::set<std::string>& coordinate_names();
/// hbar, c, e, m, epsilon0, pi.
const std::set<std::string>& constant_names();

/// Parses `source`. Identifiers must be coordinates, constants or one of
/// `parameters`; anything else raises UnknownIdentifierError.
Expr parse(std::string_view source, const std::set<std::string>& parameters = {});

template <int N>
using Bindings = std::map<std::string, Jet<Real, N>, std::less<>>;

namespace detail {

template <int N>
Jet<Real, N> apply(Function f, const Jet<Real, N>& x) {
  switch (f) {
    case Function::Exp: return exp(x);
    case Function::Sqrt: return sqrt(x);
    case Function::Sin: return sin(x);
    case Function::Cos: return cos(x);
    case Function::Arcsin: return asin(x);
    case Function::Arctan: return atan(x);
    case Function::Arcsinh: return asinh(x);
    case Function::Log: return log(x);
  }
  throw Error("unknown function");
}

template <int N>
bool is_constant(const Jet<Real, N>& x) {
  if constexpr (N >= 1)
    for (int mu = 0; mu < kSpacetimeDims; ++mu)
      if (x.d(mu) != 0) return false;
  return true;
}

template <int N>
Jet<Real, N> power(const Jet<Real, N>& base, const Jet<Real, N>& exponent) {
  if (!is_constant(exponent)) return exp(log(base) * exponent);
  const Real p = exponent.value();
  const Real whole = boost::multiprecision::round(p);
  if (p == whole && abs(whole) <= Real(64)) return pow(base, static_cast<int>(whole));
  return pow(base, p);
}

template <int N>
Jet<Real, N> evaluate(const Node& n, const Bindings<N>& b) {
  switch (n.kind) {
    case Node::Kind::Number: return Jet<Real, N>(n.number);
    case Node::Kind::Identifier: {
      const auto it = b.find(n.text);
      if (it == b.end()) throw UnboundIdentifierError(n.text);
      return it->second;
    }
    case Node::Kind::Negate: return -evaluate(*n.lhs, b);
    case Node::Kind::Call: return apply(n.function, evaluate(*n.lhs, b));
    case Node::Kind::Binary: break;
  }
  const Jet<Real, N> l = evaluate(*n.lhs, b);
  const Jet<Real, N> r = evaluate(*n.rhs, b);
  switch (n.op) {
    case '+': return l + r;
    case '-': return l - r;
    case '*': return l * r;
    case '/': return l / r;
    default: return power(l, r);
  }
}

}  // namespace detail

/// Evaluates with exact chain-rule derivatives. Throws UnboundIdentifierError
/// for identifiers missing from `bindings` and DomainError from the functions.
template <int N>
Jet<Real, N> evaluate(const Expr& e, const Bindings<N>& bindings) {
  return detail::evaluate(e.root(), bindings);
}

}  // namespace rdi::dsl
