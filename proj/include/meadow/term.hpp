#pragma once

// Terms over the common-meadow signature: constants 0, 1, bottom; variables;
// binary + and *; unary - and inverse. Terms are immutable shared trees.

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "meadow/model.hpp"

namespace meadow {

class Term {
 public:
  enum class Kind { Zero, One, Bottom, Var, Add, Mul, Neg, Inv };

  static Term zero();
  static Term one();
  static Term bottom();
  /// Throws UsageError for names outside [a-zA-Z][a-zA-Z0-9_]* or equal to `bot`.
  static Term var(std::string name);
  static Term add(Term l, Term r);
  static Term mul(Term l, Term r);
  static Term neg(Term t);
  static Term inv(Term t);
  /// The numeral chain 0, 1, (1 + 1), ((1 + 1) + 1), ...
  static Term numeral(std::size_t n);

  Kind kind() const { return node_->kind; }
  /// Variable name; empty for other kinds.
  const std::string& name() const { return node_->name; }
  /// Left (or only) operand. Precondition: kind has operands.
  const Term& left() const { return *node_->left; }
  const Term& right() const { return *node_->right; }
  const Term& operand() const { return *node_->left; }

  std::size_t depth() const { return node_->depth; }
  std::size_t size() const { return node_->size; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Term> left;
    std::shared_ptr<const Term> right;
    std::size_t depth = 1;
    std::size_t size = 1;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Kind kind, std::string name, const Term* l, const Term* r);

  std::shared_ptr<const Node> node_;
};

bool is_valid_variable_name(std::string_view name);

/// Largest integer literal the parser expands into a numeral chain.
inline constexpr std::size_t kMaxNumeralLiteral = 4096;

/// Grammar:
///   expr    := term { ('+' | '-') term }
///   term    := factor { ('*' | '/') factor }
///   factor  := '-' factor | primary
///   primary := atom [ '^-1' ]
///   atom    := nat | ident | 'bot' | '_|_' | '(' expr ')' | 'inv' '(' expr ')'
/// `a/b` is a * b^-1, binary `a - b` is a + (-b), literals expand to numerals.
/// Throws ParseError carrying a 1-based column.
Term parse(std::string_view text);

/// Minimal-parenthesis text with parse(render(t)) == t.
std::string render(const Term& t);

std::set<std::string> vars(const Term& t);
bool contains_bottom(const Term& t);

using Assignment = std::map<std::string, Value, std::less<>>;

/// Homomorphic evaluation; throws UsageError on unbound variables or on the
/// bottom constant in a model without one.
Value eval(const Term& t, const Assignment& a, const Model& m);

/// Simultaneous replacement of variables by terms.
Term substitute(const Term& t, const std::map<std::string, Term, std::less<>>& s);

/// A Sigma_f term for the integer n, built by binary doubling from 1 so that
/// large coefficients stay shallow (negative n become -(|n|)).
Term integer_term(const mpz_class& n);

}  // namespace meadow
