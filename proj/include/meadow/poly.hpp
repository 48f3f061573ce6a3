#pragma once

// Sparse multivariate polynomials with rational coefficients. Monomials are
// kept in graded-lexicographic order (variables compared by name, "x" > "y"),
// so two polynomials are equal iff their term maps are identical.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace meadow {

/// Product of variables to positive powers, sorted by variable name.
class Monomial {
 public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);  // merges duplicates, drops zero exponents
  static Monomial variable(const std::string& name, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(const std::string& var) const;
  bool is_one() const { return factors_.empty(); }

  /// Present iff `divisor` divides this monomial.
  std::optional<Monomial> divide(const Monomial& divisor) const;
  Monomial without(const std::string& var) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

/// Strict "a comes before b" in descending graded-lex order.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Monomial, mpq_class, GrlexDescending>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT: integer constants convert implicitly
  explicit MultiPoly(const mpq_class& c);
  static MultiPoly variable(const std::string& name);
  static MultiPoly term(const Monomial& m, const mpq_class& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term coefficient (0 when absent).
  mpq_class constant_term() const;
  const Terms& terms() const { return terms_; }
  /// Leading term under graded-lex; precondition: nonzero.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const mpq_class& leading_coefficient() const { return terms_.begin()->second; }
  unsigned total_degree() const;
  unsigned degree_in(const std::string& var) const;
  std::set<std::string> variables() const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const mpq_class& c, const MultiPoly& a);
  friend MultiPoly operator*(long c, const MultiPoly& a) { return mpq_class(c) * a; }
  MultiPoly& operator+=(const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Expanded text in graded-lex order, e.g. `x^2*y - 2*x + 1`.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const mpq_class& c);
  Terms terms_;
};

MultiPoly pow(const MultiPoly& a, unsigned k);

/// Exact value at a rational point; throws UsageError for unbound variables.
mpq_class evaluate(const MultiPoly& a, const std::map<std::string, mpq_class>& point);

/// Formal partial derivative.
MultiPoly derivative(const MultiPoly& a, const std::string& var);

/// a / b when b divides a exactly, otherwise empty. Throws DomainError for b = 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// a = content * primitive, where primitive has integer coefficients with gcd 1
/// and a positive leading coefficient. Throws DomainError for the zero polynomial.
std::pair<mpq_class, MultiPoly> content_and_primitive(const MultiPoly& a);
MultiPoly primitive_positive(const MultiPoly& a);

/// Greatest common divisor, normalized primitive-positive; gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Squarefree part a / gcd(a, da/dx1, ..., da/dxn), primitive-positive.
/// Throws DomainError for the zero polynomial.
MultiPoly radical(const MultiPoly& a);

}  // namespace meadow
