#pragma once

// Fraction normal forms: every term t equals  num * den^-1 + 0 * k^-1 + 0 * (v1 + ... + vn)
// in every common meadow, where num and den are polynomials, k is a positive
// squarefree integer (the "guard") and v1..vn are the variables of t.
//
// Over characteristic zero the guard term vanishes; it records the integers
// that were divided out while normalizing, so that evaluation stays exact in
// F_p-bottom whenever p divides one of them.

#include <set>
#include <string>

#include <gmpxx.h>

#include "meadow/model.hpp"
#include "meadow/poly.hpp"
#include "meadow/term.hpp"

namespace meadow {

class FractionNormalForm {
 public:
  static FractionNormalForm bottom();
  /// Normalizes: a zero denominator gives bottom; the denominator is made
  /// primitive-positive with its rational content folded into the numerator;
  /// the support is widened to cover the variables of num and den.
  static FractionNormalForm make(MultiPoly num, MultiPoly den, std::set<std::string> support = {},
                                 const mpz_class& guard = 1);

  bool is_bottom() const { return bottom_; }
  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  const std::set<std::string>& support() const { return support_; }
  const mpz_class& guard() const { return guard_; }

  friend bool operator==(const FractionNormalForm&, const FractionNormalForm&) = default;

  /// `num / den  [support]`, or `_|_`.
  std::string to_string() const;

 private:
  FractionNormalForm() = default;
  bool bottom_ = false;
  MultiPoly num_;
  MultiPoly den_{1};
  std::set<std::string> support_;
  mpz_class guard_{1};
};

FractionNormalForm to_fraction(const Term& t);

FractionNormalForm frac_add(const FractionNormalForm& a, const FractionNormalForm& b);
FractionNormalForm frac_mul(const FractionNormalForm& a, const FractionNormalForm& b);
FractionNormalForm frac_neg(const FractionNormalForm& a);
/// (n/d)^-1 = d^2 / (n*d): keeps the zeros of d as zeros of the new denominator.
FractionNormalForm frac_inv(const FractionNormalForm& a);

/// Sigma_f term for a polynomial; rational coefficients a/b become a * b^-1.
Term to_term(const MultiPoly& p);
/// The term  num * den^-1 + 0 * k^-1 + 0 * (v1 + ... + vn), omitting parts that are 1 or empty.
Term to_term(const FractionNormalForm& f);

/// Polynomial evaluated through the model's operations.
Value eval_poly(const MultiPoly& p, const Assignment& a, const Model& m);
/// Evaluation of the represented term; bottom forms give the model's bottom.
Value eval_fraction(const FractionNormalForm& f, const Assignment& a, const Model& m);

}  // namespace meadow
