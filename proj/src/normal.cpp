#include "meadow/normal.hpp"

#include "meadow/error.hpp"
#include "meadow/factor.hpp"

namespace meadow {

namespace {

/// Adds the primes of n to a squarefree guard.
mpz_class absorb(const mpz_class& guard, const mpz_class& n) {
  mpz_class rest = abs(n);
  if (rest == 0) return guard;
  for (mpz_class g = gcd(rest, guard); g > 1; g = gcd(rest, guard)) rest /= g;
  if (rest == 1) return guard;
  return guard * squarefree_kernel(rest);
}

std::set<std::string> unite(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

mpz_class merge_guards(const mpz_class& a, const mpz_class& b) { return lcm(a, b); }

Value coefficient_value(const mpq_class& c, const Model& m) {
  Value v = m.numeral(mpz_class(abs(c.get_num())));
  if (c.get_den() != 1) v = m.mul(v, m.inv(m.numeral(mpz_class(c.get_den()))));
  return c < 0 ? m.neg(v) : v;
}

}  // namespace

FractionNormalForm FractionNormalForm::bottom() {
  FractionNormalForm f;
  f.bottom_ = true;
  f.den_ = MultiPoly();
  return f;
}

FractionNormalForm FractionNormalForm::make(MultiPoly num, MultiPoly den, std::set<std::string> support,
                                            const mpz_class& guard) {
  if (den.is_zero()) return bottom();
  FractionNormalForm f;
  auto [content, primitive] = content_and_primitive(den);
  f.guard_ = absorb(absorb(guard, content.get_num()), content.get_den());
  f.num_ = mpq_class(1 / content) * num;
  f.den_ = std::move(primitive);
  for (const auto& v : f.num_.variables()) support.insert(v);
  for (const auto& v : f.den_.variables()) support.insert(v);
  f.support_ = std::move(support);
  return f;
}

std::string FractionNormalForm::to_string() const {
  if (bottom_) return std::string(kBottomText);
  std::string out = "(" + num_.to_string() + ") / (" + den_.to_string() + ")  [";
  bool first = true;
  for (const auto& v : support_) {
    if (!first) out += ", ";
    out += v;
    first = false;
  }
  out += "]";
  if (guard_ != 1) out += "  guard " + guard_.get_str();
  return out;
}

FractionNormalForm frac_add(const FractionNormalForm& a, const FractionNormalForm& b) {
  if (a.is_bottom() || b.is_bottom()) return FractionNormalForm::bottom();
  return FractionNormalForm::make(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                                  a.denominator() * b.denominator(), unite(a.support(), b.support()),
                                  merge_guards(a.guard(), b.guard()));
}

FractionNormalForm frac_mul(const FractionNormalForm& a, const FractionNormalForm& b) {
  if (a.is_bottom() || b.is_bottom()) return FractionNormalForm::bottom();
  return FractionNormalForm::make(a.numerator() * b.numerator(), a.denominator() * b.denominator(),
                                  unite(a.support(), b.support()), merge_guards(a.guard(), b.guard()));
}

FractionNormalForm frac_neg(const FractionNormalForm& a) {
  if (a.is_bottom()) return a;
  return FractionNormalForm::make(-a.numerator(), a.denominator(), a.support(), a.guard());
}

FractionNormalForm frac_inv(const FractionNormalForm& a) {
  if (a.is_bottom() || a.numerator().is_zero()) return FractionNormalForm::bottom();
  const MultiPoly& d = a.denominator();
  if (d.is_constant()) return FractionNormalForm::make(d, a.numerator(), a.support(), a.guard());
  return FractionNormalForm::make(d * d, a.numerator() * d, a.support(), a.guard());
}

FractionNormalForm to_fraction(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return FractionNormalForm::make(0, 1);
    case Term::Kind::One: return FractionNormalForm::make(1, 1);
    case Term::Kind::Bottom: return FractionNormalForm::bottom();
    case Term::Kind::Var: return FractionNormalForm::make(MultiPoly::variable(t.name()), 1, {t.name()});
    case Term::Kind::Add: {
      auto l = to_fraction(t.left());
      if (l.is_bottom()) return l;
      return frac_add(l, to_fraction(t.right()));
    }
    case Term::Kind::Mul: {
      auto l = to_fraction(t.left());
      if (l.is_bottom()) return l;
      return frac_mul(l, to_fraction(t.right()));
    }
    case Term::Kind::Neg: return frac_neg(to_fraction(t.operand()));
    case Term::Kind::Inv: return frac_inv(to_fraction(t.operand()));
  }
  return FractionNormalForm::bottom();
}

Term to_term(const MultiPoly& p) {
  if (p.is_zero()) return Term::zero();
  std::optional<Term> sum;
  for (const auto& [m, c] : p.terms()) {
    std::optional<Term> product;
    mpq_class mag = abs(c);
    if (mag != 1 || m.is_one()) {
      product = integer_term(mpz_class(mag.get_num()));
      if (mag.get_den() != 1) product = Term::mul(*product, Term::inv(integer_term(mpz_class(mag.get_den()))));
    }
    for (const auto& [var, e] : m.factors()) {
      for (unsigned i = 0; i < e; ++i) {
        Term v = Term::var(var);
        product = product ? Term::mul(*product, v) : v;
      }
    }
    Term signed_term = c < 0 ? Term::neg(*product) : *product;
    sum = sum ? Term::add(*sum, signed_term) : signed_term;
  }
  return *sum;
}

Term to_term(const FractionNormalForm& f) {
  if (f.is_bottom()) return Term::bottom();
  Term out = to_term(f.numerator());
  if (f.denominator() != MultiPoly(1)) out = Term::mul(out, Term::inv(to_term(f.denominator())));
  if (f.guard() != 1) out = Term::add(out, Term::mul(Term::zero(), Term::inv(integer_term(f.guard()))));
  if (!f.support().empty()) {
    std::optional<Term> vars_sum;
    for (const auto& v : f.support()) vars_sum = vars_sum ? Term::add(*vars_sum, Term::var(v)) : Term::var(v);
    out = Term::add(out, Term::mul(Term::zero(), *vars_sum));
  }
  return out;
}

Value eval_poly(const MultiPoly& p, const Assignment& a, const Model& m) {
  Value sum = m.zero();
  for (const auto& [mono, c] : p.terms()) {
    Value product = coefficient_value(c, m);
    for (const auto& [var, e] : mono.factors()) {
      auto it = a.find(var);
      if (it == a.end()) throw UsageError("unbound variable '" + var + "'");
      for (unsigned i = 0; i < e; ++i) product = m.mul(product, it->second);
    }
    sum = m.add(sum, product);
  }
  return sum;
}

Value eval_fraction(const FractionNormalForm& f, const Assignment& a, const Model& m) {
  if (f.is_bottom()) return m.bottom();
  Value out = m.mul(eval_poly(f.numerator(), a, m), m.inv(eval_poly(f.denominator(), a, m)));
  if (f.guard() != 1) out = m.add(out, m.mul(m.zero(), m.inv(m.numeral(f.guard()))));
  for (const auto& v : f.support()) {
    auto it = a.find(v);
    if (it == a.end()) throw UsageError("unbound variable '" + v + "'");
    out = m.add(out, m.mul(m.zero(), it->second));
  }
  return out;
}

}  // namespace meadow
