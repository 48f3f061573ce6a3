#include "meadow/poly.hpp"

#include <algorithm>

#include "meadow/error.hpp"
#include "meadow/values.hpp"

namespace meadow {

// --- Monomial ---------------------------------------------------------------

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first) {
      factors_.back().second += f.second;
    } else {
      factors_.push_back(std::move(f));
    }
  }
  for (const auto& f : factors_) degree_ += f.second;
}

Monomial Monomial::variable(const std::string& name, unsigned exponent) { return Monomial({{name, exponent}}); }

unsigned Monomial::exponent(const std::string& var) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                             [](const Factor& f, const std::string& v) { return f.first < v; });
  return (it != factors_.end() && it->first == var) ? it->second : 0;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
  Monomial out;
  auto it = factors_.begin();
  for (const auto& [var, e] : divisor.factors_) {
    while (it != factors_.end() && it->first < var) out.factors_.push_back(*it++);
    if (it == factors_.end() || it->first != var || it->second < e) return std::nullopt;
    if (it->second > e) out.factors_.emplace_back(var, it->second - e);
    ++it;
  }
  while (it != factors_.end()) out.factors_.push_back(*it++);
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::without(const std::string& var) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first != var) {
      out.factors_.push_back(f);
      out.degree_ += f.second;
    }
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [var, e] : factors_) {
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  // Lex with earlier names more significant: the first variable (by name)
  // whose exponents differ decides, larger exponent first.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto i = fa.begin(), j = fb.begin();
  while (i != fa.end() && j != fb.end()) {
    if (i->first != j->first) return i->first < j->first;
    if (i->second != j->second) return i->second > j->second;
    ++i;
    ++j;
  }
  // Equal degrees make a one-sided tail impossible unless both ended.
  return i != fa.end() && j == fb.end();
}

// --- MultiPoly --------------------------------------------------------------

MultiPoly::MultiPoly(long c) : MultiPoly(mpq_class(c)) {}

MultiPoly::MultiPoly(const mpq_class& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

MultiPoly MultiPoly::variable(const std::string& name) { return term(Monomial::variable(name), 1); }

MultiPoly MultiPoly::term(const Monomial& m, const mpq_class& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

mpq_class MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? mpq_class(0) : it->second;
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

unsigned MultiPoly::degree_in(const std::string& var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
  return d;
}

std::set<std::string> MultiPoly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

void MultiPoly::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  out += b;
  return out;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly operator*(const mpq_class& c, const MultiPoly& a) {
  if (c == 0) return {};
  MultiPoly out = a;
  for (auto& [m, coeff] : out.terms_) coeff *= c;
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += rational_to_string(mag);
    } else {
      if (mag != 1) out += rational_to_string(mag) + "*";
      out += m.to_string();
    }
  }
  return out;
}

MultiPoly pow(const MultiPoly& a, unsigned k) {
  MultiPoly result(1), base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

mpq_class evaluate(const MultiPoly& a, const std::map<std::string, mpq_class>& point) {
  mpq_class sum = 0;
  for (const auto& [m, c] : a.terms()) {
    mpq_class term = c;
    for (const auto& [var, e] : m.factors()) {
      auto it = point.find(var);
      if (it == point.end()) throw UsageError("unbound variable '" + var + "'");
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(den.get_mpz_t(), it->second.get_den_mpz_t(), e);
      term *= mpq_class(num, den);
    }
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

MultiPoly derivative(const MultiPoly& a, const std::string& var) {
  MultiPoly out;
  for (const auto& [m, c] : a.terms()) {
    unsigned e = m.exponent(var);
    if (e == 0) continue;
    std::vector<Monomial::Factor> factors = m.factors();
    for (auto& f : factors) {
      if (f.first == var) --f.second;
    }
    out += MultiPoly::term(Monomial(std::move(factors)), c * e);
  }
  return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  MultiPoly quotient;
  MultiPoly rest = a;
  const Monomial& lead = b.leading_monomial();
  const mpq_class& lead_c = b.leading_coefficient();
  while (!rest.is_zero()) {
    // If b | rest then lt(b) | lt(rest); otherwise the division is not exact.
    auto m = rest.leading_monomial().divide(lead);
    if (!m) return std::nullopt;
    MultiPoly t = MultiPoly::term(*m, rest.leading_coefficient() / lead_c);
    quotient += t;
    rest = rest - t * b;
  }
  return quotient;
}

std::pair<mpq_class, MultiPoly> content_and_primitive(const MultiPoly& a) {
  if (a.is_zero()) throw DomainError("content of the zero polynomial");
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : a.terms()) {
    den_lcm = lcm(den_lcm, mpz_class(c.get_den()));
    num_gcd = gcd(num_gcd, mpz_class(c.get_num()));
  }
  mpq_class content(num_gcd, den_lcm);
  content.canonicalize();
  if (a.leading_coefficient() < 0) content = -content;
  mpq_class scale = 1 / content;
  return {content, scale * a};
}

MultiPoly primitive_positive(const MultiPoly& a) { return content_and_primitive(a).second; }

MultiPoly radical(const MultiPoly& a) {
  if (a.is_zero()) throw DomainError("radical of the zero polynomial");
  if (a.is_constant()) return MultiPoly(1);
  MultiPoly g = a;
  for (const auto& var : a.variables()) {
    g = gcd(g, derivative(a, var));
    if (g.is_constant()) break;
  }
  auto q = divide_exact(a, g);
  if (!q) throw std::logic_error("radical: gcd does not divide its argument");
  return primitive_positive(*q);
}

}  // namespace meadow
