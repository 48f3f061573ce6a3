// Multivariate gcd by recursion on the main variable: contents are handled
// by recursive gcds of coefficients, primitive parts by a subresultant
// polynomial remainder sequence with coefficients in Q[remaining variables].

#include <stdexcept>

#include "meadow/poly.hpp"

namespace meadow {

namespace {

/// Univariate view: coefficient k multiplies var^k. No trailing zeros.
using Dense = std::vector<MultiPoly>;

Dense to_dense(const MultiPoly& a, const std::string& var) {
  Dense out(a.degree_in(var) + 1);
  for (const auto& [m, c] : a.terms()) out[m.exponent(var)] += MultiPoly::term(m.without(var), c);
  return out;
}

MultiPoly from_dense(const Dense& coeffs, const std::string& var) {
  MultiPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    out += coeffs[k] * MultiPoly::term(Monomial::variable(var, static_cast<unsigned>(k)), 1);
  }
  return out;
}

void trim(Dense& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int degree(const Dense& a) { return static_cast<int>(a.size()) - 1; }

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("gcd: inexact division " + a.to_string() + " / " + b.to_string());
  return *q;
}

Dense scale(const Dense& a, const MultiPoly& c) {
  Dense out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x * c);
  trim(out);
  return out;
}

Dense divide_coefficients(const Dense& a, const MultiPoly& c) {
  Dense out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(exact(x, c));
  return out;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const int n = degree(b);
  int e = degree(a) - n + 1;
  const MultiPoly& lc_b = b.back();
  while (!a.empty() && degree(a) >= n) {
    const int shift = degree(a) - n;
    const MultiPoly lc_a = a.back();
    for (auto& x : a) x = x * lc_b;
    for (int k = 0; k <= n; ++k) a[k + shift] = a[k + shift] - lc_a * b[k];
    trim(a);
    --e;
  }
  if (e > 0 && !a.empty()) a = scale(a, pow(lc_b, static_cast<unsigned>(e)));
  return a;
}

MultiPoly content_of(const Dense& a) {
  MultiPoly g;
  for (const auto& c : a) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

/// gcd of two primitive univariate polynomials of positive degree.
Dense subresultant_gcd(Dense a, Dense b) {
  if (degree(a) < degree(b)) std::swap(a, b);
  MultiPoly g(1), h(1);
  while (true) {
    const int delta = degree(a) - degree(b);
    Dense r = pseudo_remainder(a, b);
    if (r.empty()) return b;
    if (degree(r) == 0) return Dense{MultiPoly(1)};
    a = std::move(b);
    b = divide_coefficients(r, g * pow(h, static_cast<unsigned>(delta)));
    g = a.back();
    if (delta == 0) continue;
    h = exact(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
  }
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.is_zero() ? MultiPoly() : primitive_positive(b);
  if (b.is_zero()) return primitive_positive(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);

  std::set<std::string> all = a.variables();
  for (const auto& v : b.variables()) all.insert(v);
  const std::string& var = *all.begin();

  Dense da = to_dense(a, var);
  Dense db = to_dense(b, var);
  const MultiPoly ca = content_of(da);
  const MultiPoly cb = content_of(db);
  const MultiPoly c = gcd(ca, cb);
  if (da.size() == 1 || db.size() == 1) return c;  // var absent from one side

  Dense pa = divide_coefficients(da, ca);
  Dense pb = divide_coefficients(db, cb);
  Dense g = subresultant_gcd(std::move(pa), std::move(pb));
  if (degree(g) > 0) g = divide_coefficients(g, content_of(g));
  return primitive_positive(c * from_dense(g, var));
}

}  // namespace meadow
