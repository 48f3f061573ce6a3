#pragma once

// Shared generators for the property tests.

#include <random>
#include <string>
#include <vector>

#include "meadow/lawcheck.hpp"
#include "meadow/model.hpp"
#include "meadow/normal.hpp"
#include "meadow/term.hpp"

namespace meadow::testing {

inline const std::vector<std::string> kNames{"x", "y", "z", "u"};

struct TermShape {
  std::size_t max_depth = 6;
  double leaf = 0.3;
  double bottom = 0.03;
  double constant = 0.25;
};

/// Random term over the first `nvars` of kNames, depth <= shape.max_depth.
inline Term random_term(std::mt19937_64& rng, std::size_t nvars, const TermShape& shape = {},
                        std::size_t depth = 1) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (depth >= shape.max_depth || (depth > 1 && u(rng) < shape.leaf)) {
    double r = u(rng);
    if (r < shape.bottom) return Term::bottom();
    if (r < shape.constant || nvars == 0) return u(rng) < 0.5 ? Term::zero() : Term::one();
    std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
    return Term::var(kNames[pick(rng)]);
  }
  std::uniform_int_distribution<int> op(0, 3);
  switch (op(rng)) {
    case 0:
      return Term::add(random_term(rng, nvars, shape, depth + 1), random_term(rng, nvars, shape, depth + 1));
    case 1:
      return Term::mul(random_term(rng, nvars, shape, depth + 1), random_term(rng, nvars, shape, depth + 1));
    case 2:
      return Term::neg(random_term(rng, nvars, shape, depth + 1));
    default:
      return Term::inv(random_term(rng, nvars, shape, depth + 1));
  }
}

/// Rational with numerator and denominator in [-bound, bound], or bottom.
inline QBot random_qbot(std::mt19937_64& rng, double bottom, int bound = 9) {
  std::bernoulli_distribution bot(bottom);
  if (bot(rng)) return QBot::bottom();
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  std::bernoulli_distribution sign(0.5);
  mpq_class q(num(rng), den(rng) * (sign(rng) ? 1 : -1));
  q.canonicalize();
  return QBot(q);
}

inline FpBot random_fp(std::mt19937_64& rng, std::uint64_t p, double bottom) {
  std::bernoulli_distribution bot(bottom);
  if (bot(rng)) return FpBot::bottom(p);
  std::uniform_int_distribution<std::int64_t> r(0, static_cast<std::int64_t>(p) - 1);
  return FpBot(p, r(rng));
}

inline Assignment random_assignment(std::mt19937_64& rng, const Model& m, std::size_t nvars, double bottom) {
  Assignment a;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (m.kind() == Model::Kind::FpBot) {
      a.emplace(kNames[i], random_fp(rng, m.modulus(), bottom));
    } else {
      a.emplace(kNames[i], random_qbot(rng, bottom));
    }
  }
  return a;
}

/// Independent evaluation of num * den^-1 + 0 * k^-1 + 0 * (sum of support)
/// in QBot or FpBot, written directly over mpq/mpz.
inline Value fraction_oracle(const FractionNormalForm& f, const Assignment& a, const Model& m) {
  if (f.is_bottom()) return m.bottom();
  for (const auto& v : f.support()) {
    if (m.is_bottom(a.at(v))) return m.bottom();
  }
  if (m.kind() == Model::Kind::QBot) {
    std::map<std::string, mpq_class> pt;
    for (const auto& v : f.support()) pt[v] = std::get<QBot>(a.at(v)).rational();
    mpq_class d = evaluate(f.denominator(), pt);
    if (d == 0) return QBot::bottom();
    return QBot(mpq_class(evaluate(f.numerator(), pt) / d));
  }
  const mpz_class p = static_cast<unsigned long>(m.modulus());
  if (f.guard() % p == 0) return m.bottom();
  auto reduce = [&](const MultiPoly& poly) -> std::optional<mpz_class> {
    mpz_class total = 0;
    for (const auto& [mono, c] : poly.terms()) {
      if (c.get_den() % p == 0) return std::nullopt;
      mpz_class inv;
      mpz_class den = c.get_den();
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      mpz_class term = c.get_num() * inv;
      for (const auto& [name, e] : mono.factors()) {
        mpz_class r = std::get<FpBot>(a.at(name)).residue();
        mpz_class pw;
        mpz_powm_ui(pw.get_mpz_t(), r.get_mpz_t(), e, p.get_mpz_t());
        term *= pw;
      }
      total = (total + term) % p;
    }
    if (total < 0) total += p;
    return total;
  };
  auto n = reduce(f.numerator());
  auto d = reduce(f.denominator());
  if (!n || !d || *d == 0) return m.bottom();
  mpz_class dinv;
  mpz_invert(dinv.get_mpz_t(), d->get_mpz_t(), p.get_mpz_t());
  mpz_class r = (*n * dinv) % p;
  return FpBot(m.modulus(), r.get_si());
}

using Substitution = std::map<std::string, Term, std::less<>>;

/// First-order matching of `pattern` against `t`, extending `s`.
inline bool match(const Term& pattern, const Term& t, Substitution& s) {
  if (pattern.kind() == Term::Kind::Var) {
    auto [it, fresh] = s.emplace(pattern.name(), t);
    return fresh || it->second == t;
  }
  if (pattern.kind() != t.kind()) return false;
  switch (t.kind()) {
    case Term::Kind::Add:
    case Term::Kind::Mul:
      return match(pattern.left(), t.left(), s) && match(pattern.right(), t.right(), s);
    case Term::Kind::Neg:
    case Term::Kind::Inv:
      return match(pattern.operand(), t.operand(), s);
    default:
      return true;
  }
}

inline void positions(const Term& t, std::vector<int>& path, std::vector<std::vector<int>>& out) {
  out.push_back(path);
  switch (t.kind()) {
    case Term::Kind::Add:
    case Term::Kind::Mul:
      path.push_back(1);
      positions(t.right(), path, out);
      path.back() = 0;
      positions(t.left(), path, out);
      path.pop_back();
      break;
    case Term::Kind::Neg:
    case Term::Kind::Inv:
      path.push_back(0);
      positions(t.operand(), path, out);
      path.pop_back();
      break;
    default:
      break;
  }
}

inline const Term& subterm(const Term& t, const std::vector<int>& path, std::size_t i = 0) {
  if (i == path.size()) return t;
  return subterm(path[i] == 0 ? t.left() : t.right(), path, i + 1);
}

inline Term replace(const Term& t, const std::vector<int>& path, const Term& with, std::size_t i = 0) {
  if (i == path.size()) return with;
  switch (t.kind()) {
    case Term::Kind::Add:
      return path[i] == 0 ? Term::add(replace(t.left(), path, with, i + 1), t.right())
                          : Term::add(t.left(), replace(t.right(), path, with, i + 1));
    case Term::Kind::Mul:
      return path[i] == 0 ? Term::mul(replace(t.left(), path, with, i + 1), t.right())
                          : Term::mul(t.left(), replace(t.right(), path, with, i + 1));
    case Term::Kind::Neg:
      return Term::neg(replace(t.operand(), path, with, i + 1));
    default:
      return Term::inv(replace(t.operand(), path, with, i + 1));
  }
}

/// One rewrite with a random common meadow axiom instance in a random direction
/// at a random position; variables only on the target side get small random terms.
inline Term rewrite_step(std::mt19937_64& rng, const Term& t, std::size_t nvars) {
  static const Suite axioms = find_suite("md_bot");
  std::vector<std::vector<int>> all;
  std::vector<int> path;
  positions(t, path, all);
  std::uniform_int_distribution<std::size_t> pos(0, all.size() - 1);
  std::uniform_int_distribution<std::size_t> ax(0, axioms.entries.size() - 1);
  std::bernoulli_distribution flip(0.5);
  TermShape small{3, 0.5, 0.0, 0.3};
  for (int attempt = 0; attempt < 200; ++attempt) {
    const auto& p = all[pos(rng)];
    const Equation& e = std::get<Law>(axioms.entries[ax(rng)]).conclusion;
    bool forward = flip(rng);
    const Term& from = forward ? e.lhs : e.rhs;
    const Term& to = forward ? e.rhs : e.lhs;
    Substitution s;
    if (!match(from, subterm(t, p), s)) continue;
    for (const auto& v : vars(to)) {
      if (!s.contains(v)) s.emplace(v, random_term(rng, nvars, small));
    }
    return replace(t, p, substitute(to, s));
  }
  return t;
}

}  // namespace meadow::testing
