#pragma once

// Fracpairs over the integers: pairs p/q (q = 0 allowed) modulo the congruence
// generated by (x*z)/(y*(z*z)) = x/(y*z). Over Z this is the initial common
// meadow; mapping p/q to the rational p/q is a homomorphism onto Q_bot.

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "meadow/values.hpp"

namespace meadow {

/// A representative pair before canonicalization.
struct RawPair {
  mpz_class p;
  mpz_class q;
};

RawPair raw_add(const RawPair& a, const RawPair& b);
RawPair raw_mul(const RawPair& a, const RawPair& b);
RawPair raw_neg(const RawPair& a);
RawPair raw_inv(const RawPair& a);

class Fracpair {
 public:
  /// 0/1.
  Fracpair() : pair_(std::in_place, mpz_class(0), mpz_class(1)) {}

  /// The class of every pair with q = 0.
  static Fracpair bottom() { return Fracpair(std::nullopt); }

  bool is_bottom() const { return !pair_.has_value(); }
  /// Canonical representative; throws UsageError for the bottom class.
  const mpz_class& numerator() const;
  const mpz_class& denominator() const;
  /// Representative usable in the raw formulas (1/0 for bottom).
  RawPair representative() const;

  friend Fracpair canon(const mpz_class& p, const mpz_class& q);
  friend bool operator==(const Fracpair& a, const Fracpair& b) { return a.pair_ == b.pair_; }

  std::string to_string() const;
  /// Accepts `p`, `p/q` (any integers, canonicalized) and `_|_` / `bot`.
  static Fracpair parse(std::string_view text);

 private:
  explicit Fracpair(std::optional<std::pair<mpz_class, mpz_class>> pair) : pair_(std::move(pair)) {}
  std::optional<std::pair<mpz_class, mpz_class>> pair_;
};

/// Canonical form: q = 0 gives bottom; otherwise, for every prime l with
/// l | p and l^2 | q, divide both by l (repeatedly), then make q positive.
/// Throws DomainError when gcd(p, q) (or |q| when p = 0) exceeds 2^63.
Fracpair canon(const mpz_class& p, const mpz_class& q);
inline Fracpair canon(const RawPair& r) { return canon(r.p, r.q); }

Fracpair operator+(const Fracpair& a, const Fracpair& b);
Fracpair operator*(const Fracpair& a, const Fracpair& b);
Fracpair operator-(const Fracpair& a);
Fracpair inverse(const Fracpair& a);

/// The homomorphism onto Q_bot.
QBot to_qbot(const Fracpair& a);

}  // namespace meadow
