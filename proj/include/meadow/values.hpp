#pragma once

// Exact common-meadow carriers: the rationals with a bottom-totalized inverse,
// prime fields totalized the same way, and the zero-totalized (involutive)
// rationals. Every value type is immutable; all operations are total.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace meadow {

/// Rendering of the additional value in every text format.
inline constexpr std::string_view kBottomText = "_|_";

/// Canonical rational text: `p` when the denominator is 1, else `p/q`.
std::string rational_to_string(const mpq_class& q);

/// Parses `p` or `p/q` (optional leading '-'); throws ParseError.
mpq_class parse_rational(std::string_view text);

/// True for the two spellings of the additional value, `_|_` and `bot`.
bool is_bottom_text(std::string_view text);

/// An element of Q_bot: a rational in lowest terms, or bottom.
class QBot {
 public:
  QBot() : value_(mpq_class(0)) {}
  explicit QBot(mpq_class q);
  QBot(long n) : QBot(mpq_class(n)) {}  // NOLINT: integers convert implicitly

  static QBot bottom() { return QBot(std::nullopt); }

  bool is_bottom() const { return !value_.has_value(); }
  /// Throws UsageError on bottom.
  const mpq_class& rational() const;

  friend QBot operator+(const QBot& a, const QBot& b);
  friend QBot operator*(const QBot& a, const QBot& b);
  friend QBot operator-(const QBot& a);
  friend QBot inverse(const QBot& a);
  friend bool operator==(const QBot& a, const QBot& b) { return a.value_ == b.value_; }

  std::string to_string() const;
  static QBot parse(std::string_view text);

 private:
  explicit QBot(std::optional<mpq_class> v) : value_(std::move(v)) {}
  std::optional<mpq_class> value_;
};

/// An element of F_p extended with bottom. The modulus travels with the value;
/// mixing moduli is a UsageError. Primality is checked where models are built.
class FpBot {
 public:
  FpBot(std::uint64_t modulus, std::int64_t n);
  static FpBot bottom(std::uint64_t modulus) { return FpBot(modulus); }

  std::uint64_t modulus() const { return modulus_; }
  bool is_bottom() const { return !residue_.has_value(); }
  /// Throws UsageError on bottom.
  std::uint64_t residue() const;

  friend FpBot operator+(const FpBot& a, const FpBot& b);
  friend FpBot operator*(const FpBot& a, const FpBot& b);
  friend FpBot operator-(const FpBot& a);
  friend FpBot inverse(const FpBot& a);
  friend bool operator==(const FpBot& a, const FpBot& b) = default;

  std::string to_string() const;

 private:
  explicit FpBot(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_;
  std::optional<std::uint64_t> residue_;
};

/// Rationals with zero-totalized inverse (0^-1 = 0); no bottom member.
class QZero {
 public:
  QZero() = default;
  explicit QZero(mpq_class q);
  QZero(long n) : QZero(mpq_class(n)) {}  // NOLINT

  const mpq_class& rational() const { return value_; }

  friend QZero operator+(const QZero& a, const QZero& b) { return QZero(a.value_ + b.value_); }
  friend QZero operator*(const QZero& a, const QZero& b) { return QZero(a.value_ * b.value_); }
  friend QZero operator-(const QZero& a) { return QZero(-a.value_); }
  friend QZero inverse(const QZero& a);
  friend bool operator==(const QZero& a, const QZero& b) { return a.value_ == b.value_; }

  std::string to_string() const { return rational_to_string(value_); }

 private:
  mpq_class value_{0};
};

/// A finite meadow given by operation tables over element indices.
/// `bottom` is set for common meadows and empty for involutive ones.
struct FiniteMeadow {
  std::vector<std::string> labels;
  std::size_t zero = 0;
  std::size_t one = 0;
  std::optional<std::size_t> bottom;
  std::vector<std::size_t> add;  // row-major, size() * size()
  std::vector<std::size_t> mul;
  std::vector<std::size_t> neg;
  std::vector<std::size_t> inv;

  std::size_t size() const { return labels.size(); }
  std::size_t sum(std::size_t a, std::size_t b) const { return add[a * size() + b]; }
  std::size_t product(std::size_t a, std::size_t b) const { return mul[a * size() + b]; }

  friend bool operator==(const FiniteMeadow&, const FiniteMeadow&) = default;
};

/// Z/p with 0^-1 = 0, tabulated directly (inverse by Fermat exponentiation).
FiniteMeadow involutive_prime_field(std::uint64_t p);

/// Drops bottom and sets 0^-1 = 0. Requires a bottom element, 0 != 1, and
/// closure of the remaining carrier under +, *, - and inverse of nonzero elements.
FiniteMeadow strip_bottom(const FiniteMeadow& common);

/// Adjoins bottom (appended as the last element), makes every operation absorb
/// it and sets 0^-1 = bottom. Requires an involutive table without bottom.
FiniteMeadow totalize(const FiniteMeadow& involutive);

}  // namespace meadow
