#include "meadow/values.hpp"

#include <cctype>

#include "meadow/error.hpp"

namespace meadow {

namespace {

mpz_class parse_integer(std::string_view text, std::size_t column) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("expected digits", column + i);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("unexpected character '" + std::string(1, text[j]) + "' in number", column + j);
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return mpz_class(digits, 10);
}

std::uint64_t reduce(std::int64_t n, std::uint64_t m) {
  auto r = n % static_cast<std::int64_t>(m);
  if (r < 0) r += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

void require_same_modulus(const FpBot& a, const FpBot& b) {
  if (a.modulus() != b.modulus()) {
    throw UsageError("model mismatch: F_" + std::to_string(a.modulus()) + " and F_" + std::to_string(b.modulus()));
  }
}

}  // namespace

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_integer(text, 1));
  mpz_class num = parse_integer(text.substr(0, slash), 1);
  mpz_class den = parse_integer(text.substr(slash + 1), slash + 2);
  if (den == 0) throw ParseError("zero denominator in rational literal", slash + 2);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

bool is_bottom_text(std::string_view text) { return text == kBottomText || text == "bot"; }

// --- QBot -------------------------------------------------------------------

QBot::QBot(mpq_class q) : value_(std::move(q)) { value_->canonicalize(); }

const mpq_class& QBot::rational() const {
  if (!value_) throw UsageError("bottom has no rational value");
  return *value_;
}

QBot operator+(const QBot& a, const QBot& b) {
  if (a.is_bottom() || b.is_bottom()) return QBot::bottom();
  return QBot(mpq_class(*a.value_ + *b.value_));
}

QBot operator*(const QBot& a, const QBot& b) {
  if (a.is_bottom() || b.is_bottom()) return QBot::bottom();
  return QBot(mpq_class(*a.value_ * *b.value_));
}

QBot operator-(const QBot& a) {
  if (a.is_bottom()) return a;
  return QBot(mpq_class(-*a.value_));
}

QBot inverse(const QBot& a) {
  if (a.is_bottom() || *a.value_ == 0) return QBot::bottom();
  return QBot(mpq_class(1 / *a.value_));
}

std::string QBot::to_string() const { return value_ ? rational_to_string(*value_) : std::string(kBottomText); }

QBot QBot::parse(std::string_view text) {
  if (is_bottom_text(text)) return bottom();
  return QBot(parse_rational(text));
}

// --- FpBot ------------------------------------------------------------------

FpBot::FpBot(std::uint64_t modulus, std::int64_t n) : modulus_(modulus), residue_(reduce(n, modulus)) {}

std::uint64_t FpBot::residue() const {
  if (!residue_) throw UsageError("bottom has no residue");
  return *residue_;
}

FpBot operator+(const FpBot& a, const FpBot& b) {
  require_same_modulus(a, b);
  if (a.is_bottom() || b.is_bottom()) return FpBot::bottom(a.modulus_);
  FpBot r(a.modulus_);
  auto s = static_cast<unsigned __int128>(*a.residue_) + *b.residue_;
  r.residue_ = static_cast<std::uint64_t>(s % a.modulus_);
  return r;
}

FpBot operator*(const FpBot& a, const FpBot& b) {
  require_same_modulus(a, b);
  if (a.is_bottom() || b.is_bottom()) return FpBot::bottom(a.modulus_);
  FpBot r(a.modulus_);
  r.residue_ = mul_mod(*a.residue_, *b.residue_, a.modulus_);
  return r;
}

FpBot operator-(const FpBot& a) {
  if (a.is_bottom()) return a;
  FpBot r(a.modulus_);
  r.residue_ = *a.residue_ == 0 ? 0 : a.modulus_ - *a.residue_;
  return r;
}

FpBot inverse(const FpBot& a) {
  if (a.is_bottom() || *a.residue_ == 0) return FpBot::bottom(a.modulus_);
  // Extended Euclid on (residue, p).
  __int128 t = 0, new_t = 1;
  __int128 r = a.modulus_, new_r = *a.residue_;
  while (new_r != 0) {
    __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += a.modulus_;
  FpBot out(a.modulus_);
  out.residue_ = static_cast<std::uint64_t>(t);
  return out;
}

std::string FpBot::to_string() const { return residue_ ? std::to_string(*residue_) : std::string(kBottomText); }

// --- QZero ------------------------------------------------------------------

QZero::QZero(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

QZero inverse(const QZero& a) {
  if (a.value_ == 0) return a;
  return QZero(mpq_class(1 / a.value_));
}

// --- finite tables ----------------------------------------------------------

FiniteMeadow involutive_prime_field(std::uint64_t p) {
  if (p < 2 || p > (1ULL << 16)) throw UsageError("involutive_prime_field: modulus out of range");
  FiniteMeadow m;
  const std::size_t n = p;
  m.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.labels.push_back(std::to_string(i));
  m.zero = 0;
  m.one = 1 % n;
  m.add.resize(n * n);
  m.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      m.add[a * n + b] = (a + b) % n;
      m.mul[a * n + b] = (a * b) % n;
    }
  }
  m.neg.resize(n);
  m.inv.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    m.neg[a] = (n - a) % n;
    // a^(p-2); yields 0 for a = 0.
    std::size_t result = 1 % n, base = a, e = n - 2;
    while (e > 0) {
      if (e & 1U) result = result * base % n;
      base = base * base % n;
      e >>= 1U;
    }
    m.inv[a] = n == 2 ? a : result;
  }
  return m;
}

FiniteMeadow strip_bottom(const FiniteMeadow& common) {
  if (!common.bottom) throw UsageError("strip_bottom: table has no bottom element");
  if (common.zero == common.one) throw UsageError("strip_bottom: requires 0 != 1");
  const std::size_t bot = *common.bottom;
  const std::size_t n = common.size();
  std::vector<std::size_t> index(n, n);
  FiniteMeadow out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == bot) continue;
    index[i] = out.labels.size();
    out.labels.push_back(common.labels[i]);
  }
  const std::size_t m = out.size();
  auto keep = [&](std::size_t v, const char* op) {
    if (v == bot) throw UsageError(std::string("strip_bottom: ") + op + " leaves the carrier without bottom");
    return index[v];
  };
  out.zero = index[common.zero];
  out.one = index[common.one];
  out.add.resize(m * m);
  out.mul.resize(m * m);
  out.neg.resize(m);
  out.inv.resize(m);
  for (std::size_t a = 0; a < n; ++a) {
    if (a == bot) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (b == bot) continue;
      out.add[index[a] * m + index[b]] = keep(common.sum(a, b), "addition");
      out.mul[index[a] * m + index[b]] = keep(common.product(a, b), "multiplication");
    }
    out.neg[index[a]] = keep(common.neg[a], "negation");
    out.inv[index[a]] = a == common.zero ? out.zero : keep(common.inv[a], "inverse");
  }
  return out;
}

FiniteMeadow totalize(const FiniteMeadow& involutive) {
  if (involutive.bottom) throw UsageError("totalize: table already has a bottom element");
  const std::size_t n = involutive.size();
  const std::size_t m = n + 1;
  const std::size_t bot = n;
  FiniteMeadow out;
  out.labels = involutive.labels;
  out.labels.emplace_back(kBottomText);
  out.zero = involutive.zero;
  out.one = involutive.one;
  out.bottom = bot;
  out.add.assign(m * m, bot);
  out.mul.assign(m * m, bot);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      out.add[a * m + b] = involutive.sum(a, b);
      out.mul[a * m + b] = involutive.product(a, b);
    }
  }
  out.neg = involutive.neg;
  out.neg.push_back(bot);
  out.inv = involutive.inv;
  out.inv[involutive.zero] = bot;
  out.inv.push_back(bot);
  return out;
}

}  // namespace meadow
