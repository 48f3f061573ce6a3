#include "meadow/fracpair.hpp"

#include "meadow/error.hpp"
#include "meadow/factor.hpp"

namespace meadow {

namespace {

const mpz_class& factoring_cap() {
  static const mpz_class cap = mpz_class(1) << 63;
  return cap;
}

unsigned long valuation(const mpz_class& n, const mpz_class& prime) {
  if (n == 0) return ~0UL;
  mpz_class rest = n;
  unsigned long v = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), prime.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
    ++v;
  }
  return v;
}

}  // namespace

RawPair raw_add(const RawPair& a, const RawPair& b) { return {a.p * b.q + b.p * a.q, a.q * b.q}; }
RawPair raw_mul(const RawPair& a, const RawPair& b) { return {a.p * b.p, a.q * b.q}; }
RawPair raw_neg(const RawPair& a) { return {-a.p, a.q}; }
RawPair raw_inv(const RawPair& a) { return {a.q * a.q, a.p * a.q}; }

const mpz_class& Fracpair::numerator() const {
  if (!pair_) throw UsageError("bottom fracpair has no numerator");
  return pair_->first;
}

const mpz_class& Fracpair::denominator() const {
  if (!pair_) throw UsageError("bottom fracpair has no denominator");
  return pair_->second;
}

RawPair Fracpair::representative() const {
  if (!pair_) return {1, 0};
  return {pair_->first, pair_->second};
}

Fracpair canon(const mpz_class& p, const mpz_class& q) {
  if (q == 0) return Fracpair::bottom();
  // Only primes dividing both p and q can fire the rule; with p = 0 that is every prime of q.
  mpz_class shared = gcd(p, q);
  if (shared >= factoring_cap()) {
    throw DomainError("fracpair canonicalization: cannot factor " + shared.get_str() + " (exceeds 2^63)");
  }
  mpz_class num = p, den = q;
  for (const auto& prime : prime_divisors(shared)) {
    // Each rule step lowers both valuations by one; it stops once l no longer
    // divides p or l^2 no longer divides q.
    unsigned long vp = valuation(num, prime);
    unsigned long vq = valuation(den, prime);
    if (vq < 2) continue;
    unsigned long steps = std::min(vp, vq - 1);
    mpz_class divisor;
    mpz_pow_ui(divisor.get_mpz_t(), prime.get_mpz_t(), steps);
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), divisor.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), divisor.get_mpz_t());
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Fracpair(std::pair{std::move(num), std::move(den)});
}

Fracpair operator+(const Fracpair& a, const Fracpair& b) { return canon(raw_add(a.representative(), b.representative())); }
Fracpair operator*(const Fracpair& a, const Fracpair& b) { return canon(raw_mul(a.representative(), b.representative())); }
Fracpair operator-(const Fracpair& a) { return canon(raw_neg(a.representative())); }
Fracpair inverse(const Fracpair& a) { return canon(raw_inv(a.representative())); }

QBot to_qbot(const Fracpair& a) {
  if (a.is_bottom()) return QBot::bottom();
  return QBot(mpq_class(a.numerator(), a.denominator()));
}

std::string Fracpair::to_string() const {
  if (!pair_) return std::string(kBottomText);
  return pair_->first.get_str() + "/" + pair_->second.get_str();
}

Fracpair Fracpair::parse(std::string_view text) {
  if (is_bottom_text(text)) return bottom();
  auto slash = text.find('/');
  auto parse_int = [](std::string_view s, std::size_t column) {
    std::string str(s);
    if (!str.empty() && str[0] == '+') str.erase(0, 1);
    mpz_class z;
    if (str.empty() || str == "-" || z.set_str(str, 10) != 0) throw ParseError("malformed integer '" + std::string(s) + "'", column);
    return z;
  };
  if (slash == std::string_view::npos) return canon(parse_int(text, 1), 1);
  return canon(parse_int(text.substr(0, slash), 1), parse_int(text.substr(slash + 1), slash + 2));
}

}  // namespace meadow
