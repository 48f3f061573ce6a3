#include "meadow/model.hpp"

#include <charconv>

#include "meadow/error.hpp"
#include "meadow/factor.hpp"

namespace meadow {

namespace {

constexpr std::uint64_t kMaxModulus = 1ULL << 62;

const char* kind_label(Model::Kind k) {
  switch (k) {
    case Model::Kind::QBot: return "qbot";
    case Model::Kind::FpBot: return "fp";
    case Model::Kind::QZero: return "qzero";
    case Model::Kind::Fracpair: return "fracpair";
    case Model::Kind::Table: return "table";
  }
  return "?";
}

}  // namespace

Model Model::qbot() { return Model(Kind::QBot, "qbot"); }
Model Model::qzero() { return Model(Kind::QZero, "qzero"); }
Model Model::fracpair() { return Model(Kind::Fracpair, "fracpair"); }

Model Model::fp_bot(std::uint64_t p) {
  if (p > kMaxModulus || !is_prime(p)) throw UsageError("fp:" + std::to_string(p) + ": modulus must be a prime below 2^62");
  Model m(Kind::FpBot, "fp:" + std::to_string(p));
  m.modulus_ = p;
  return m;
}

Model Model::table(FiniteMeadow tables, std::string name) {
  if (tables.size() == 0) throw UsageError("table model needs a nonempty carrier");
  Model m(Kind::Table, std::move(name));
  m.table_ = std::make_shared<const FiniteMeadow>(std::move(tables));
  return m;
}

Model Model::from_name(std::string_view name) {
  if (name == "qbot") return qbot();
  if (name == "qzero") return qzero();
  if (name == "fracpair") return fracpair();
  if (name.starts_with("fp:")) {
    auto digits = name.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw UsageError("malformed model name '" + std::string(name) + "'; expected fp:<prime>");
    }
    return fp_bot(p);
  }
  throw UsageError("unknown model '" + std::string(name) + "'; known models: qbot, qzero, fp:<prime>, fracpair");
}

bool Model::has_bottom() const {
  switch (kind_) {
    case Kind::QZero: return false;
    case Kind::Table: return table_->bottom.has_value();
    default: return true;
  }
}

template <class T>
const T& Model::expect(const Value& v) const {
  const T* p = std::get_if<T>(&v);
  if (p == nullptr) throw UsageError("model mismatch: value does not belong to model " + name_);
  if constexpr (std::is_same_v<T, FpBot>) {
    if (p->modulus() != modulus_) throw UsageError("model mismatch: value from F_" + std::to_string(p->modulus()) + " used in " + name_);
  }
  if constexpr (std::is_same_v<T, TableElement>) {
    if (p->owner != table_.get() || p->index >= table_->size()) throw UsageError("model mismatch: foreign table element in " + name_);
  }
  return *p;
}

std::vector<Value> Model::carrier() const {
  std::vector<Value> out;
  if (kind_ == Kind::FpBot) {
    out.reserve(modulus_ + 1);
    for (std::uint64_t r = 0; r < modulus_; ++r) out.emplace_back(FpBot(modulus_, static_cast<std::int64_t>(r)));
    out.emplace_back(FpBot::bottom(modulus_));
    return out;
  }
  if (kind_ == Kind::Table) {
    for (std::size_t i = 0; i < table_->size(); ++i) {
      if (table_->bottom && *table_->bottom == i) continue;
      out.emplace_back(element(i));
    }
    if (table_->bottom) out.emplace_back(element(*table_->bottom));
    return out;
  }
  throw UsageError(std::string("model ") + name_ + " has an infinite carrier");
}

Value Model::zero() const {
  switch (kind_) {
    case Kind::QBot: return QBot(0);
    case Kind::FpBot: return FpBot(modulus_, 0);
    case Kind::QZero: return QZero(0);
    case Kind::Fracpair: return Fracpair();
    case Kind::Table: return element(table_->zero);
  }
  return {};
}

Value Model::one() const {
  switch (kind_) {
    case Kind::QBot: return QBot(1);
    case Kind::FpBot: return FpBot(modulus_, 1);
    case Kind::QZero: return QZero(1);
    case Kind::Fracpair: return canon(1, 1);
    case Kind::Table: return element(table_->one);
  }
  return {};
}

Value Model::bottom() const {
  switch (kind_) {
    case Kind::QBot: return QBot::bottom();
    case Kind::FpBot: return FpBot::bottom(modulus_);
    case Kind::Fracpair: return Fracpair::bottom();
    case Kind::Table:
      if (table_->bottom) return element(*table_->bottom);
      break;
    case Kind::QZero: break;
  }
  throw UsageError("model " + name_ + " has no additional value");
}

Value Model::numeral(const mpz_class& n) const {
  if (n < 0) throw UsageError("numerals are natural numbers");
  switch (kind_) {
    case Kind::QBot: return QBot(mpq_class(n));
    case Kind::QZero: return QZero(mpq_class(n));
    case Kind::FpBot: {
      mpz_class r = n % mpz_class(std::to_string(modulus_));
      return FpBot(modulus_, static_cast<std::int64_t>(r.get_ui()));
    }
    case Kind::Fracpair: return canon(n, 1);
    case Kind::Table: break;
  }
  // Double-and-add: valid in every common meadow by associativity.
  Value acc = zero();
  Value unit = one();
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = add(acc, acc);
    if (mpz_tstbit(n.get_mpz_t(), i)) acc = add(acc, unit);
  }
  return acc;
}

Value Model::add(const Value& a, const Value& b) const {
  switch (kind_) {
    case Kind::QBot: return expect<QBot>(a) + expect<QBot>(b);
    case Kind::FpBot: return expect<FpBot>(a) + expect<FpBot>(b);
    case Kind::QZero: return expect<QZero>(a) + expect<QZero>(b);
    case Kind::Fracpair: return expect<Fracpair>(a) + expect<Fracpair>(b);
    case Kind::Table: return element(table_->sum(expect<TableElement>(a).index, expect<TableElement>(b).index));
  }
  return {};
}

Value Model::mul(const Value& a, const Value& b) const {
  switch (kind_) {
    case Kind::QBot: return expect<QBot>(a) * expect<QBot>(b);
    case Kind::FpBot: return expect<FpBot>(a) * expect<FpBot>(b);
    case Kind::QZero: return expect<QZero>(a) * expect<QZero>(b);
    case Kind::Fracpair: return expect<Fracpair>(a) * expect<Fracpair>(b);
    case Kind::Table: return element(table_->product(expect<TableElement>(a).index, expect<TableElement>(b).index));
  }
  return {};
}

Value Model::neg(const Value& a) const {
  switch (kind_) {
    case Kind::QBot: return -expect<QBot>(a);
    case Kind::FpBot: return -expect<FpBot>(a);
    case Kind::QZero: return -expect<QZero>(a);
    case Kind::Fracpair: return -expect<Fracpair>(a);
    case Kind::Table: return element(table_->neg[expect<TableElement>(a).index]);
  }
  return {};
}

Value Model::inv(const Value& a) const {
  switch (kind_) {
    case Kind::QBot: return inverse(expect<QBot>(a));
    case Kind::FpBot: return inverse(expect<FpBot>(a));
    case Kind::QZero: return inverse(expect<QZero>(a));
    case Kind::Fracpair: return inverse(expect<Fracpair>(a));
    case Kind::Table: return element(table_->inv[expect<TableElement>(a).index]);
  }
  return {};
}

bool Model::is_bottom(const Value& v) const {
  switch (kind_) {
    case Kind::QBot: return expect<QBot>(v).is_bottom();
    case Kind::FpBot: return expect<FpBot>(v).is_bottom();
    case Kind::QZero: expect<QZero>(v); return false;
    case Kind::Fracpair: return expect<Fracpair>(v).is_bottom();
    case Kind::Table: return table_->bottom && expect<TableElement>(v).index == *table_->bottom;
  }
  return false;
}

bool Model::contains(const Value& v) const {
  try {
    is_bottom(v);
    return true;
  } catch (const UsageError&) {
    return false;
  }
}

std::string Model::render(const Value& v) const {
  switch (kind_) {
    case Kind::QBot: return expect<QBot>(v).to_string();
    case Kind::FpBot: return expect<FpBot>(v).to_string();
    case Kind::QZero: return expect<QZero>(v).to_string();
    case Kind::Fracpair: return expect<Fracpair>(v).to_string();
    case Kind::Table: return table_->labels[expect<TableElement>(v).index];
  }
  return {};
}

Value Model::parse_value(std::string_view text) const {
  switch (kind_) {
    case Kind::QBot: return QBot::parse(text);
    case Kind::QZero:
      if (is_bottom_text(text)) throw UsageError("model qzero has no additional value");
      return QZero(parse_rational(text));
    case Kind::Fracpair: return Fracpair::parse(text);
    case Kind::FpBot: {
      if (is_bottom_text(text)) return bottom();
      mpq_class q = parse_rational(text);
      if (q.get_den() != 1) throw UsageError("fp values are integers");
      mpz_class r = q.get_num() % mpz_class(std::to_string(modulus_));
      if (r < 0) r += mpz_class(std::to_string(modulus_));
      return FpBot(modulus_, static_cast<std::int64_t>(r.get_ui()));
    }
    case Kind::Table:
      for (std::size_t i = 0; i < table_->size(); ++i) {
        if (table_->labels[i] == text || (table_->bottom == i && is_bottom_text(text))) return element(i);
      }
      throw UsageError("'" + std::string(text) + "' is not an element of " + name_);
  }
  return {};
}

FiniteMeadow Model::tabulate() const {
  if (kind_ == Kind::Table) return *table_;
  if (kind_ != Kind::FpBot) throw UsageError(std::string("cannot tabulate infinite model ") + kind_label(kind_));
  if (modulus_ > (1ULL << 12)) throw UsageError("tabulate: modulus too large for tables");
  const std::size_t p = modulus_;
  const std::size_t n = p + 1;  // residues 0..p-1, bottom last
  auto index_of = [&](const FpBot& v) { return v.is_bottom() ? p : static_cast<std::size_t>(v.residue()); };
  auto value_of = [&](std::size_t i) { return i == p ? FpBot::bottom(p) : FpBot(p, static_cast<std::int64_t>(i)); };
  FiniteMeadow t;
  for (std::size_t i = 0; i < n; ++i) t.labels.push_back(value_of(i).to_string());
  t.zero = 0;
  t.one = 1 % p;
  t.bottom = p;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  t.neg.resize(n);
  t.inv.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = index_of(value_of(a) + value_of(b));
      t.mul[a * n + b] = index_of(value_of(a) * value_of(b));
    }
    t.neg[a] = index_of(-value_of(a));
    t.inv[a] = index_of(inverse(value_of(a)));
  }
  return t;
}

FiniteMeadow strip_bottom(const Model& m) { return strip_bottom(m.tabulate()); }

}  // namespace meadow
