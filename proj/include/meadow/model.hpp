#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "meadow/fracpair.hpp"
#include "meadow/values.hpp"

namespace meadow {

/// Element index into the tables of a table-backed model.
struct TableElement {
  std::size_t index = 0;
  const FiniteMeadow* owner = nullptr;
  friend bool operator==(const TableElement&, const TableElement&) = default;
};

using Value = std::variant<QBot, FpBot, QZero, Fracpair, TableElement>;

/// Uniform dispatch over the carriers. Copies share table storage.
class Model {
 public:
  enum class Kind { QBot, FpBot, QZero, Fracpair, Table };

  static Model qbot();
  static Model qzero();
  /// Throws UsageError unless p is prime.
  static Model fp_bot(std::uint64_t p);
  static Model fracpair();
  static Model table(FiniteMeadow tables, std::string name);
  /// `qbot`, `qzero`, `fp:<prime>`, `fracpair`.
  static Model from_name(std::string_view name);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::uint64_t modulus() const { return modulus_; }
  bool has_bottom() const;
  bool is_finite() const { return kind_ == Kind::FpBot || kind_ == Kind::Table; }
  /// Finite models only; bottom (when present) is listed last.
  std::vector<Value> carrier() const;

  Value zero() const;
  Value one() const;
  /// Throws UsageError for models without an additional value.
  Value bottom() const;
  /// The numeral n, i.e. 0, 1, (n-1) + 1, computed by doubling for large n.
  Value numeral(const mpz_class& n) const;

  Value add(const Value& a, const Value& b) const;
  Value mul(const Value& a, const Value& b) const;
  Value neg(const Value& a) const;
  Value inv(const Value& a) const;

  bool is_bottom(const Value& v) const;
  bool contains(const Value& v) const;
  std::string render(const Value& v) const;
  Value parse_value(std::string_view text) const;

  /// Operation tables of a finite model.
  FiniteMeadow tabulate() const;

 private:
  Model(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}
  template <class T>
  const T& expect(const Value& v) const;
  TableElement element(std::size_t index) const { return {index, table_.get()}; }

  Kind kind_;
  std::string name_;
  std::uint64_t modulus_ = 0;
  std::shared_ptr<const FiniteMeadow> table_;
};

/// The common meadow F_p with an additional value; the model satisfies the
/// common-meadow axioms together with the normal- and additional-value laws.
inline Model totalize_field(std::uint64_t p) { return Model::fp_bot(p); }

/// Tabulates a finite common meadow and removes its additional value.
FiniteMeadow strip_bottom(const Model& m);

}  // namespace meadow
