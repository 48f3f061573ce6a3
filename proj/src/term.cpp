#include "meadow/term.hpp"

#include <cctype>
#include <vector>

#include "meadow/error.hpp"

namespace meadow {

Term Term::make(Kind kind, std::string name, const Term* l, const Term* r) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  if (l != nullptr) {
    node->left = std::make_shared<const Term>(*l);
    node->depth = l->depth() + 1;
    node->size += l->size();
  }
  if (r != nullptr) {
    node->right = std::make_shared<const Term>(*r);
    node->depth = std::max(node->depth, r->depth() + 1);
    node->size += r->size();
  }
  return Term(std::move(node));
}

Term Term::zero() {
  static const Term t = make(Kind::Zero, {}, nullptr, nullptr);
  return t;
}
Term Term::one() {
  static const Term t = make(Kind::One, {}, nullptr, nullptr);
  return t;
}
Term Term::bottom() {
  static const Term t = make(Kind::Bottom, {}, nullptr, nullptr);
  return t;
}

Term Term::var(std::string name) {
  if (!is_valid_variable_name(name)) throw UsageError("invalid variable name '" + name + "'");
  return make(Kind::Var, std::move(name), nullptr, nullptr);
}

Term Term::add(Term l, Term r) { return make(Kind::Add, {}, &l, &r); }
Term Term::mul(Term l, Term r) { return make(Kind::Mul, {}, &l, &r); }
Term Term::neg(Term t) { return make(Kind::Neg, {}, &t, nullptr); }
Term Term::inv(Term t) { return make(Kind::Inv, {}, &t, nullptr); }

Term Term::numeral(std::size_t n) {
  if (n == 0) return zero();
  Term t = one();
  for (std::size_t i = 1; i < n; ++i) t = add(t, one());
  return t;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::Zero:
    case Term::Kind::One:
    case Term::Kind::Bottom: return true;
    case Term::Kind::Var: return a.name() == b.name();
    case Term::Kind::Neg:
    case Term::Kind::Inv: return a.operand() == b.operand();
    case Term::Kind::Add:
    case Term::Kind::Mul: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "bot";
}

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out.insert(t.name()); break;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      collect_vars(t.left(), out);
      collect_vars(t.right(), out);
      break;
    case Term::Kind::Neg:
    case Term::Kind::Inv: collect_vars(t.operand(), out); break;
    default: break;
  }
}

// Binding strength used by the printer: sums < products < unary minus < postfix inverse < atoms.
enum Level { kSum = 1, kProduct = 2, kPrefix = 3, kPostfix = 4, kAtom = 5 };

Level level_of(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Add: return kSum;
    case Term::Kind::Mul: return kProduct;
    case Term::Kind::Neg: return kPrefix;
    case Term::Kind::Inv: return kPostfix;
    default: return kAtom;
  }
}

void render_into(const Term& t, std::string& out);

void render_at(const Term& t, Level min_level, std::string& out) {
  if (level_of(t) < min_level) {
    out += '(';
    render_into(t, out);
    out += ')';
  } else {
    render_into(t, out);
  }
}

void render_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: out += '0'; break;
    case Term::Kind::One: out += '1'; break;
    case Term::Kind::Bottom: out += "bot"; break;
    case Term::Kind::Var: out += t.name(); break;
    case Term::Kind::Add:
      render_at(t.left(), kSum, out);
      if (t.right().kind() == Term::Kind::Neg) {
        // a + (-b) prints as a - b; the operand of '-' is a full term.
        out += " - ";
        render_at(t.right().operand(), kProduct, out);
      } else {
        out += " + ";
        render_at(t.right(), kProduct, out);
      }
      break;
    case Term::Kind::Mul:
      render_at(t.left(), kProduct, out);
      out += " * ";
      render_at(t.right(), kPrefix, out);
      break;
    case Term::Kind::Neg:
      out += '-';
      render_at(t.operand(), kPrefix, out);
      break;
    case Term::Kind::Inv:
      render_at(t.operand(), kAtom, out);
      out += "^-1";
      break;
  }
}

}  // namespace

std::string render(const Term& t) {
  std::string out;
  render_into(t, out);
  return out;
}

std::set<std::string> vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

bool contains_bottom(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Bottom: return true;
    case Term::Kind::Add:
    case Term::Kind::Mul: return contains_bottom(t.left()) || contains_bottom(t.right());
    case Term::Kind::Neg:
    case Term::Kind::Inv: return contains_bottom(t.operand());
    default: return false;
  }
}

Value eval(const Term& t, const Assignment& a, const Model& m) {
  switch (t.kind()) {
    case Term::Kind::Zero: return m.zero();
    case Term::Kind::One: return m.one();
    case Term::Kind::Bottom: return m.bottom();
    case Term::Kind::Var: {
      auto it = a.find(t.name());
      if (it == a.end()) throw UsageError("unbound variable '" + t.name() + "'");
      return it->second;
    }
    case Term::Kind::Add: return m.add(eval(t.left(), a, m), eval(t.right(), a, m));
    case Term::Kind::Mul: return m.mul(eval(t.left(), a, m), eval(t.right(), a, m));
    case Term::Kind::Neg: return m.neg(eval(t.operand(), a, m));
    case Term::Kind::Inv: return m.inv(eval(t.operand(), a, m));
  }
  return m.zero();
}

Term substitute(const Term& t, const std::map<std::string, Term, std::less<>>& s) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = s.find(t.name());
      return it == s.end() ? t : it->second;
    }
    case Term::Kind::Add: return Term::add(substitute(t.left(), s), substitute(t.right(), s));
    case Term::Kind::Mul: return Term::mul(substitute(t.left(), s), substitute(t.right(), s));
    case Term::Kind::Neg: return Term::neg(substitute(t.operand(), s));
    case Term::Kind::Inv: return Term::inv(substitute(t.operand(), s));
    default: return t;
  }
}

Term integer_term(const mpz_class& n) {
  if (n < 0) return Term::neg(integer_term(mpz_class(-n)));
  if (n == 0) return Term::zero();
  Term acc = Term::one();
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    acc = Term::mul(Term::add(Term::one(), Term::one()), acc);
    if (mpz_tstbit(n.get_mpz_t(), i)) acc = Term::add(acc, Term::one());
  }
  return acc;
}

}  // namespace meadow
