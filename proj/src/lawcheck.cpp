#include "meadow/lawcheck.hpp"

#include <charconv>
#include <set>
#include <stdexcept>

#include "meadow/error.hpp"
#include "meadow/fracpair.hpp"

namespace meadow {

namespace {

constexpr double kBottomProbability = 0.15;
constexpr int kRationalBound = 9;
constexpr int kFracpairBound = 1000;

bool same(const Model& m, const Equation& e, const Assignment& a) {
  return eval(e.lhs, a, m) == eval(e.rhs, a, m);
}

bool premises_hold(const Model& m, const Law& law, const Assignment& a) {
  for (const auto& p : law.premises) {
    if (same(m, p.equation, a) == p.negated) return false;
  }
  return true;
}

/// Feeds assignments to `visit` until it returns false; returns the number fed.
template <class Visit>
std::size_t enumerate_assignments(const Model& m, const std::vector<std::string>& names, const Strategy& s,
                                  Visit visit) {
  std::size_t count = 0;
  auto odometer = [&](const std::vector<Value>& pool, std::size_t limit) -> bool {
    std::vector<std::size_t> idx(names.size(), 0);
    while (count < limit) {
      Assignment a;
      for (std::size_t i = 0; i < names.size(); ++i) a.emplace(names[i], pool[idx[i]]);
      ++count;
      if (!visit(a)) return false;
      std::size_t k = names.size();
      // Last variable varies fastest.
      while (k > 0 && idx[k - 1] + 1 == pool.size()) idx[--k] = 0;
      if (k == 0) return true;
      ++idx[k - 1];
    }
    return true;
  };

  if (names.empty()) {
    visit(Assignment{});
    return 1;
  }
  if (s.kind == Strategy::Kind::Exhaustive) {
    if (!m.is_finite()) throw UsageError("exhaustive strategy needs a finite model; " + m.name() + " is infinite");
    odometer(m.carrier(), static_cast<std::size_t>(-1));
    return count;
  }
  if (!odometer(boundary_values(m), s.samples)) return count;
  std::mt19937_64 rng(s.seed);
  while (count < s.samples) {
    Assignment a;
    for (const auto& n : names) a.emplace(n, sample_value(m, rng));
    ++count;
    if (!visit(a)) break;
  }
  return count;
}

std::vector<std::string> equation_variables(const Equation& e, std::set<std::string>& acc) {
  auto l = vars(e.lhs);
  auto r = vars(e.rhs);
  acc.insert(l.begin(), l.end());
  acc.insert(r.begin(), r.end());
  return {acc.begin(), acc.end()};
}

Equation parse_equation(std::string_view text, const std::string& law) {
  auto pos = text.find("!=");
  std::size_t width = 2;
  if (pos == std::string_view::npos) {
    pos = text.find('=');
    width = 1;
  }
  if (pos == std::string_view::npos) throw UsageError("law " + law + ": expected an equation, got '" + std::string(text) + "'");
  return {parse(text.substr(0, pos)), parse(text.substr(pos + width))};
}

}  // namespace

Strategy Strategy::parse(std::string_view text, std::uint64_t seed) {
  if (text == "exhaustive") return exhaustive();
  if (text.starts_with("random:")) {
    auto digits = text.substr(7);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return random(n, seed);
  }
  throw UsageError("unknown strategy '" + std::string(text) + "'; expected exhaustive or random:<n>");
}

std::string Strategy::to_string() const {
  return kind == Kind::Exhaustive ? "exhaustive" : "random:" + std::to_string(samples);
}

Law make_law(std::string name, const std::vector<std::string>& premises, std::string_view conclusion) {
  std::vector<Premise> parsed;
  for (const auto& text : premises) {
    parsed.push_back({parse_equation(text, name), text.find("!=") != std::string::npos});
  }
  Equation concl = parse_equation(conclusion, name);
  return Law{std::move(name), std::move(parsed), std::move(concl)};
}

Law make_equation_law(std::string name, std::string_view lhs, std::string_view rhs) {
  return Law{std::move(name), {}, {parse(lhs), parse(rhs)}};
}

std::vector<std::string> law_variables(const Law& law) {
  std::set<std::string> acc;
  for (const auto& p : law.premises) equation_variables(p.equation, acc);
  return equation_variables(law.conclusion, acc);
}

bool holds_at(const Model& m, const Law& law, const Assignment& a) {
  return !premises_hold(m, law, a) || same(m, law.conclusion, a);
}

std::vector<Value> boundary_values(const Model& m) {
  switch (m.kind()) {
    case Model::Kind::QBot:
      return {QBot(0), QBot(1), QBot(-1), QBot::bottom()};
    case Model::Kind::QZero:
      return {QZero(0), QZero(1), QZero(-1)};
    case Model::Kind::Fracpair:
      return {canon(0, 1), canon(1, 1), canon(-1, 1), Fracpair::bottom(), canon(2, 1), canon(0, 2), canon(2, 2)};
    case Model::Kind::FpBot:
    case Model::Kind::Table:
      if (m.kind() == Model::Kind::Table || m.modulus() <= 8) return m.carrier();
      return {m.zero(), m.one(), m.neg(m.one()), m.bottom()};
  }
  return {};
}

Value sample_value(const Model& m, std::mt19937_64& rng) {
  std::bernoulli_distribution bottom(kBottomProbability);
  switch (m.kind()) {
    case Model::Kind::QBot:
    case Model::Kind::QZero: {
      if (m.kind() == Model::Kind::QBot && bottom(rng)) return QBot::bottom();
      std::uniform_int_distribution<int> num(-kRationalBound, kRationalBound);
      std::uniform_int_distribution<int> den(1, 2 * kRationalBound);
      int n = num(rng);
      int d = den(rng);
      d = d <= kRationalBound ? -d : d - kRationalBound;  // [-9, -1] u [1, 9]
      mpq_class q(n, d);
      q.canonicalize();
      if (m.kind() == Model::Kind::QBot) return QBot(q);
      return QZero(q);
    }
    case Model::Kind::Fracpair: {
      if (bottom(rng)) return Fracpair::bottom();
      std::uniform_int_distribution<int> num(-kFracpairBound, kFracpairBound);
      std::uniform_int_distribution<int> den(1, kFracpairBound);
      return canon(num(rng), den(rng));
    }
    case Model::Kind::FpBot: {
      if (m.modulus() <= 1024) {
        std::uniform_int_distribution<std::uint64_t> pick(0, m.modulus());
        auto i = pick(rng);
        return i == m.modulus() ? m.bottom() : Value(FpBot(m.modulus(), static_cast<std::int64_t>(i)));
      }
      if (bottom(rng)) return m.bottom();
      std::uniform_int_distribution<std::uint64_t> pick(0, m.modulus() - 1);
      return FpBot(m.modulus(), static_cast<std::int64_t>(pick(rng)));
    }
    case Model::Kind::Table: {
      auto carrier = m.carrier();
      std::uniform_int_distribution<std::size_t> pick(0, carrier.size() - 1);
      return carrier[pick(rng)];
    }
  }
  return m.zero();
}

CheckReport check_conditional(const Model& m, const Law& law, const Strategy& s) {
  CheckReport report;
  report.law = law.name;
  report.model = m.name();
  report.strategy = s;
  const auto names = law_variables(law);
  report.cases = enumerate_assignments(m, names, s, [&](const Assignment& a) {
    if (!premises_hold(m, law, a)) return true;
    ++report.premise_hits;
    if (same(m, law.conclusion, a)) return true;
    if (holds_at(m, law, a)) throw std::logic_error("law check: violation did not reproduce for " + law.name);
    report.passed = false;
    report.witness = a;
    return false;
  });
  return report;
}

CheckReport check_equation(const Model& m, const Term& lhs, const Term& rhs, const Strategy& s, std::string name) {
  return check_conditional(m, Law{std::move(name), {}, {lhs, rhs}}, s);
}

CheckReport check_implication(const Model& m, const LawImplication& imp, const Strategy& s) {
  std::size_t cases = 0;
  for (const auto& assumed : imp.assumed) {
    CheckReport r = check_conditional(m, assumed, s);
    cases += r.cases;
    if (!r.passed) {
      CheckReport vacuous;
      vacuous.law = imp.name;
      vacuous.model = m.name();
      vacuous.strategy = s;
      vacuous.cases = cases;
      vacuous.note = "vacuous: " + assumed.name + " fails on this model";
      return vacuous;
    }
  }
  CheckReport r = check_conditional(m, imp.concluded, s);
  r.law = imp.name;
  r.cases += cases;
  return r;
}

CheckReport check_entry(const Model& m, const SuiteEntry& e, const Strategy& s) {
  if (const auto* law = std::get_if<Law>(&e)) return check_conditional(m, *law, s);
  return check_implication(m, std::get<LawImplication>(e), s);
}

std::vector<CheckReport> check_suite(const Model& m, const Suite& suite, const Strategy& s) {
  std::vector<CheckReport> out;
  out.reserve(suite.entries.size());
  for (const auto& e : suite.entries) out.push_back(check_entry(m, e, s));
  return out;
}

}  // namespace meadow
