// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "meadow/decide.hpp"
#include "meadow/fracpair.hpp"
#include "meadow/lawcheck.hpp"
#include "meadow/normal.hpp"
#include "support.hpp"

using namespace meadow;

namespace {

const std::vector<std::uint64_t> kPrimes{2, 3, 5, 7};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

std::size_t failures(const std::vector<CheckReport>& reports, Outcome& o, const std::string& where) {
  std::size_t n = 0;
  for (const auto& r : reports) {
    if (r.passed) continue;
    ++n;
    o.require(false, r.law + " on " + where);
  }
  return n;
}

Outcome axiom_soundness() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  const Suite axioms = find_suite("md_bot");
  std::size_t violations = 0;
  for (auto p : kPrimes) {
    violations += failures(check_suite(Model::fp_bot(p), axioms, Strategy::exhaustive()), o, "fp:" + std::to_string(p));
  }
  violations += failures(check_suite(Model::qbot(), axioms, Strategy::random(100000)), o, "qbot");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 60, "runtime over 60 s");
  o.detail << axioms.entries.size() << " axioms exhaustive on F2,F3,F5,F7 and 100000 random qbot assignments; "
           << violations << " violations; " << secs << " s";
  return o;
}

Outcome derived_identities() {
  Outcome o;
  std::size_t violations = 0, laws = 0;
  for (const char* name : {"identities", "conditionals"}) {
    Suite s = find_suite(name);
    laws += s.entries.size();
    violations += failures(check_suite(Model::fp_bot(7), s, Strategy::exhaustive()), o, "fp:7");
    violations += failures(check_suite(Model::qbot(), s, Strategy::random(100000)), o, "qbot");
    violations += failures(check_suite(Model::fracpair(), s, Strategy::random(100000)), o, "fracpair");
  }
  o.detail << laws << " laws on fp:7 (exhaustive), qbot and fracpair (100000 random each); " << violations
           << " violations";
  return o;
}

Outcome normalizer_soundness() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed);
  const Model q = Model::qbot();
  const Model f7 = Model::fp_bot(7);
  std::size_t mismatches = 0, support_errors = 0, bottoms = 0, evaluations = 0;
  for (int i = 0; i < 10000; ++i) {
    Term t = testing::random_term(rng, 4);
    FractionNormalForm f = to_fraction(t);
    if (f.is_bottom()) {
      ++bottoms;
    } else if (f.support() != vars(t)) {
      ++support_errors;
      o.require(false, "support of " + render(t));
    }
    for (const Model* m : {&q, &f7}) {
      for (int k = 0; k < 50; ++k) {
        Assignment a = testing::random_assignment(rng, *m, 4, 0.2);
        ++evaluations;
        if (eval(t, a, *m) == testing::fraction_oracle(f, a, *m)) continue;
        ++mismatches;
        o.require(false, render(t) + " in " + m->name());
      }
    }
  }
  o.detail << "10000 terms, " << evaluations << " evaluations in qbot and fp:7; " << mismatches << " mismatches; "
           << support_errors << " support errors; " << bottoms << " terms normalize to bottom";
  return o;
}

Outcome decision_closure() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed + 1);
  const Model q = Model::qbot();

  std::size_t rejected = 0;
  testing::TermShape shape{5, 0.3, 0.02, 0.25};
  std::uniform_int_distribution<int> steps(1, 5);
  for (int i = 0; i < 1000; ++i) {
    Term t = testing::random_term(rng, 3, shape);
    Term r = t;
    for (int k = steps(rng); k > 0; --k) r = testing::rewrite_step(rng, r, 3);
    if (equal_ccm0(t, r, 0).equal) continue;
    ++rejected;
    o.require(false, "rewrite pair " + render(t) + " = " + render(r));
  }

  std::size_t judged_equal = 0, proper = 0, refuted = 0, p2 = 0, p2_bad = 0, tried = 0;
  testing::TermShape small{4, 0.4, 0.03, 0.35};
  while (judged_equal < 1000 && tried < 2000000) {
    ++tried;
    Term t = testing::random_term(rng, 2, small);
    Term r = testing::random_term(rng, 2, small);
    Verdict v = equal_ccm0(t, r, 50);
    if (!v.equal) {
      if (v.failed == Condition::P2) {
        ++p2;
        bool valid = v.counterexample && eval(t, *v.counterexample, q) != eval(r, *v.counterexample, q);
        bool has_bottom = false;
        if (v.counterexample) {
          for (const auto& [name, val] : *v.counterexample) has_bottom = has_bottom || q.is_bottom(val);
        }
        if (!valid || !has_bottom) {
          ++p2_bad;
          o.require(false, "p2 witness for " + render(t) + " vs " + render(r));
        }
      }
      continue;
    }
    ++judged_equal;
    if (!(t == r) && !to_fraction(t).is_bottom()) ++proper;
    for (int k = 0; k < 200; ++k) {
      Assignment a = testing::random_assignment(rng, q, 2, 0.2);
      if (eval(t, a, q) == eval(r, a, q)) continue;
      ++refuted;
      o.require(false, "refuted " + render(t) + " = " + render(r));
      break;
    }
  }
  o.require(judged_equal == 1000, "fewer than 1000 equal pairs found");

  auto fixed = [&](const char* a, const char* b, std::optional<Condition> expect) {
    Verdict v = equal_ccm0(parse(a), parse(b));
    o.require(v.equal == !expect && v.failed == expect, std::string("verdict for ") + a + " vs " + b);
  };
  fixed("x*x^-1", "1 + 0*x^-1", std::nullopt);
  fixed("x*x^-1", "1", Condition::P2);
  fixed("(x*x - 1)*(x - 1)^-1", "x + 1", Condition::P1);

  o.detail << "1000 rewrite pairs, " << rejected << " judged NotEqual; " << judged_equal << " random equal pairs (" << proper
           << " distinct and not bottom, from " << tried << " tried), " << refuted << " refuted; " << p2 << " p2 verdicts, " << p2_bad
           << " without a verified bottom witness; fixed verdicts checked";
  return o;
}

Outcome law_landscape() {
  Outcome o;
  std::vector<Model> models;
  for (auto p : kPrimes) models.push_back(Model::fp_bot(p));
  for (const auto& m : models) {
    for (const char* law : {"NVL", "AVL", "CIL", "ICL"}) {
      o.require(check_conditional(m, named_law(law), Strategy::exhaustive()).passed, std::string(law) + " on " + m.name());
    }
  }
  const Model fp = Model::fracpair();
  for (const char* law : {"CIL", "ICL"}) {
    CheckReport r = check_conditional(fp, named_law(law), Strategy::random(1000));
    bool witness = r.witness && fp.render(r.witness->at("x")) == "2/1";
    o.require(!r.passed && witness, std::string(law) + " on fracpair with witness x=2/1");
  }
  models.push_back(Model::qbot());
  models.push_back(fp);
  for (const auto& m : models) {
    Strategy s = m.is_finite() ? Strategy::exhaustive() : Strategy::random(10000);
    bool cil = check_conditional(m, named_law("CIL"), s).passed;
    bool icl = check_conditional(m, named_law("ICL"), s).passed;
    o.require(cil == icl, "CIL and ICL disagree on " + m.name());
  }
  Suite c0 = c0_suite(20);
  for (const auto& r : check_suite(Model::qbot(), c0, Strategy::exhaustive())) o.require(r.passed, r.law + " on qbot");
  for (auto p : kPrimes) {
    auto reports = check_suite(Model::fp_bot(p), c0, Strategy::exhaustive());
    for (std::size_t n = 0; n < reports.size(); ++n) {
      o.require(reports[n].passed == ((n + 1) % p != 0), reports[n].law + " on fp:" + std::to_string(p));
    }
  }
  o.detail << "NVL, AVL, CIL, ICL exhaustive on F2..F7; CIL, ICL refuted on fracpair at x=2/1; CIL/ICL agree on "
           << models.size() << " models; C0 n<=20 as expected";
  return o;
}

Outcome fracpair_algebra() {
  Outcome o;
  std::size_t pairs = 0, instances = 0;
  for (long p = -500; p <= 500; ++p) {
    for (long q = -500; q <= 500; ++q) {
      if (q == 0) {
        o.require(canon(p, q).is_bottom(), "p/0 is bottom");
        continue;
      }
      ++pairs;
      Fracpair c = canon(p, q);
      if (canon(c.numerator(), c.denominator()) != c) o.require(false, "idempotence at " + std::to_string(p));
      // Every single rule step, including z = -1, keeps the canonical form.
      if (canon(-p, -q) != c) o.require(false, "sign step at " + std::to_string(p) + "/" + std::to_string(q));
      for (long z = 2; z <= 50 && z * z <= std::abs(q); ++z) {
        if (p % z != 0 || q % (z * z) != 0) continue;
        ++instances;
        if (canon(p / z, q / z) != c) {
          o.require(false, "rule step at " + std::to_string(p) + "/" + std::to_string(q) + " z=" + std::to_string(z));
        }
      }
      // The canonical form admits no further step.
      long cp = c.numerator().get_si(), cq = c.denominator().get_si();
      bool irreducible = cq > 0;
      for (long l = 2; l * l <= cq && irreducible; ++l) irreducible = !(cp % l == 0 && cq % (l * l) == 0);
      if (!irreducible) o.require(false, "reducible canonical form " + c.to_string());
    }
  }

  std::mt19937_64 rng(kDefaultSeed + 2);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(0, 1000);
  std::uniform_int_distribution<int> op(0, 3);
  for (int i = 0; i < 10000; ++i) {
    Fracpair a = canon(num(rng), den(rng));
    Fracpair b = canon(num(rng), den(rng));
    bool ok = true;
    switch (op(rng)) {
      case 0: ok = to_qbot(a + b) == to_qbot(a) + to_qbot(b); break;
      case 1: ok = to_qbot(a * b) == to_qbot(a) * to_qbot(b); break;
      case 2: ok = to_qbot(-a) == -to_qbot(a); break;
      default: ok = to_qbot(inverse(a)) == inverse(to_qbot(a)); break;
    }
    o.require(ok, "homomorphism at " + a.to_string() + ", " + b.to_string());
  }
  Fracpair half = canon(1, 2);
  o.require((half + half).to_string() == "2/2" && half + half != canon(1, 1), "1/2 + 1/2 = 2/2 != 1/1");
  o.require(inverse(canon(2, 3)).to_string() == "9/6", "inverse of 2/3 is 9/6");
  o.detail << pairs << " pairs with |p|,|q| <= 500 and " << instances
           << " rule instances with 2 <= z <= 50; 10000 homomorphism instances; fixed values checked";
  return o;
}

Outcome correspondence() {
  Outcome o;
  const Suite md = find_suite("md");
  for (auto p : kPrimes) {
    Model m = totalize_field(p);
    FiniteMeadow stripped = strip_bottom(m);
    Model table = Model::table(stripped, "strip(fp:" + std::to_string(p) + ")");
    failures(check_suite(table, md, Strategy::exhaustive()), o, table.name());
    o.require(totalize(stripped) == m.tabulate(), "totalize(strip) tables for p=" + std::to_string(p));
  }
  o.detail << "md axioms exhaustive on strip_bottom(F_p) and totalize(strip_bottom(F_p)) = F_p tables for p = 2, 3, 5, 7";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"axiom soundness", axiom_soundness},
      {"derived identities", derived_identities},
      {"normalizer soundness", normalizer_soundness},
      {"decision closure", decision_closure},
      {"law landscape", law_landscape},
      {"fracpair algebra", fracpair_algebra},
      {"correspondence", correspondence},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o = criteria[i].second();
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.detail.str()
              << std::endl;
  }
  return all ? 0 : 1;
}
