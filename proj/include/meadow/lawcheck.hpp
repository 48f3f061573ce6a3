#pragma once

// Model-level checking of equations, conditional equations and implications
// between laws: exhaustive on finite carriers, seeded random sampling on
// infinite ones.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "meadow/model.hpp"
#include "meadow/term.hpp"

namespace meadow {

struct Equation {
  Term lhs;
  Term rhs;
};

/// `lhs = rhs`, or `lhs != rhs` when negated.
struct Premise {
  Equation equation;
  bool negated = false;
};

struct Law {
  std::string name;
  std::vector<Premise> premises;
  Equation conclusion;
};

/// Models satisfying every assumed law must satisfy the concluded one.
struct LawImplication {
  std::string name;
  std::vector<Law> assumed;
  Law concluded;
};

using SuiteEntry = std::variant<Law, LawImplication>;

struct Suite {
  std::string name;
  std::string description;
  std::vector<SuiteEntry> entries;
};

inline constexpr std::uint64_t kDefaultSeed = 0x6d656164;  // "mead"

struct Strategy {
  enum class Kind { Exhaustive, Random };
  Kind kind = Kind::Exhaustive;
  std::size_t samples = 0;
  std::uint64_t seed = kDefaultSeed;

  static Strategy exhaustive() { return {}; }
  static Strategy random(std::size_t samples, std::uint64_t seed = kDefaultSeed) {
    return {Kind::Random, samples, seed};
  }
  /// `exhaustive` or `random:<n>`.
  static Strategy parse(std::string_view text, std::uint64_t seed = kDefaultSeed);
  std::string to_string() const;
};

struct CheckReport {
  std::string law;
  std::string model;
  Strategy strategy;
  bool passed = true;
  /// Violating assignment, re-verified by direct evaluation.
  std::optional<Assignment> witness;
  /// Assignments tried / of those, how many satisfied every premise.
  std::size_t cases = 0;
  std::size_t premise_hits = 0;
  std::string note;
};

/// Parses a law from text: premises as `lhs = rhs` or `lhs != rhs`.
Law make_law(std::string name, const std::vector<std::string>& premises, std::string_view conclusion);
Law make_equation_law(std::string name, std::string_view lhs, std::string_view rhs);

std::vector<std::string> law_variables(const Law& law);

/// True iff the law holds at this assignment (vacuously when a premise fails).
bool holds_at(const Model& m, const Law& law, const Assignment& a);

CheckReport check_equation(const Model& m, const Term& lhs, const Term& rhs, const Strategy& s,
                           std::string name = "equation");
CheckReport check_conditional(const Model& m, const Law& law, const Strategy& s);
CheckReport check_implication(const Model& m, const LawImplication& imp, const Strategy& s);
CheckReport check_entry(const Model& m, const SuiteEntry& e, const Strategy& s);
std::vector<CheckReport> check_suite(const Model& m, const Suite& suite, const Strategy& s);

/// Sample values: a fixed boundary set tried first, then the random distribution.
std::vector<Value> boundary_values(const Model& m);
Value sample_value(const Model& m, std::mt19937_64& rng);

/// md, md_bot, identities, conditionals, laws, implications, c0 (with instances n = 0..c0_max).
std::vector<Suite> builtin_suites(unsigned c0_max = 20);
/// Known names plus `c0:<nmax>`; throws UsageError listing the known suites.
Suite find_suite(std::string_view name);
Suite c0_suite(unsigned nmax);

/// Named single laws used across suites (NVL, AVL, CIL, ICL, CL).
Law named_law(std::string_view name);

}  // namespace meadow
