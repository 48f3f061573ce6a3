#pragma once

// Validity of t = r in all common cancellation meadows of characteristic zero.
// Both sides are brought to fraction normal form (n_t, d_t, s_t), (n_r, d_r, s_r);
// the equation holds iff
//   p2: s_t = s_r                           (same variables),
//   p1: radical(d_t) = radical(d_r)         (same zeros of the denominators),
//   p3: n_t * d_r = n_r * d_t               (cross-multiplication identity).
// Terms that normalize to bottom are equal exactly to each other.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "meadow/normal.hpp"
#include "meadow/poly.hpp"
#include "meadow/term.hpp"

namespace meadow {

enum class Condition { BottomMismatch, P1, P2, P3 };

std::string to_string(Condition c);

struct Verdict {
  bool equal = false;
  std::optional<Condition> failed;
  /// Assignment into Q_bot on which the two sides evaluate differently.
  std::optional<Assignment> counterexample;
  /// P1: the two radicals; P3: the two cross products.
  std::optional<std::pair<MultiPoly, MultiPoly>> polynomials;
  std::string note;
};

inline constexpr std::size_t kDefaultSearchBudget = 1000;

/// Pass budget 0 to skip the counterexample search.
Verdict equal_ccm0(const Term& t, const Term& r, std::size_t budget = kDefaultSearchBudget);

/// Best effort: bottom for a variable only one side depends on, then a grid of
/// rationals with numerator and denominator in [-12, 12], at most `budget`
/// points. When the denominators' radicals differ, only a point where exactly
/// one side is bottom counts. Every returned assignment has been checked by
/// direct evaluation.
std::optional<Assignment> counterexample_search(const Term& t, const Term& r, std::size_t budget);

}  // namespace meadow
