#include "meadow/decide.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace meadow {

namespace {

constexpr int kGridBound = 12;

/// Distinct rationals a/b with |a|, b <= 12, simplest first.
const std::vector<mpq_class>& grid_values() {
  static const std::vector<mpq_class> values = [] {
    std::vector<std::pair<int, mpq_class>> tagged;
    for (int b = 1; b <= kGridBound; ++b) {
      for (int a = -kGridBound; a <= kGridBound; ++a) {
        if (std::gcd(a, b) != 1 && !(a == 0 && b == 1)) continue;
        tagged.emplace_back(std::max(std::abs(a), b), mpq_class(a, b));
      }
    }
    std::stable_sort(tagged.begin(), tagged.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      if (abs(x.second) != abs(y.second)) return abs(x.second) < abs(y.second);
      return x.second > y.second;
    });
    std::vector<mpq_class> out;
    for (auto& [h, q] : tagged) out.push_back(q);
    return out;
  }();
  return values;
}

/// Calls visit(point) on tuples of grid indices in shells of growing maximum
/// index until it returns true or `budget` points were produced.
template <class Visit>
bool for_each_grid_point(std::size_t arity, std::size_t budget, Visit visit) {
  const auto& values = grid_values();
  std::size_t produced = 0;
  if (arity == 0) return budget > 0 && visit(std::vector<mpq_class>{});
  std::vector<std::size_t> idx(arity);
  std::vector<mpq_class> point(arity);
  for (std::size_t shell = 0; shell < values.size(); ++shell) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      if (std::find(idx.begin(), idx.end(), shell) != idx.end()) {
        if (produced++ >= budget) return false;
        for (std::size_t i = 0; i < arity; ++i) point[i] = values[idx[i]];
        if (visit(point)) return true;
      }
      std::size_t k = 0;
      while (k < arity && idx[k] == shell) idx[k++] = 0;
      if (k == arity) break;
      ++idx[k];
    }
  }
  return false;
}

/// With `zeros_only`, only points where exactly one side is bottom count:
/// those witness a zero of one denominator that the other lacks.
bool differ(const Term& t, const Term& r, const Assignment& a, bool zeros_only) {
  const Model q = Model::qbot();
  Value vt = eval(t, a, q);
  Value vr = eval(r, a, q);
  if (zeros_only) return q.is_bottom(vt) != q.is_bottom(vr);
  return !(vt == vr);
}

std::vector<std::string> sorted_union(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::optional<Assignment> search_grid(const Term& t, const Term& r, const std::vector<std::string>& names,
                                      std::size_t budget, const std::optional<std::string>& pinned_bottom,
                                      bool zeros_only = false) {
  std::vector<std::string> free;
  for (const auto& n : names) {
    if (!pinned_bottom || n != *pinned_bottom) free.push_back(n);
  }
  std::optional<Assignment> found;
  for_each_grid_point(free.size(), budget, [&](const std::vector<mpq_class>& point) {
    Assignment a;
    for (std::size_t i = 0; i < free.size(); ++i) a.emplace(free[i], QBot(point[i]));
    if (pinned_bottom) a.emplace(*pinned_bottom, QBot::bottom());
    if (differ(t, r, a, zeros_only)) {
      found = std::move(a);
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace

std::string to_string(Condition c) {
  switch (c) {
    case Condition::BottomMismatch: return "bottom-mismatch";
    case Condition::P1: return "p1";
    case Condition::P2: return "p2";
    case Condition::P3: return "p3";
  }
  return "?";
}

std::optional<Assignment> counterexample_search(const Term& t, const Term& r, std::size_t budget) {
  const auto names = sorted_union(vars(t), vars(r));
  const FractionNormalForm ft = to_fraction(t);
  const FractionNormalForm fr = to_fraction(r);
  if (!ft.is_bottom() && !fr.is_bottom() && ft.support() != fr.support()) {
    // A variable on one side only: bottom there, any point keeping the other side proper.
    std::vector<std::string> only;
    std::set_symmetric_difference(ft.support().begin(), ft.support().end(), fr.support().begin(),
                                  fr.support().end(), std::back_inserter(only));
    for (const auto& v : only) {
      if (auto a = search_grid(t, r, names, std::max<std::size_t>(budget, 1), v)) return a;
    }
  }
  const bool p1 = !ft.is_bottom() && !fr.is_bottom() && radical(ft.denominator()) != radical(fr.denominator());
  return search_grid(t, r, names, budget, std::nullopt, p1);
}

Verdict equal_ccm0(const Term& t, const Term& r, std::size_t budget) {
  const FractionNormalForm ft = to_fraction(t);
  const FractionNormalForm fr = to_fraction(r);
  Verdict v;
  if (ft.is_bottom() && fr.is_bottom()) {
    v.equal = true;
    return v;
  }
  if (ft.is_bottom() != fr.is_bottom()) {
    v.failed = Condition::BottomMismatch;
  } else if (ft.support() != fr.support()) {
    v.failed = Condition::P2;
  } else {
    MultiPoly rad_t = radical(ft.denominator());
    MultiPoly rad_r = radical(fr.denominator());
    if (rad_t != rad_r) {
      v.failed = Condition::P1;
      v.polynomials = {std::move(rad_t), std::move(rad_r)};
    } else {
      MultiPoly lhs = ft.numerator() * fr.denominator();
      MultiPoly rhs = fr.numerator() * ft.denominator();
      if (lhs != rhs) {
        v.failed = Condition::P3;
        v.polynomials = {std::move(lhs), std::move(rhs)};
      }
    }
  }
  if (!v.failed) {
    v.equal = true;
    return v;
  }
  if (budget > 0) {
    v.counterexample = counterexample_search(t, r, budget);
    if (!v.counterexample) {
      v.note = *v.failed == Condition::P1
                   ? "no rational point within the search budget separates the sides; the denominators' zero sets "
                     "differ only at points outside the grid (possibly irrational or complex)"
                   : "no rational point within the search budget separates the sides";
    }
  }
  return v;
}

}  // namespace meadow
