#include <charconv>

#include "meadow/error.hpp"
#include "meadow/lawcheck.hpp"

namespace meadow {

namespace {

Law eq(std::string name, std::string_view lhs, std::string_view rhs) {
  return make_equation_law(std::move(name), lhs, rhs);
}

Suite md_suite() {
  return {"md",
          "involutive meadow axioms",
          {eq("md.1", "(x + y) + z", "x + (y + z)"), eq("md.2", "x + y", "y + x"), eq("md.3", "x + 0", "x"),
           eq("md.4", "x + (-x)", "0"), eq("md.5", "(x * y) * z", "x * (y * z)"), eq("md.6", "x * y", "y * x"),
           eq("md.7", "1 * x", "x"), eq("md.8", "x * (y + z)", "x * y + x * z"), eq("md.9", "(x^-1)^-1", "x"),
           eq("md.10", "x * (x * x^-1)", "x")}};
}

Suite md_bot_suite() {
  return {"md_bot",
          "common meadow axioms",
          {eq("md_bot.1", "(x + y) + z", "x + (y + z)"), eq("md_bot.2", "x + y", "y + x"), eq("md_bot.3", "x + 0", "x"),
           eq("md_bot.4", "x + (-x)", "0 * x"), eq("md_bot.5", "(x * y) * z", "x * (y * z)"), eq("md_bot.6", "x * y", "y * x"),
           eq("md_bot.7", "1 * x", "x"), eq("md_bot.8", "x * (y + z)", "x * y + x * z"), eq("md_bot.9", "-(-x)", "x"),
           eq("md_bot.10", "0 * (x * x)", "0 * x"), eq("md_bot.11", "(x^-1)^-1", "x + 0 * x^-1"),
           eq("md_bot.12", "x * x^-1", "1 + 0 * x^-1"), eq("md_bot.13", "(x * y)^-1", "x^-1 * y^-1"), eq("md_bot.14", "1^-1", "1"),
           eq("md_bot.15", "0^-1", "bot"), eq("md_bot.16", "x + bot", "bot"), eq("md_bot.17", "x * bot", "bot")}};
}

Suite identities_suite() {
  return {"identities",
          "equational consequences of the common meadow axioms",
          {eq("e1", "0 * 0", "0"), eq("e2", "-0", "0"), eq("e3", "0 * x", "0 * (-x)"),
           eq("e4", "0 * (x * y)", "0 * (x + y)"), eq("e5", "-(x * y)", "x * (-y)"), eq("e6", "(-1) * x", "-x"),
           eq("e7", "(-x)^-1", "-(x^-1)"), eq("e8", "(x * x^-1) * x^-1", "x^-1"), eq("e9", "-bot", "bot"),
           eq("e10", "bot^-1", "bot")}};
}

Suite conditionals_suite() {
  return {"conditionals",
          "conditional consequences of the common meadow axioms",
          {make_law("ce1", {"x * y = 1"}, "0 * y = 0"), make_law("ce2", {"x * y = 1"}, "x^-1 = y"),
           make_law("ce3", {"0 * x = 0 * y"}, "0 * (x * y) = 0 * x"), make_law("ce4", {"0 * x * y = 0"}, "0 * x = 0"),
           make_law("ce5", {"0 * (x + y) = 0"}, "0 * x = 0"), make_law("ce6", {"0 * x^-1 = 0"}, "0 * x = 0"),
           make_law("ce7", {"0 * x = bot"}, "x = bot")}};
}

Suite laws_suite() {
  std::vector<SuiteEntry> entries;
  for (auto name : {"NVL", "AVL", "CIL", "ICL", "CL"}) entries.emplace_back(named_law(name));
  return {"laws", "named conditional laws", std::move(entries)};
}

Suite implications_suite() {
  const Law nvl = named_law("NVL");
  const Law avl = named_law("AVL");
  const Law cil = named_law("CIL");
  return {"implications",
          "implications between the named laws",
          {LawImplication{"NVL => bottom-product", {nvl}, make_law("bottom-product", {"x * y = bot", "x != bot"}, "y = bot")},
           LawImplication{"NVL => defined-inverse", {nvl}, make_law("defined-inverse", {"x^-1 != bot"}, "0 * x = 0")},
           LawImplication{"NVL, AVL => CIL", {nvl, avl}, cil}, LawImplication{"CIL => NVL", {cil}, nvl},
           LawImplication{"CIL => AVL", {cil}, avl}}};
}

}  // namespace

Law named_law(std::string_view name) {
  if (name == "NVL") return make_law("NVL", {"x != bot"}, "0 * x = 0");
  if (name == "AVL") return make_law("AVL", {"x^-1 = bot"}, "0 * x = x");
  if (name == "CIL") return make_law("CIL", {"x != 0", "x != bot"}, "x * x^-1 = 1");
  if (name == "ICL") return make_law("ICL", {"x != 0", "x != bot", "x^-1 * y = x^-1 * z"}, "y = z");
  if (name == "CL") return make_law("CL", {"x != 0", "x * y = x * z"}, "y = z");
  throw UsageError("unknown law '" + std::string(name) + "'; known: NVL, AVL, CIL, ICL, CL");
}

Suite c0_suite(unsigned nmax) {
  Suite s{"c0", "instances n*n^-1 = 1 for n = 1.." + std::to_string(nmax + 1), {}};
  for (unsigned n = 0; n <= nmax; ++n) {
    Term k = Term::numeral(n + 1);
    s.entries.emplace_back(Law{"C0(" + std::to_string(n) + ")", {}, {Term::mul(k, Term::inv(k)), Term::one()}});
  }
  return s;
}

std::vector<Suite> builtin_suites(unsigned c0_max) {
  return {md_suite(),   md_bot_suite(),       identities_suite(), conditionals_suite(),
          laws_suite(), implications_suite(), c0_suite(c0_max)};
}

Suite find_suite(std::string_view name) {
  if (name.starts_with("c0:")) {
    auto digits = name.substr(3);
    unsigned n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() || n >= kMaxNumeralLiteral) {
      throw UsageError("bad c0 bound in '" + std::string(name) + "'");
    }
    return c0_suite(n);
  }
  std::string known;
  for (auto& s : builtin_suites()) {
    if (s.name == name) return s;
    known += (known.empty() ? "" : ", ") + s.name;
  }
  throw UsageError("unknown suite '" + std::string(name) + "'; known: " + known + ", c0:<n>");
}

}  // namespace meadow
