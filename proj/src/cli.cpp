#include "meadow/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>

#include "meadow/decide.hpp"
#include "meadow/error.hpp"
#include "meadow/fracpair.hpp"
#include "meadow/lawcheck.hpp"
#include "meadow/model.hpp"
#include "meadow/normal.hpp"
#include "meadow/term.hpp"

namespace meadow::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Records };

struct Options {
  std::string model = "qbot";
  std::string strategy = "random:1000";
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::Text;
  std::vector<std::string> bindings;
  std::size_t budget = kDefaultSearchBudget;
  std::vector<std::string> positional;
};

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::Text}, {"records", Format::Records}}));
}

Assignment parse_bindings(const std::vector<std::string>& bindings, const Model& m) {
  Assignment a;
  for (const auto& b : bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos) throw UsageError("binding '" + b + "' is not of the form var=value");
    std::string name = b.substr(0, eq);
    if (!is_valid_variable_name(name)) throw UsageError("binding '" + b + "': bad variable name");
    a.insert_or_assign(name, m.parse_value(std::string_view(b).substr(eq + 1)));
  }
  return a;
}

json assignment_json(const Assignment& a, const Model& m) {
  json j = json::object();
  for (const auto& [name, v] : a) j[name] = m.render(v);
  return j;
}

std::string assignment_text(const Assignment& a, const Model& m) {
  std::string out;
  for (const auto& [name, v] : a) {
    if (!out.empty()) out += ", ";
    out += name + "=" + m.render(v);
  }
  return out;
}

json support_json(const FractionNormalForm& f) {
  json s = json::array();
  for (const auto& v : f.support()) s.push_back(v);
  return s;
}

int cmd_eval(const Options& o, std::ostream& out) {
  Model m = Model::from_name(o.model);
  Term t = parse(o.positional.at(0));
  Assignment a = parse_bindings(o.bindings, m);
  Value v = eval(t, a, m);
  if (o.format == Format::Records) {
    out << json{{"expr", render(t)}, {"model", m.name()}, {"bindings", assignment_json(a, m)},
                {"value", m.render(v)}, {"bottom", m.is_bottom(v)}}.dump()
        << '\n';
  } else {
    out << m.render(v) << '\n';
  }
  return kExitOk;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  FractionNormalForm f = to_fraction(parse(o.positional.at(0)));
  if (o.format == Format::Records) {
    json j;
    if (f.is_bottom()) {
      j["bottom"] = true;
    } else {
      j["num"] = f.numerator().to_string();
      j["den"] = f.denominator().to_string();
      j["support"] = support_json(f);
      if (f.guard() != 1) j["guard"] = f.guard().get_str();
    }
    out << j.dump() << '\n';
  } else {
    out << f.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_decide(const Options& o, std::ostream& out) {
  Term t = parse(o.positional.at(0));
  Term r = parse(o.positional.at(1));
  Verdict v = equal_ccm0(t, r, o.budget);
  const Model q = Model::qbot();
  if (o.format == Format::Records) {
    json j{{"equal", v.equal}};
    j["failed"] = v.failed ? json(to_string(*v.failed)) : json(nullptr);
    j["counterexample"] = v.counterexample ? assignment_json(*v.counterexample, q) : json(nullptr);
    if (v.polynomials) j["polynomials"] = {v.polynomials->first.to_string(), v.polynomials->second.to_string()};
    if (!v.note.empty()) j["note"] = v.note;
    out << j.dump() << '\n';
  } else if (v.equal) {
    out << "EQUAL\n";
  } else {
    out << "NOT-EQUAL (" << to_string(*v.failed) << ")\n";
    if (v.counterexample) out << "counterexample: " << assignment_text(*v.counterexample, q) << '\n';
    if (!v.note.empty()) out << "note: " << v.note << '\n';
  }
  return v.equal ? kExitOk : kExitFail;
}

int cmd_check(const Options& o, std::ostream& out) {
  Suite suite = find_suite(o.positional.at(0));
  Model m = Model::from_name(o.model);
  Strategy s = Strategy::parse(o.strategy, o.seed);
  auto reports = check_suite(m, suite, s);
  const bool random = s.kind == Strategy::Kind::Random;
  std::size_t failed = 0;
  std::size_t width = 0;
  for (const auto& r : reports) width = std::max(width, r.law.size());
  for (const auto& r : reports) {
    if (!r.passed) ++failed;
    if (o.format == Format::Records) {
      json j{{"law", r.law}, {"model", r.model}, {"strategy", r.strategy.to_string()}};
      if (random) j["seed"] = r.strategy.seed;
      j["outcome"] = r.passed ? "pass" : "fail";
      j["cases"] = r.cases;
      j["premise_hits"] = r.premise_hits;
      j["witness"] = r.witness ? assignment_json(*r.witness, m) : json(nullptr);
      if (!r.note.empty()) j["note"] = r.note;
      out << j.dump() << '\n';
      continue;
    }
    std::string line = r.law + std::string(width - r.law.size(), ' ') + "  " + (r.passed ? "pass" : "FAIL") + "  " +
                       std::to_string(r.cases) + (r.cases == 1 ? " case" : " cases");
    if (r.witness && !r.witness->empty()) line += "  witness " + assignment_text(*r.witness, m);
    if (!r.note.empty()) line += "  (" + r.note + ")";
    out << line << '\n';
  }
  if (o.format == Format::Text) {
    out << suite.name << " on " << m.name() << ", " << s.to_string();
    if (random) out << " seed " << s.seed;
    out << ": " << reports.size() - failed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitFail;
}

int cmd_fracpair(const Options& o, std::ostream& out) {
  const std::string& op = o.positional.at(0);
  std::vector<Fracpair> xs;
  for (std::size_t i = 1; i < o.positional.size(); ++i) xs.push_back(Fracpair::parse(o.positional[i]));
  auto need = [&](std::size_t n) {
    if (xs.size() != n) throw UsageError("fracpair " + op + " takes " + std::to_string(n) + " operand(s)");
  };
  Fracpair result;
  if (op == "add") {
    need(2);
    result = xs[0] + xs[1];
  } else if (op == "mul") {
    need(2);
    result = xs[0] * xs[1];
  } else if (op == "sub") {
    need(2);
    result = xs[0] + -xs[1];
  } else if (op == "div") {
    need(2);
    result = xs[0] * inverse(xs[1]);
  } else if (op == "neg") {
    need(1);
    result = -xs[0];
  } else if (op == "inv") {
    need(1);
    result = inverse(xs[0]);
  } else if (op == "canon") {
    need(1);
    result = xs[0];
  } else if (op == "qbot") {
    need(1);
    out << to_qbot(xs[0]).to_string() << '\n';
    return kExitOk;
  } else {
    throw UsageError("unknown fracpair operation '" + op + "'; known: add, sub, mul, div, neg, inv, canon, qbot");
  }
  if (o.format == Format::Records) {
    json operands = json::array();
    for (const auto& x : xs) operands.push_back(x.to_string());
    out << json{{"op", op}, {"operands", operands}, {"result", result.to_string()},
                {"qbot", to_qbot(result).to_string()}}.dump()
        << '\n';
  } else {
    out << result.to_string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Common meadows: evaluation, normal forms, equational decisions and law checks.", "meadow"};
  app.require_subcommand(1);
  Options o;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term in a model");
  eval_cmd->add_option("expr", o.positional, "Term")->required()->expected(1);
  eval_cmd->add_option("--model", o.model, "qbot, qzero, fp:<prime> or fracpair")->capture_default_str();
  eval_cmd->add_option("-b,--bind", o.bindings, "Binding var=value (repeatable)");
  add_format(eval_cmd, o);

  auto* norm_cmd = app.add_subcommand("normalize", "Fraction normal form of a term");
  norm_cmd->add_option("expr", o.positional, "Term")->required()->expected(1);
  add_format(norm_cmd, o);

  auto* decide_cmd = app.add_subcommand("decide", "Decide t = r in common cancellation meadows of characteristic zero");
  decide_cmd->add_option("exprs", o.positional, "Left and right terms")->required()->expected(2);
  decide_cmd->add_option("--budget", o.budget, "Counterexample search budget")->capture_default_str();
  add_format(decide_cmd, o);

  auto* check_cmd = app.add_subcommand("check", "Check a law suite on a model");
  check_cmd->add_option("suite", o.positional, "md, md_bot, identities, conditionals, laws, implications, c0 or c0:<n>")
      ->required()
      ->expected(1);
  check_cmd->add_option("--model", o.model, "qbot, qzero, fp:<prime> or fracpair")->capture_default_str();
  check_cmd->add_option("--strategy", o.strategy, "exhaustive or random:<n>")->capture_default_str();
  check_cmd->add_option("--seed", o.seed, "Seed for random sampling")->capture_default_str();
  add_format(check_cmd, o);

  auto* frac_cmd = app.add_subcommand("fracpair", "Fracpair arithmetic over the integers");
  frac_cmd->add_option("op_operands", o.positional, "Operation and operands")->required()->expected(2, 3);
  add_format(frac_cmd, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(o, out);
    if (norm_cmd->parsed()) return cmd_normalize(o, out);
    if (decide_cmd->parsed()) return cmd_decide(o, out);
    if (check_cmd->parsed()) return cmd_check(o, out);
    return cmd_fracpair(o, out);
  } catch (const ParseError& e) {
    err << "meadow: parse error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "meadow: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "meadow: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace meadow::cli
