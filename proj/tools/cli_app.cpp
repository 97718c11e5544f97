#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "godel/elimination.hpp"
#include "godel/first_order.hpp"
#include "godel/json_io.hpp"
#include "godel/parser.hpp"
#include "godel/printer.hpp"

namespace godel::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

Mode parse_mode(const std::string& text) {
  if (text == "standard") return Mode::standard;
  if (text == "restricted") return Mode::restricted;
  throw semantic_error("--mode must be 'standard' or 'restricted'");
}

std::string countermodel_text(const Interpretation& interp) {
  std::string out;
  for (const auto& [name, level] : interp.levels) {
    if (!out.empty()) out += ", ";
    out += name + "=" + std::to_string(level);
  }
  return out.empty() ? "(empty assignment)" : out;
}

std::string verdict_text(const Verdict& v, const char* yes, const char* no) {
  std::string out = std::string(v.valid ? yes : no) + " (k=" +
                    std::to_string(v.scale) + ")";
  if (!v.valid && v.countermodel)
    out += ": countermodel " + countermodel_text(*v.countermodel);
  return out;
}

std::string model_text(const FiniteModel& m) {
  std::string out = "domain=" + std::to_string(m.domain_size) +
                    " levels=" + std::to_string(m.scale.levels);
  for (const auto& [name, table] : m.tables) {
    for (const auto& [tuple, level] : table) {
      out += " " + name + "(";
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(tuple[i]);
      }
      out += ")=" + std::to_string(level);
    }
  }
  return out;
}

/// Inline formula argument or --file, one formula per line.
std::vector<Formula> gather_inputs(const std::string& inline_text,
                                   const std::string& file, Syntax syntax) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw semantic_error("cannot open file '" + file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::vector<Formula> out;
    for (auto& [line, formula] : parse_lines(buffer.str(), syntax))
      out.push_back(std::move(formula));
    return out;
  }
  if (inline_text.empty())
    throw semantic_error("provide a formula or --file");
  return {parse(inline_text, syntax)};
}

void check_levels_override(const Formula& f, int levels) {
  int needed = static_cast<int>(free_atoms(f).size()) + 2;
  if (contains_delta(f) && levels < needed)
    throw semantic_error("--levels " + std::to_string(levels) +
                         " is below the sound scale " + std::to_string(needed) +
                         " for a formula with Delta");
}

struct Options {
  std::string formula_text;
  std::string other_text;
  std::string file;
  std::string mode_text = "standard";
  std::string assign_text;
  std::string vars_text;
  bool json = false;
  bool restricted = false;
  bool optimize = false;
  int levels = 0;
  int max_domain = 2;
  int max_levels = 3;
  long long budget = 10'000'000;
};

std::map<std::string, int> parse_assignment(const std::string& text) {
  std::map<std::string, int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw semantic_error("--assign expects name=level pairs");
    std::string name = item.substr(0, eq);
    out[name] = std::stoi(item.substr(eq + 1));
  }
  return out;
}

std::vector<std::string> parse_vars(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_parse(const Options& opt, std::ostream& out, Syntax syntax) {
  for (const auto& f : gather_inputs(opt.formula_text, opt.file, syntax)) {
    if (opt.json) {
      json j{{"formula", render(f)},
             {"raw", render_raw(f)},
             {"atoms", free_atoms(f)},
             {"contains_delta", contains_delta(f)},
             {"propositional", is_propositional(f)}};
      out << j.dump() << "\n";
    } else {
      out << render(f) << "\n";
    }
  }
  return kOk;
}

int cmd_eval(const Options& opt, std::ostream& out) {
  Formula f = parse(opt.formula_text);
  auto assignment = parse_assignment(opt.assign_text);
  int k = opt.levels > 0
              ? opt.levels
              : static_cast<int>(free_atoms(f).size()) + 2;
  Mode mode = parse_mode(opt.mode_text);
  Interpretation interp{assignment, TruthScale(k), mode == Mode::restricted};
  for (const auto& [name, level] : assignment) {
    if (level < 0 || level >= k)
      throw semantic_error("level for '" + name + "' is outside the scale");
    if (interp.restricted && level == k - 1)
      throw semantic_error("restricted interpretations keep atoms below top");
  }
  int level = eval(f, interp);
  if (opt.json) {
    out << json{{"formula", render(f)}, {"level", level}, {"scale", k}}.dump()
        << "\n";
  } else {
    out << level << "\n";
  }
  return kOk;
}

int cmd_valid(const Options& opt, std::ostream& out) {
  Mode mode = parse_mode(opt.mode_text);
  bool all_valid = true;
  for (const auto& f : gather_inputs(opt.formula_text, opt.file,
                                     Syntax::propositional)) {
    Verdict v;
    if (opt.levels > 0) {
      check_levels_override(f, opt.levels);
      v = is_valid_at(f, opt.levels, mode);
    } else {
      v = is_valid(f, mode);
    }
    all_valid &= v.valid;
    if (opt.json)
      out << to_json(v).dump() << "\n";
    else
      out << verdict_text(v, "valid", "invalid") << "\n";
  }
  return all_valid ? kOk : kInvalid;
}

int cmd_equiv(const Options& opt, std::ostream& out) {
  Mode mode = parse_mode(opt.mode_text);
  Formula f = parse(opt.formula_text);
  Formula g = parse(opt.other_text);
  Verdict v;
  if (opt.levels > 0) {
    check_levels_override(conj(f, g), opt.levels);
    v = are_equivalent_at(f, g, opt.levels, mode);
  } else {
    v = are_equivalent(f, g, mode);
  }
  if (opt.json)
    out << to_json(v).dump() << "\n";
  else
    out << verdict_text(v, "equivalent", "inequivalent") << "\n";
  return v.valid ? kOk : kInvalid;
}

int cmd_chains(const Options& opt, std::ostream& out) {
  auto vars = parse_vars(opt.vars_text);
  auto chains =
      opt.restricted ? enumerate_restricted_chains(vars) : enumerate_chains(vars);
  if (opt.json) {
    json arr = json::array();
    for (const auto& c : chains) arr.push_back(to_json(c));
    out << arr.dump() << "\n";
  } else {
    for (const auto& c : chains) out << chain_text(c) << "\n";
  }
  return kOk;
}

int cmd_cnf(const Options& opt, std::ostream& out) {
  Mode mode = parse_mode(opt.mode_text);
  for (const auto& f : gather_inputs(opt.formula_text, opt.file,
                                     Syntax::propositional)) {
    ChainNormalForm cnf = chain_normal_form(f, mode);
    if (opt.optimize) cnf = optimize_cnf(cnf);
    Verdict check = are_equivalent(f, cnf_formula(cnf), mode);
    if (opt.json) {
      out << cnf_report(render(f), cnf, check).dump() << "\n";
    } else {
      for (const auto& d : cnf.disjuncts) out << chain_text(d.chain) << "\n";
      out << "equivalent_check: " << verdict_text(check, "valid", "invalid")
          << "\n";
    }
  }
  return kOk;
}

int cmd_eliminate(const Options& opt, std::ostream& out) {
  for (const auto& f : gather_inputs(opt.formula_text, opt.file,
                                     Syntax::propositional)) {
    ChainNormalForm cnf = chain_normal_form(f, Mode::restricted);
    Formula result = cnf_formula(cnf);
    Verdict designated = are_designated_equivalent(f, result, Mode::restricted);
    Verdict value = are_equivalent(f, result, Mode::restricted);
    if (opt.json) {
      json j = cnf_report(render(f), cnf, value);
      j["result"] = render(result);
      j["delta_free"] = !contains_delta(result);
      j["designated_check"] = to_json(designated);
      out << j.dump() << "\n";
    } else {
      out << render(result) << "\n";
      out << "delta_free: " << (contains_delta(result) ? "no" : "yes") << "\n";
      out << "designated_equivalent: "
          << verdict_text(designated, "valid", "invalid") << "\n";
      out << "value_equivalent: " << verdict_text(value, "valid", "invalid")
          << "\n";
    }
  }
  return kOk;
}

int cmd_guard(const Options& opt, std::ostream& out, bool companion) {
  for (const auto& f : gather_inputs(opt.formula_text, opt.file,
                                     Syntax::propositional)) {
    Formula result = companion ? validity_companion(f) : guard_formula(f);
    if (opt.json)
      out << json{{"input", render(f)}, {"result", render(result)}}.dump()
          << "\n";
    else
      out << render(result) << "\n";
  }
  return kOk;
}

int cmd_struc(const Options& opt, std::ostream& out) {
  Formula f = parse(opt.formula_text, Syntax::first_order);
  StructuralForm s = structural_form(f);
  if (opt.json) {
    json defs = json::object();
    for (const auto& [name, g] : s.definitions) defs[name] = render(g);
    out << json{{"input", render(f)},
                {"formula", render(s.formula)},
                {"definitions", defs},
                {"root", s.root}}
               .dump()
        << "\n";
  } else {
    for (const auto& [name, g] : s.definitions)
      out << name << " := " << render(g) << "\n";
    out << "root: " << s.root << "\n";
    out << "formula: " << render(s.formula) << "\n";
  }
  return kOk;
}

int cmd_translate(const Options& opt, std::ostream& out) {
  Formula f = parse(opt.formula_text, Syntax::first_order);
  Formula result = translate_delta_free(f);
  if (opt.json)
    out << json{{"input", render(f)},
                {"result", render(result)},
                {"delta_free", !contains_delta(result)}}
               .dump()
        << "\n";
  else
    out << render(result) << "\n";
  return kOk;
}

int cmd_fo_check(const Options& opt, std::ostream& out) {
  Formula f = parse(opt.formula_text, Syntax::first_order);
  Mode mode = parse_mode(opt.mode_text);
  SearchBounds bounds{opt.max_domain, opt.max_levels, opt.budget};
  BoundedVerdict v = is_valid_fo_bounded(f, bounds, mode);
  if (opt.json) {
    out << to_json(v).dump() << "\n";
  } else if (v.countermodel_found) {
    out << "countermodel found: " << model_text(*v.countermodel) << "\n";
  } else {
    out << "no countermodel within bounds (max_domain="
        << bounds.max_domain << ", max_levels=" << bounds.max_levels << ")\n";
  }
  return v.countermodel_found ? kInvalid : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"finite-valued Goedel logics with the absoluteness operator"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_file = true) {
    cmd->add_flag("--json", opt.json, "machine-readable output");
    if (with_file)
      cmd->add_option("--file", opt.file, "read formulas from a file");
  };

  auto* parse_cmd = app.add_subcommand("parse", "parse and reprint a formula");
  parse_cmd->add_option("formula", opt.formula_text);
  bool parse_fo = false;
  parse_cmd->add_flag("--fo", parse_fo, "first-order syntax");
  add_common(parse_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate under an assignment");
  eval_cmd->add_option("formula", opt.formula_text);
  eval_cmd->add_option("--assign", opt.assign_text, "e.g. a=1,b=0")->required();
  eval_cmd->add_option("--levels", opt.levels, "scale size k");
  eval_cmd->add_option("--mode", opt.mode_text);
  add_common(eval_cmd, false);

  auto* valid_cmd = app.add_subcommand("valid", "decide validity");
  valid_cmd->add_option("formula", opt.formula_text);
  valid_cmd->add_option("--mode", opt.mode_text);
  valid_cmd->add_option("--levels", opt.levels, "override the n+2 scale");
  add_common(valid_cmd);

  auto* equiv_cmd = app.add_subcommand("equiv", "decide equivalence");
  equiv_cmd->add_option("formula", opt.formula_text);
  equiv_cmd->add_option("other", opt.other_text);
  equiv_cmd->add_option("--mode", opt.mode_text);
  equiv_cmd->add_option("--levels", opt.levels);
  add_common(equiv_cmd, false);

  auto* chains_cmd = app.add_subcommand("chains", "enumerate chains");
  chains_cmd->add_option("--vars", opt.vars_text, "comma-separated variables");
  chains_cmd->add_flag("--restricted", opt.restricted,
                       "only chains with nothing in T's class");
  add_common(chains_cmd, false);

  auto* cnf_cmd = app.add_subcommand("cnf", "chain normal form");
  cnf_cmd->add_option("formula", opt.formula_text);
  cnf_cmd->add_option("--mode", opt.mode_text);
  cnf_cmd->add_flag("--optimize", opt.optimize,
                    "merge equivalent disjuncts (oracle-checked)");
  add_common(cnf_cmd);

  auto* elim_cmd = app.add_subcommand(
      "eliminate", "Delta-free restricted normal form with certificates");
  elim_cmd->add_option("formula", opt.formula_text);
  add_common(elim_cmd);

  auto* guard_cmd = app.add_subcommand(
      "guard", "reduce restricted validity to standard validity");
  guard_cmd->add_option("formula", opt.formula_text);
  add_common(guard_cmd);

  auto* comp_cmd = app.add_subcommand(
      "companion", "validity companion f | x1 | ... | xn");
  comp_cmd->add_option("formula", opt.formula_text);
  add_common(comp_cmd);

  auto* struc_cmd = app.add_subcommand("struc", "structural normal form");
  struc_cmd->add_option("formula", opt.formula_text);
  add_common(struc_cmd, false);

  auto* trans_cmd = app.add_subcommand(
      "translate", "Delta-free witnessed-semantics translation");
  trans_cmd->add_option("formula", opt.formula_text);
  add_common(trans_cmd, false);

  auto* fo_cmd = app.add_subcommand("fo-check", "bounded countermodel search");
  fo_cmd->add_option("formula", opt.formula_text);
  fo_cmd->add_option("--mode", opt.mode_text);
  fo_cmd->add_option("--max-domain", opt.max_domain);
  fo_cmd->add_option("--max-levels", opt.max_levels);
  fo_cmd->add_option("--budget", opt.budget);
  add_common(fo_cmd, false);

  auto* self_cmd = app.add_subcommand("selftest", "run the golden corpus");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (parse_cmd->parsed())
      return cmd_parse(opt, out,
                       parse_fo ? Syntax::first_order : Syntax::propositional);
    if (eval_cmd->parsed()) return cmd_eval(opt, out);
    if (valid_cmd->parsed()) return cmd_valid(opt, out);
    if (equiv_cmd->parsed()) return cmd_equiv(opt, out);
    if (chains_cmd->parsed()) return cmd_chains(opt, out);
    if (cnf_cmd->parsed()) return cmd_cnf(opt, out);
    if (elim_cmd->parsed()) return cmd_eliminate(opt, out);
    if (guard_cmd->parsed()) return cmd_guard(opt, out, false);
    if (comp_cmd->parsed()) return cmd_guard(opt, out, true);
    if (struc_cmd->parsed()) return cmd_struc(opt, out);
    if (trans_cmd->parsed()) return cmd_translate(opt, out);
    if (fo_cmd->parsed()) return cmd_fo_check(opt, out);
    if (self_cmd->parsed()) return run_selftest(out);
  } catch (const parse_error& e) {
    err << "parse error at column " << e.column() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const budget_exceeded& e) {
    err << "budget exceeded: " << e.what() << " (required " << e.required()
        << ", budget " << e.budget() << ")\n";
    return kBudget;
  } catch (const semantic_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "usage error: no subcommand\n";
  return kUsage;
}

}  // namespace godel::cli
