// Acceptance suite: one line per criterion, exit 0 iff every criterion holds.
//
// Two checks below assert value-level equivalence between a Delta formula
// and its Delta-free restricted normal form. That equivalence is provably
// unattainable in general (see the notes printed on failure): the
// elimination preserves which interpretations designate the formula, not
// its value at every level. Those checks are kept as stated and report
// honestly; the attainable guarantees are verified alongside.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include "godel/elimination.hpp"
#include "godel/first_order.hpp"
#include "godel/json_io.hpp"
#include "godel/parser.hpp"
#include "godel/printer.hpp"
#include "support/formula_gen.hpp"
#include "support/oracles.hpp"

using namespace godel;

namespace {

Formula P(const std::string& text) { return parse(text); }
Formula PF(const std::string& text) { return parse(text, Syntax::first_order); }

struct Check {
  std::string name;
  std::function<bool(std::ostream&)> run;
  double seconds = 0.0;
  bool passed = false;
};

bool a01_worked_example_elimination(std::ostream& log) {
  auto start = std::chrono::steady_clock::now();
  Formula input = P("a | D(a | ~a)");
  Formula result = eliminate_delta(input);
  bool ok = true;

  bool delta_free = !contains_delta(result);
  Verdict to_input = are_equivalent(input, result, Mode::restricted);
  Verdict to_neg = are_equivalent(result, P("~a"), Mode::restricted);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();

  ok &= delta_free;
  ok &= to_neg.valid;
  ok &= secs < 1.0;
  log << "      result: " << render(result) << "\n";
  log << "      delta-free: " << (delta_free ? "yes" : "no")
      << ", equivalent to ~a: " << (to_neg.valid ? "yes" : "no")
      << ", runtime " << std::fixed << std::setprecision(3) << secs << "s\n";

  if (!to_input.valid) {
    ok = false;
    log << "      value-equivalence to the input fails as it must: at a="
        << to_input.countermodel->levels.at("a") << " the input evaluates to "
        << eval(input, *to_input.countermodel) << " but every Delta-free "
        << "formula equal to ~a evaluates to "
        << eval(result, *to_input.countermodel) << "\n";
    log << "      the guarantee that does hold: designated-equivalence "
        << (are_designated_equivalent(input, result, Mode::restricted).valid
                ? "valid"
                : "NOT valid")
        << ", result -> input "
        << (is_valid(imp(result, input), Mode::restricted).valid ? "valid"
                                                                 : "NOT valid")
        << "\n";
  }
  return ok;
}

bool a02_second_worked_example(std::ostream& log) {
  Formula input = P("D(A | (A -> F))");
  ChainNormalForm cnf = chain_normal_form(input, Mode::restricted);
  bool ok = cnf.disjuncts.size() == 1 &&
            cnf.disjuncts[0].chain == make_chain({{"A"}}, true, false);
  Formula result = cnf_formula(cnf);
  ok &= are_equivalent(result, P("~A"), Mode::restricted).valid;
  ok &= are_equivalent(input, result, Mode::restricted).valid;
  if (ok)
    log << "      single restricted chain " << chain_text(cnf.disjuncts[0].chain)
        << ", equivalent to ~A\n";
  return ok;
}

bool a03_chain_counts(std::ostream& log) {
  bool ok = enumerate_chains({"A"}).size() == 3;
  ok &= enumerate_chains({"A", "B"}).size() == 11;

  auto cnf = chain_normal_form(P("(A -> B) -> B"), Mode::standard);
  const std::vector<Chain> expected = {
      make_chain({{"A", "B"}}, false, true),
      make_chain({{"A"}, {"B"}}, true, true),
      make_chain({{"A"}, {"B"}}, false, true),
      make_chain({{"B"}, {"A"}}, true, false),
      make_chain({{"B"}, {"A"}}, false, false),
      make_chain({{"B"}, {"A"}}, true, true),
      make_chain({{"B"}, {"A"}}, false, true),
  };
  ok &= cnf.disjuncts.size() == 7;
  for (const auto& chain : expected) {
    ok &= std::count_if(cnf.disjuncts.begin(), cnf.disjuncts.end(),
                        [&](const CnfDisjunct& d) { return d.chain == chain; }) ==
          1;
  }
  log << "      3 chains over one variable, 11 over two, optimized normal "
         "form of (A -> B) -> B has "
      << cnf.disjuncts.size() << " chains\n";
  return ok;
}

bool a04_delta_undefinability(std::ostream& log) {
  // evaluation table at three levels: rows a=0,1,2; columns
  // ~a, T, F, a|~a, ~a->a, D(a); frozen against the claimed values
  const int expect[3][6] = {
      {2, 2, 0, 2, 0, 0}, {0, 2, 0, 1, 2, 0}, {0, 2, 0, 2, 2, 2}};
  const char* cols[6] = {"~a", "T", "F", "a | ~a", "~a -> a", "D(a)"};
  bool ok = true;
  for (int a = 0; a <= 2; ++a) {
    for (int i = 0; i < 6; ++i) {
      Interpretation interp{{{"a", a}}, TruthScale(3), false};
      ok &= eval(P(cols[i]), interp) == expect[a][i];
    }
  }

  int separated_at_mid = 0;
  for (const char* text : {"T", "F", "a", "~a", "a | ~a", "~a -> a"}) {
    Verdict v = is_valid_at(lequiv(P(text), P("D(a)")), 3, Mode::standard);
    ok &= !v.valid;  // none of the six defines D
    Interpretation mid{{{"a", 1}}, TruthScale(3), false};
    if (eval(P(text), mid) != eval(P("D(a)"), mid)) ++separated_at_mid;
  }
  // the middle row separates the four candidates it can separate; F and ~a
  // agree with D(a) there and are refuted at the other levels instead
  ok &= separated_at_mid == 4;
  for (const char* classical_twin : {"a", "~a -> a"}) {
    Verdict v =
        is_valid_at(lequiv(P(classical_twin), P("D(a)")), 3, Mode::standard);
    ok &= v.countermodel && v.countermodel->levels.at("a") == 1;
  }
  log << "      all six one-variable functions differ from D(a) at three "
         "levels; the middle level separates the four it can ("
      << separated_at_mid
      << "), including both candidates that agree classically\n";
  return ok;
}

bool a05_axiom_suite(std::ostream& log) {
  const char* axioms[] = {
      "D(a) | ~D(a)",
      "D(a | b) -> (D(a) | D(b))",
      "D(a) -> a",
      "D(a) -> D(D(a))",
      "D(a -> b) -> (D(a) -> D(b))",
  };
  bool ok = true;
  for (const char* text : axioms)
    for (int k = 2; k <= 6; ++k)
      for (Mode mode : {Mode::standard, Mode::restricted})
        ok &= is_valid_at(P(text), k, mode).valid;

  // schema instances with random subformulas
  test::FormulaGen inst(140, {{"a", "b"}, 3, true});
  for (int i = 0; i < 100; ++i) {
    Formula a = inst();
    Formula b = inst();
    ok &= is_valid(disj(delta(a), neg(delta(a))), Mode::standard).valid;
    ok &= is_valid(imp(delta(disj(a, b)), disj(delta(a), delta(b))),
                   Mode::restricted)
              .valid;
    ok &= is_valid(imp(delta(imp(a, b)), imp(delta(a), delta(b))),
                   Mode::standard)
              .valid;
  }

  // rule: from a valid formula infer its Delta
  test::FormulaGen gen(3141, {{"a", "b"}, 4, true});
  int verified = 0;
  for (Mode mode : {Mode::standard, Mode::restricted}) {
    for (int i = 0; i < 100; ++i) {
      Formula f = test::random_valid_formula(gen, mode);
      ok &= is_valid(delta(f), mode).valid;
      ++verified;
    }
  }
  log << "      five axiom schemas at k=2..6 in both modes; Delta rule "
         "checked on "
      << verified << " random valid formulas\n";
  return ok;
}

bool a06_coincidence(std::ostream& log) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  int mismatches = 0;

  test::FormulaGen plain(8080, {{"a", "b", "c"}, 5, false});
  for (int i = 0; i < 1000; ++i) {
    Formula f = plain();
    if (is_valid(f, Mode::standard).valid != is_valid(f, Mode::restricted).valid)
      ++mismatches;
  }

  test::FormulaGen with_delta(9090, {{"a", "b", "c"}, 5, true});
  for (int i = 0; i < 1000; ++i) {
    Formula f = with_delta.with_delta();
    bool restricted = is_valid(f, Mode::restricted).valid;
    bool guarded = is_valid(guard_formula(f), Mode::standard).valid;
    bool companion = is_valid(validity_companion(f), Mode::standard).valid;
    if (restricted != guarded || guarded != companion) ++mismatches;
  }

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  ok &= mismatches == 0;
  ok &= secs < 60.0;
  log << "      2000 formulas, " << mismatches << " mismatches, "
      << std::fixed << std::setprecision(1) << secs << "s\n";
  return ok;
}

bool a07_chain_machinery(std::ostream& log) {
  bool ok = true;
  int violations = 0;

  // full disjunction validity, n <= 3
  for (int n = 0; n <= 3; ++n) {
    std::vector<std::string> vars;
    for (int i = 0; i < n; ++i)
      vars.push_back(std::string(1, static_cast<char>('a' + i)));
    std::optional<Formula> all, restr;
    for (const auto& c : enumerate_chains(vars))
      all = all ? disj(*all, chain_formula(c)) : chain_formula(c);
    for (const auto& c : enumerate_restricted_chains(vars))
      restr = restr ? disj(*restr, chain_formula(c)) : chain_formula(c);
    if (!is_valid(*all, Mode::standard).valid) ++violations;
    if (!is_valid(*restr, Mode::restricted).valid) ++violations;
  }

  // unique-chain coverage of every interpretation, n <= 3
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> vars;
    std::set<std::string> atoms;
    for (int i = 0; i < n; ++i) {
      vars.push_back(std::string(1, static_cast<char>('a' + i)));
      atoms.insert(vars.back());
    }
    auto chains = enumerate_chains(vars);
    int k = n + 2;
    for_each_interpretation(atoms, TruthScale(k), false,
                            [&](const Interpretation& interp) {
                              Chain c = chain_of(interp);
                              if (std::count(chains.begin(), chains.end(), c) !=
                                  1)
                                ++violations;
                              if (eval(chain_formula(c), interp) != k - 1)
                                ++violations;
                              return true;
                            });
  }

  // syntactic-evaluation soundness, 500 random formulas over three atoms:
  // wherever the chain formula is designated, formula and residue agree
  std::set<std::string> atoms{"a", "b", "c"};
  std::vector<std::string> vars{"a", "b", "c"};
  TruthScale scale(5);
  auto all_chains = enumerate_chains(vars);
  auto restricted_chains = enumerate_restricted_chains(vars);
  auto interps_std = enumerate_interps(atoms, scale, false);
  auto interps_res = enumerate_interps(atoms, scale, true);

  test::FormulaGen plain(112, {{"a", "b", "c"}, 5, false});
  for (int i = 0; i < 250; ++i) {
    Formula f = plain();
    for (const auto& c : all_chains) {
      Formula residue = syntactic_eval(c, f, DeltaRules::none);
      Formula cf = chain_formula(c);
      for (const auto& interp : interps_std) {
        if (eval(cf, interp) == scale.top() &&
            eval(f, interp) != eval(residue, interp))
          ++violations;
      }
    }
  }
  test::FormulaGen with_delta(113, {{"a", "b", "c"}, 5, true});
  for (int i = 0; i < 250; ++i) {
    Formula f = with_delta.with_delta();
    for (const auto& c : restricted_chains) {
      Formula residue = syntactic_eval(c, f, DeltaRules::restricted);
      Formula cf = chain_formula(c);
      for (const auto& interp : interps_res) {
        if (eval(cf, interp) == scale.top() &&
            eval(f, interp) != eval(residue, interp))
          ++violations;
      }
    }
  }

  ok &= violations == 0;
  log << "      full disjunctions, unique coverage, and 500-formula "
         "soundness sweep: "
      << violations << " violations\n";
  return ok;
}

bool a08_elimination_sweep(std::ostream& log) {
  bool ok = true;
  int delta_left = 0;
  int value_equiv_failures = 0;
  int designated_failures = 0;
  std::optional<std::string> first_failure;

  test::FormulaGen gen(7001, {{"a", "b", "c"}, 5, true});
  for (int i = 0; i < 1000; ++i) {
    Formula f = gen.with_delta();
    Formula result = eliminate_delta(f);
    if (contains_delta(result)) ++delta_left;
    if (!are_equivalent(f, result, Mode::restricted).valid) {
      ++value_equiv_failures;
      if (!first_failure) first_failure = render(f);
    }
    if (!are_designated_equivalent(f, result, Mode::restricted).valid)
      ++designated_failures;
  }

  ok &= delta_left == 0;
  ok &= value_equiv_failures == 0;
  log << "      1000 formulas: " << delta_left << " kept Delta, "
      << value_equiv_failures << " failed value-equivalence, "
      << designated_failures << " failed designated-equivalence\n";
  if (value_equiv_failures > 0) {
    log << "      value-equivalence cannot hold in general: Delta's jump at "
           "the top level has no Delta-free counterpart below it (first "
           "failing input: "
        << *first_failure << ")\n";
    log << "      the elimination's actual guarantee held on all 1000 "
           "inputs: Delta-free output, designated-equivalent to the input\n";
  }
  return ok;
}

bool a09_lemma_properties(std::ostream& log) {
  bool ok = true;

  // context closure as validity preservation
  test::FormulaGen gen(5555, {{"a", "b"}, 3, true});
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> ctx_pick(0, 4);
  auto apply_context = [&](int which, const Formula& hole) {
    switch (which) {
      case 0: return delta(hole);
      case 1: return neg(hole);
      case 2: return conj(hole, atom("b"));
      case 3: return imp(atom("a"), hole);
      default: return disj(delta(hole), conj(hole, atom("a")));
    }
  };
  int closure_checked = 0;
  for (Mode mode : {Mode::standard, Mode::restricted}) {
    int kept = 0;
    for (int i = 0; kept < 200 && i < 20000; ++i) {
      Formula a = i % 2 == 0 ? test::random_valid_formula(gen, mode) : gen();
      Formula b = gen();
      Formula c = gen();
      Formula d = i % 3 == 0 ? conj(c, c) : disj(c, c);
      Formula premise = disj(a, conj(b, lequiv(c, d)));
      if (!is_valid(premise, mode).valid) continue;
      ++kept;
      int which = ctx_pick(rng);
      Formula conclusion = disj(
          a, conj(b, lequiv(apply_context(which, c), apply_context(which, d))));
      if (!is_valid(conclusion, mode).valid) ok = false;
    }
    closure_checked += kept;
    ok &= kept >= 200;
  }

  // transitivity as a single valid implication
  test::FormulaGen tr(6666, {{"a", "b"}, 3, true});
  int transitivity_checked = 0;
  for (Mode mode : {Mode::standard, Mode::restricted}) {
    for (int i = 0; i < 200; ++i) {
      Formula a = tr(), b = tr(), c = tr(), d = tr(), l = tr();
      Formula claim = imp(conj(disj(a, conj(b, lequiv(c, d))), lequiv(d, l)),
                          disj(a, conj(b, lequiv(c, l))));
      for (int k = 2; k <= 5; ++k)
        if (!is_valid_at(claim, k, mode).valid) ok = false;
      ++transitivity_checked;
    }
  }

  // Delta over a padded disjunction collapses to the frame (restricted)
  test::FormulaGen le(8888, {{"a", "b"}, 3, true});
  int collapse_checked = 0;
  for (int i = 0; i < 200; ++i) {
    Formula c = le(), e = le();
    Formula claim = imp(delta(disj(c, conj(e, atom("a")))), c);
    for (int k = 2; k <= 5; ++k)
      if (!is_valid_at(claim, k, Mode::restricted).valid) ok = false;
    ++collapse_checked;
  }

  log << "      context closure on " << closure_checked
      << " valid instances, transitivity on " << transitivity_checked
      << ", Delta collapse on " << collapse_checked << "\n";
  return ok;
}

bool a10_witnessed_checks(std::ostream& log) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  SearchBounds bounds{3, 4};
  for (const char* text :
       {"exists x. P(x) -> (forall y. P(y))",
        "exists x. (exists y. P(y)) -> P(x)",
        "((forall x. P(x)) -> B) -> (exists x. (P(x) -> B))",
        "(B -> (exists x. P(x))) -> (exists x. (B -> P(x)))",
        "D(forall x. P(x)) <-> (forall x. D(P(x)))",
        "D(exists x. P(x)) <-> (exists x. D(P(x)))"}) {
    if (is_valid_fo_bounded(PF(text), bounds).countermodel_found) ok = false;
  }

  auto v = is_valid_fo_bounded(PF("(forall x. P(x)) | (exists x. ~P(x))"),
                               bounds);
  ok &= v.countermodel_found && v.countermodel->domain_size == 1 &&
        v.countermodel->scale.levels == 3 &&
        v.countermodel->tables.at("P").at({0}) == 1;

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  ok &= secs < 300.0;
  log << "      six laws exhaustively countermodel-free at d<=3, k<=4; the "
         "classical tautology fails at d=1, k=3, P(0)=1; "
      << std::fixed << std::setprecision(1) << secs << "s\n";
  return ok;
}

bool a11_translation_suite(std::ostream& log) {
  const char* suite[] = {
      "D(P) -> P",
      "D(P)",
      "P -> D(P)",
      "~D(P) | D(P)",
      "D(P | Q) -> (D(P) | D(Q))",
      "D(P) -> D(D(P))",
      "D(P -> Q) -> (D(P) -> D(Q))",
      "D(P & Q) <-> (D(P) & D(Q))",
      "D(forall x. P(x)) <-> (forall x. D(P(x)))",
      "D(exists x. P(x)) <-> (exists x. D(P(x)))",
      "(exists x. D(P(x))) -> D(exists x. P(x))",
      "D(exists x. P(x)) -> (forall x. D(P(x)))",
  };
  SearchBounds bounds{2, 3};
  bool ok = true;
  int agreed = 0;
  for (const char* text : suite) {
    Formula f = PF(text);
    bool direct = is_valid_fo_bounded(f, bounds).countermodel_found;
    Formula translated = translate_delta_free(f);
    if (contains_delta(translated)) ok = false;
    bool via_translation =
        is_valid_fo_bounded(translated, bounds).countermodel_found;
    bool via_struc = is_valid_fo_bounded(structural_form(f).formula, bounds)
                         .countermodel_found;
    if (direct == via_translation && direct == via_struc) {
      ++agreed;
    } else {
      ok = false;
      log << "      disagreement on " << text << ": direct=" << direct
          << " translated=" << via_translation << " structural=" << via_struc
          << "\n";
    }
  }
  log << "      " << agreed << "/" << std::size(suite)
      << " formulas agree between direct, structural, and translated "
         "countermodel search\n";
  return ok;
}

bool a12_equivalence_theorem(std::ostream& log) {
  SearchBounds bounds{2, 3};
  bool ok = true;

  struct Instance {
    const char* a;
    const char* b;
    const char* context;
  };
  const Instance delta_instances[] = {
      {"P", "Q", "D(_)"},
      {"P", "Q", "D(_) -> _"},
      {"P(x)", "P(x) & P(x)", "forall x. D(P(x) -> _)"},
      {"P(x)", "Q(x)", "forall x. D(_)"},
  };
  for (const auto& inst : delta_instances) {
    auto v = equivalence_theorem_check(PF(inst.a), PF(inst.b), PF(inst.context),
                                       EquivPremise::with_delta, bounds);
    if (v.countermodel_found) {
      ok = false;
      log << "      unexpected countermodel for Delta premise with context "
          << inst.context << "\n";
    }
  }

  auto failing = equivalence_theorem_check(PF("P"), PF("Q"), PF("D(_)"),
                                           EquivPremise::plain, bounds);
  ok &= failing.countermodel_found;
  if (failing.countermodel_found) {
    const auto& m = *failing.countermodel;
    log << "      plain premise with a Delta context fails as required "
           "(domain="
        << m.domain_size << ", levels=" << m.scale.levels << ")\n";
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Check> checks = {
      {"A01 worked-example elimination matches ~a and certifies equivalence",
       a01_worked_example_elimination},
      {"A02 Delta over excluded middle reduces to one restricted chain",
       a02_second_worked_example},
      {"A03 chain counts 3/11 and the seven optimized chains",
       a03_chain_counts},
      {"A04 Delta undefinability from the three-level table",
       a04_delta_undefinability},
      {"A05 Delta axioms and the necessitation rule", a05_axiom_suite},
      {"A06 standard/restricted coincidence and the guard reductions",
       a06_coincidence},
      {"A07 chain machinery: disjunction, coverage, soundness",
       a07_chain_machinery},
      {"A08 elimination sweep over 1000 Delta formulas",
       a08_elimination_sweep},
      {"A09 framed-equivalence lemmas as validity statements",
       a09_lemma_properties},
      {"A10 witnessed first-order checks", a10_witnessed_checks},
      {"A11 structural and Delta-free translations agree", a11_translation_suite},
      {"A12 equivalence theorem: Delta premise holds, plain premise fails",
       a12_equivalence_theorem},
  };

  int passed = 0;
  for (auto& check : checks) {
    std::ostringstream detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = check.run(detail);
    } catch (const std::exception& e) {
      detail << "      exception: " << e.what() << "\n";
    }
    check.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    check.passed = ok;
    passed += ok ? 1 : 0;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << check.name << " ("
              << std::fixed << std::setprecision(2) << check.seconds << "s)\n"
              << detail.str();
  }
  std::cout << "acceptance: " << passed << "/" << checks.size() << " passed\n";
  return passed == static_cast<int>(checks.size()) ? 0 : 1;
}
