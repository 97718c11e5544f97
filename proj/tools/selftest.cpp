#include <functional>
#include <vector>

#include "cli_app.hpp"
#include "godel/elimination.hpp"
#include "godel/first_order.hpp"
#include "godel/parser.hpp"
#include "godel/printer.hpp"

namespace godel::cli {

namespace {

struct Item {
  const char* name;
  std::function<bool()> check;
};

Formula P(const std::string& text) { return parse(text); }
Formula PF(const std::string& text) { return parse(text, Syntax::first_order); }

int ev(const std::string& text, std::map<std::string, int> levels, int k) {
  return eval(P(text), Interpretation{std::move(levels), TruthScale(k), false});
}

bool no_cm(const std::string& text, int d = 2, int k = 3) {
  return !is_valid_fo_bounded(PF(text), SearchBounds{d, k}).countermodel_found;
}

std::vector<Item> corpus() {
  std::vector<Item> items;
  auto add = [&](const char* name, std::function<bool()> fn) {
    items.push_back({name, std::move(fn)});
  };

  add("parse: disjunction with Delta", [] {
    return P("a | D(a | ~a)") ==
           disj(atom("a"), delta(disj(atom("a"), neg(atom("a")))));
  });
  add("parse: constants and sugar", [] {
    return P("T") == top() && P("A < B") == imp(imp(atom("B"), atom("A")), atom("B")) &&
           P("A <-> B") == lequiv(atom("A"), atom("B"));
  });
  add("parse: two-variable implication", [] {
    return P("(A -> B) -> B") == imp(imp(atom("A"), atom("B")), atom("B"));
  });
  add("render: sugar reintroduction", [] {
    return render(neg(atom("a"))) == "~a" && render(delta(top())) == "D(T)" &&
           render(disj(atom("a"), atom("b"))) == "a | b";
  });

  add("eval: implication clause", [] {
    return ev("a -> b", {{"a", 2}, {"b", 1}}, 3) == 1;
  });
  add("eval: Delta clause", [] {
    return ev("D(a)", {{"a", 1}}, 3) == 0 && ev("D(a)", {{"a", 2}}, 3) == 2;
  });
  add("eval: excluded middle at the middle level", [] {
    return ev("~a | a", {{"a", 1}}, 3) == 1;
  });

  add("three-valued table: the six one-variable functions vs D", [] {
    // rows a=0, 1, 2 with top=2; columns ~a, T, F, a|~a, ~a->a, D(a)
    const int expect[3][6] = {
        {2, 2, 0, 2, 0, 0}, {0, 2, 0, 1, 2, 0}, {0, 2, 0, 2, 2, 2}};
    const char* cols[6] = {"~a", "T", "F", "a | ~a", "~a -> a", "D(a)"};
    for (int a = 0; a <= 2; ++a)
      for (int i = 0; i < 6; ++i)
        if (ev(cols[i], {{"a", a}}, 3) != expect[a][i]) return false;
    return true;
  });
  add("D is not one of the six one-variable functions", [] {
    for (const char* f : {"T", "F", "a", "~a", "a | ~a", "~a -> a"}) {
      if (is_valid_at(lequiv(P(f), P("D(a)")), 3, Mode::standard).valid)
        return false;
    }
    return true;
  });

  add("valid: excluded middle fails at the middle level", [] {
    Verdict v = is_valid(P("a | ~a"), Mode::standard);
    return !v.valid && v.scale == 3 && v.countermodel &&
           v.countermodel->levels.at("a") == 1;
  });
  add("valid: D(a) -> a", [] {
    return is_valid(P("D(a) -> a"), Mode::standard).valid;
  });
  add("valid: ~D(a) restricted but not standard", [] {
    Verdict std_v = is_valid(P("~D(a)"), Mode::standard);
    return is_valid(P("~D(a)"), Mode::restricted).valid && !std_v.valid &&
           std_v.countermodel->levels.at("a") == 2;
  });
  add("equiv: D(a) is F under restricted semantics only", [] {
    return are_equivalent(P("D(a)"), bot(), Mode::restricted).valid &&
           !are_equivalent(P("D(a)"), bot(), Mode::standard).valid;
  });

  add("chains: one variable", [] {
    auto cs = enumerate_chains({"a"});
    return cs.size() == 3 && chain_text(cs[0]) == "B <= a < T" &&
           chain_text(cs[1]) == "B < a < T" && chain_text(cs[2]) == "B < a <= T";
  });
  add("chains: two variables give eleven", [] {
    return enumerate_chains({"A", "B"}).size() == 11;
  });
  add("chains: restricted counts", [] {
    return enumerate_restricted_chains({"a"}).size() == 2 &&
           enumerate_restricted_chains({"A", "B"}).size() == 6;
  });
  add("chain formula: merged bottom", [] {
    Chain c = make_chain({{"a"}}, true, false);
    Interpretation i0{{{"a", 0}}, TruthScale(3), false};
    Interpretation i1{{{"a", 1}}, TruthScale(3), false};
    return eval(chain_formula(c), i0) == 2 && eval(chain_formula(c), i1) < 2;
  });
  add("chain formula: merged top designates only at the top", [] {
    Chain c = make_chain({{"a"}}, false, true);
    for (int a = 0; a <= 2; ++a) {
      Interpretation i{{{"a", a}}, TruthScale(3), false};
      if ((eval(chain_formula(c), i) == 2) != (a == 2)) return false;
    }
    return true;
  });
  add("entails: order read-off", [] {
    Chain c = make_chain({{"A"}, {"B"}}, false, false);
    Chain merged = make_chain({{"A", "B"}}, false, false);
    Chain botm = make_chain({{"A"}}, true, false);
    return entails(c, atom("A"), atom("B")) && !entails(c, atom("B"), atom("A")) &&
           entails(botm, atom("A"), bot()) &&
           entails(merged, atom("A"), atom("B")) &&
           entails(merged, atom("B"), atom("A"));
  });

  add("syntactic evaluation: two-variable rows", [] {
    Formula f = P("(A -> B) -> B");
    Chain row4 = make_chain({{"B"}, {"A"}}, true, false);
    Chain row7 = make_chain({{"A"}, {"B"}}, false, false);
    return syntactic_eval(row4, f, DeltaRules::none) == top() &&
           syntactic_eval(row7, f, DeltaRules::none) == atom("B");
  });
  add("syntactic evaluation: Delta collapses per chain", [] {
    Formula f = P("D(A | (A -> F))");
    Chain c1 = make_chain({{"A"}}, true, false);
    Chain c2 = make_chain({{"A"}}, false, false);
    return syntactic_eval(c1, f, DeltaRules::restricted) == top() &&
           syntactic_eval(c2, f, DeltaRules::restricted) == bot();
  });

  add("chain normal form: seven optimized chains", [] {
    auto cnf = chain_normal_form(P("(A -> B) -> B"), Mode::standard);
    if (cnf.disjuncts.size() != 7) return false;
    return are_equivalent(P("(A -> B) -> B"), cnf_formula(cnf), Mode::standard)
        .valid;
  });
  add("chain normal form: Delta worked example", [] {
    auto cnf = chain_normal_form(P("D(A | (A -> F))"), Mode::restricted);
    return cnf.disjuncts.size() == 1 &&
           cnf.disjuncts[0].chain == make_chain({{"A"}}, true, false) &&
           are_equivalent(cnf_formula(cnf), P("~A"), Mode::restricted).valid;
  });

  add("eliminate: a | D(a | ~a) collapses to the ~a chain", [] {
    Formula f = P("a | D(a | ~a)");
    Formula result = eliminate_delta(f);
    return !contains_delta(result) &&
           are_equivalent(result, P("~a"), Mode::restricted).valid &&
           are_designated_equivalent(f, result, Mode::restricted).valid;
  });
  add("eliminate: D(a) collapses to F", [] {
    return are_equivalent(eliminate_delta(P("D(a)")), bot(), Mode::restricted)
        .valid;
  });

  add("guard: restricted validity via standard validity", [] {
    Formula f = P("D(a) -> F");
    return is_valid(guard_formula(f), Mode::standard).valid &&
           !is_valid(guard_formula(P("a | ~a")), Mode::standard).valid;
  });
  add("companion: construction", [] {
    return render(validity_companion(P("~D(a)"))) == "~D(a) | a";
  });

  add("Delta axioms at every scale up to six", [] {
    const char* axioms[] = {"D(a) | ~D(a)", "D(a | b) -> (D(a) | D(b))",
                            "D(a) -> a", "D(a) -> D(D(a))",
                            "D(a -> b) -> (D(a) -> D(b))"};
    for (const char* ax : axioms)
      for (int k = 2; k <= 6; ++k)
        for (Mode mode : {Mode::standard, Mode::restricted})
          if (!is_valid_at(P(ax), k, mode).valid) return false;
    return true;
  });

  add("full disjunction of chains is a tautology", [] {
    for (auto vars : std::vector<std::vector<std::string>>{{}, {"a"}, {"a", "b"}}) {
      std::optional<Formula> all, restr;
      for (const auto& c : enumerate_chains(vars))
        all = all ? disj(*all, chain_formula(c)) : chain_formula(c);
      for (const auto& c : enumerate_restricted_chains(vars))
        restr = restr ? disj(*restr, chain_formula(c)) : chain_formula(c);
      if (!is_valid(*all, Mode::standard).valid) return false;
      if (!is_valid(*restr, Mode::restricted).valid) return false;
    }
    return true;
  });
  add("every interpretation matches exactly one chain", [] {
    for (auto vars : std::vector<std::vector<std::string>>{{"a"}, {"a", "b"}}) {
      auto chains = enumerate_chains(vars);
      std::set<std::string> atoms(vars.begin(), vars.end());
      int k = static_cast<int>(vars.size()) + 2;
      bool ok = true;
      for_each_interpretation(atoms, TruthScale(k), false,
                              [&](const Interpretation& interp) {
                                Chain c = chain_of(interp);
                                int matches = 0;
                                for (const auto& d : chains)
                                  if (d == c) ++matches;
                                ok &= matches == 1;
                                ok &= eval(chain_formula(c), interp) == k - 1;
                                return ok;
                              });
      if (!ok) return false;
    }
    return true;
  });

  add("witnessed: infimum and supremum are attained", [] {
    return no_cm("exists x. P(x) -> (forall y. P(y))") &&
           no_cm("exists x. (exists y. P(y)) -> P(x)");
  });
  add("witnessed: quantifier shifts", [] {
    return no_cm("((forall x. P(x)) -> B) -> (exists x. (P(x) -> B))") &&
           no_cm("(B -> (exists x. P(x))) -> (exists x. (B -> P(x)))");
  });
  add("witnessed: Delta commutes with both quantifiers", [] {
    return no_cm("D(forall x. P(x)) <-> (forall x. D(P(x)))") &&
           no_cm("D(exists x. P(x)) <-> (exists x. D(P(x)))");
  });
  add("finite countermodel for the classical tautology", [] {
    auto v = is_valid_fo_bounded(PF("(forall x. P(x)) | (exists x. ~P(x))"),
                                 SearchBounds{3, 4});
    return v.countermodel_found && v.countermodel->domain_size == 1 &&
           v.countermodel->scale.levels == 3 &&
           v.countermodel->tables.at("P").at({0}) == 1;
  });

  add("structural form: smallest case", [] {
    StructuralForm s = structural_form(PF("P"));
    return s.definitions.size() == 1 && s.definitions[0].first == "F_0" &&
           s.definitions[0].second == atom("P") && s.root == "F_0";
  });
  add("translation: output is Delta-free", [] {
    for (const char* text : {"D(P)", "D(D(P))", "D(exists x. P(x))"}) {
      if (contains_delta(translate_delta_free(PF(text)))) return false;
    }
    return true;
  });
  add("translation: countermodel existence agrees", [] {
    for (const char* text : {"D(P) -> P", "D(P)"}) {
      Formula f = PF(text);
      bool direct =
          is_valid_fo_bounded(f, SearchBounds{2, 3}).countermodel_found;
      bool translated = is_valid_fo_bounded(translate_delta_free(f),
                                            SearchBounds{2, 3})
                            .countermodel_found;
      if (direct != translated) return false;
    }
    return true;
  });

  add("equivalence theorem: Delta premise survives Delta contexts", [] {
    auto v = equivalence_theorem_check(PF("P"), PF("Q"), PF("D(_)"),
                                       EquivPremise::with_delta,
                                       SearchBounds{2, 3});
    return !v.countermodel_found;
  });
  add("equivalence theorem: plain premise fails under D", [] {
    auto v = equivalence_theorem_check(PF("P"), PF("Q"), PF("D(_)"),
                                       EquivPremise::plain, SearchBounds{2, 3});
    return v.countermodel_found;
  });

  return items;
}

}  // namespace

int run_selftest(std::ostream& out) {
  int failures = 0;
  auto items = corpus();
  for (const auto& item : items) {
    bool ok = false;
    try {
      ok = item.check();
    } catch (const std::exception& e) {
      out << "FAIL " << item.name << " (exception: " << e.what() << ")\n";
      ++failures;
      continue;
    }
    if (ok) {
      out << "ok   " << item.name << "\n";
    } else {
      out << "FAIL " << item.name << "\n";
      ++failures;
    }
  }
  out << "selftest: " << (items.size() - failures) << "/" << items.size()
      << " passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace godel::cli
