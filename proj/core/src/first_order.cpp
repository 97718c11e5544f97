#include "godel/first_order.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace godel {

namespace {

struct FlatTable {
  int arity = 0;
  std::vector<int> levels;  // indexed by base-domain_size digit string
};

struct FlatModel {
  int domain = 1;
  int top = 1;
  std::map<std::string, FlatTable> tables;
};

// Bindings are tiny; a vector beats a map here.
using Env = std::vector<std::pair<std::string, int>>;

int lookup_var(const Env& env, const std::string& name) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == name) return it->second;
  throw semantic_error("variable '" + name + "' is not bound");
}

int eval_flat(const Formula& f, const FlatModel& m, Env& env) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = m.tables.find(f.name());
      if (it == m.tables.end())
        throw semantic_error("no table for predicate '" + f.name() + "'");
      const FlatTable& table = it->second;
      if (static_cast<int>(f.args().size()) != table.arity)
        throw semantic_error("arity mismatch for predicate '" + f.name() + "'");
      long long index = 0;
      for (const auto& arg : f.args())
        index = index * m.domain + lookup_var(env, arg);
      return table.levels[static_cast<std::size_t>(index)];
    }
    case Kind::Top:
      return m.top;
    case Kind::Bot:
      return 0;
    case Kind::And:
      return std::min(eval_flat(f.left(), m, env), eval_flat(f.right(), m, env));
    case Kind::Or:
      return std::max(eval_flat(f.left(), m, env), eval_flat(f.right(), m, env));
    case Kind::Imp: {
      int a = eval_flat(f.left(), m, env);
      int b = eval_flat(f.right(), m, env);
      return a <= b ? m.top : b;
    }
    case Kind::Delta:
      return eval_flat(f.child(), m, env) == m.top ? m.top : 0;
    case Kind::Forall:
    case Kind::Exists: {
      bool universal = f.kind() == Kind::Forall;
      int acc = universal ? m.top : 0;
      env.emplace_back(f.name(), 0);
      for (int u = 0; u < m.domain; ++u) {
        env.back().second = u;
        int v = eval_flat(f.child(), m, env);
        acc = universal ? std::min(acc, v) : std::max(acc, v);
      }
      env.pop_back();
      return acc;
    }
  }
  throw semantic_error("unreachable formula kind");
}

long long power_capped(long long base, long long exponent, long long cap) {
  long long out = 1;
  for (long long i = 0; i < exponent; ++i) {
    if (out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

FlatModel flatten(const FiniteModel& m) {
  FlatModel flat;
  flat.domain = m.domain_size;
  flat.top = m.scale.top();
  for (const auto& [name, table] : m.tables) {
    if (table.empty())
      throw semantic_error("empty table for predicate '" + name + "'");
    int arity = static_cast<int>(table.begin()->first.size());
    long long slots = power_capped(std::max(flat.domain, 1), arity,
                                   std::numeric_limits<long long>::max() / 2);
    FlatTable out{arity, std::vector<int>(static_cast<std::size_t>(slots), -1)};
    for (const auto& [tuple, level] : table) {
      if (static_cast<int>(tuple.size()) != arity)
        throw semantic_error("ragged table for predicate '" + name + "'");
      long long index = 0;
      for (int component : tuple) {
        if (component < 0 || component >= flat.domain)
          throw semantic_error("table entry outside the domain");
        index = index * flat.domain + component;
      }
      out.levels[static_cast<std::size_t>(index)] = level;
    }
    for (int level : out.levels)
      if (level < 0)
        throw semantic_error("incomplete table for predicate '" + name + "'");
    flat.tables.emplace(name, std::move(out));
  }
  return flat;
}

FiniteModel unflatten(const FlatModel& flat, TruthScale scale, bool restricted) {
  FiniteModel m{flat.domain, scale, restricted, {}};
  for (const auto& [name, table] : flat.tables) {
    auto& entries = m.tables[name];
    for (std::size_t index = 0; index < table.levels.size(); ++index) {
      std::vector<int> tuple(table.arity);
      std::size_t rest = index;
      for (int pos = table.arity - 1; pos >= 0; --pos) {
        tuple[pos] = static_cast<int>(rest % flat.domain);
        rest /= flat.domain;
      }
      entries[tuple] = table.levels[index];
    }
  }
  return m;
}

}  // namespace

int eval_fo(const Formula& f, const FiniteModel& m,
            const std::map<std::string, int>& env) {
  FlatModel flat = flatten(m);
  Env bindings(env.begin(), env.end());
  for (const auto& [name, value] : bindings)
    if (value < 0 || value >= m.domain_size)
      throw semantic_error("binding for '" + name + "' is outside the domain");
  return eval_flat(f, flat, bindings);
}

BoundedVerdict is_valid_fo_bounded(const Formula& f, SearchBounds bounds,
                                   Mode mode) {
  if (!free_vars(f).empty())
    throw semantic_error("bounded validity search needs a closed formula");
  if (bounds.max_domain < 1 || bounds.max_levels < 2)
    throw semantic_error("search bounds need max_domain >= 1, max_levels >= 2");
  auto arities = predicate_arities(f);

  BoundedVerdict verdict{false, std::nullopt, bounds, mode};
  for (int d = 1; d <= bounds.max_domain; ++d) {
    for (int k = 2; k <= bounds.max_levels; ++k) {
      long long slots = 0;
      for (const auto& [name, arity] : arities)
        slots += power_capped(d, arity, bounds.budget);
      int level_choices = mode == Mode::restricted ? k - 1 : k;
      long long models = power_capped(level_choices, slots, bounds.budget);
      if (models > bounds.budget)
        throw budget_exceeded("model enumeration at domain " + std::to_string(d) +
                                  ", levels " + std::to_string(k) +
                                  " exceeds the budget",
                              models, bounds.budget);

      FlatModel flat;
      flat.domain = d;
      flat.top = k - 1;
      std::vector<int*> odometer;
      for (const auto& [name, arity] : arities) {
        FlatTable table{arity, std::vector<int>(
                                   static_cast<std::size_t>(power_capped(
                                       d, arity, bounds.budget)),
                                   0)};
        flat.tables.emplace(name, std::move(table));
      }
      for (auto& [name, table] : flat.tables)
        for (int& level : table.levels) odometer.push_back(&level);

      const int max_level = level_choices - 1;
      Env env;
      while (true) {
        env.clear();
        if (eval_flat(f, flat, env) != flat.top) {
          verdict.countermodel_found = true;
          verdict.countermodel =
              unflatten(flat, TruthScale(k), mode == Mode::restricted);
          return verdict;
        }
        int i = static_cast<int>(odometer.size()) - 1;
        for (; i >= 0; --i) {
          if (*odometer[i] < max_level) {
            ++*odometer[i];
            break;
          }
          *odometer[i] = 0;
        }
        if (i < 0) break;
      }
    }
  }
  return verdict;
}

namespace {

Formula close_forall(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    body = forall(*it, std::move(body));
  return body;
}

Formula close_exists(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    body = exists(*it, std::move(body));
  return body;
}

struct DefinitionPlan {
  std::vector<Formula> subs;                 // post-order, no constants
  std::vector<std::string> names;            // fresh predicate per subformula
  std::vector<std::vector<std::string>> fv;  // free variables per subformula
};

DefinitionPlan plan_definitions(const Formula& f) {
  if (!free_vars(f).empty())
    throw semantic_error("structural normal form needs a closed formula");
  DefinitionPlan plan;
  for (const auto& g : subformulas(f)) {
    if (g.kind() == Kind::Top || g.kind() == Kind::Bot) continue;
    plan.subs.push_back(g);
  }
  auto input_preds = predicate_arities(f);
  for (std::size_t i = 0; i < plan.subs.size(); ++i) {
    const Formula& g = plan.subs[i];
    std::string name =
        (g.kind() == Kind::Delta ? "F4_" : "F_") + std::to_string(i);
    if (input_preds.count(name))
      throw semantic_error("input predicate '" + name +
                           "' collides with a fresh definition name");
    plan.names.push_back(std::move(name));
    plan.fv.push_back(free_vars(g));
  }
  return plan;
}

// The fresh predicate standing for a subformula, applied to its free
// variables; constants stand for themselves.
Formula reference(const DefinitionPlan& plan, const Formula& g) {
  if (g.kind() == Kind::Top || g.kind() == Kind::Bot) return g;
  for (std::size_t i = 0; i < plan.subs.size(); ++i)
    if (plan.subs[i] == g) return atom(plan.names[i], plan.fv[i]);
  throw semantic_error("subformula missing from the definition plan");
}

// g with its immediate children replaced by their fresh predicates.
Formula stepwise_body(const DefinitionPlan& plan, const Formula& g) {
  switch (g.kind()) {
    case Kind::Atom:
      return g;
    case Kind::Top:
    case Kind::Bot:
      return g;
    case Kind::And:
      return conj(reference(plan, g.left()), reference(plan, g.right()));
    case Kind::Or:
      return disj(reference(plan, g.left()), reference(plan, g.right()));
    case Kind::Imp:
      return imp(reference(plan, g.left()), reference(plan, g.right()));
    case Kind::Delta:
      return delta(reference(plan, g.child()));
    case Kind::Forall:
      return forall(g.name(), reference(plan, g.child()));
    case Kind::Exists:
      return exists(g.name(), reference(plan, g.child()));
  }
  throw semantic_error("unreachable formula kind");
}

}  // namespace

StructuralForm structural_form(const Formula& f) {
  DefinitionPlan plan = plan_definitions(f);
  std::optional<Formula> antecedent;
  StructuralForm out{f, {}, ""};
  for (std::size_t i = 0; i < plan.subs.size(); ++i) {
    Formula definition = close_forall(
        plan.fv[i],
        lequiv(atom(plan.names[i], plan.fv[i]), stepwise_body(plan, plan.subs[i])));
    Formula conjunct = delta(std::move(definition));
    antecedent = antecedent ? conj(*antecedent, std::move(conjunct))
                            : std::move(conjunct);
    out.definitions.emplace_back(plan.names[i], plan.subs[i]);
  }
  Formula root_ref = reference(plan, f);
  out.root = root_ref.kind() == Kind::Atom
                 ? root_ref.name()
                 : (root_ref.kind() == Kind::Top ? "T" : "F");
  out.formula = antecedent ? imp(*antecedent, root_ref) : root_ref;
  return out;
}

Formula translate_delta_free(const Formula& f) {
  DefinitionPlan plan = plan_definitions(f);
  std::optional<Formula> antecedent;
  std::optional<Formula> escapes;
  for (std::size_t i = 0; i < plan.subs.size(); ++i) {
    const Formula& g = plan.subs[i];
    Formula head = atom(plan.names[i], plan.fv[i]);
    if (g.kind() == Kind::Delta) {
      Formula body_ref = reference(plan, g.child());
      Formula crisp = close_forall(plan.fv[i], disj(neg(head), head));
      Formula bound = close_forall(plan.fv[i], imp(head, body_ref));
      Formula both = conj(std::move(crisp), std::move(bound));
      antecedent =
          antecedent ? conj(*antecedent, std::move(both)) : std::move(both);
      Formula escape =
          close_exists(plan.fv[i], conj(neg(head), std::move(body_ref)));
      escapes = escapes ? disj(*escapes, std::move(escape)) : std::move(escape);
    } else {
      Formula definition = close_forall(
          plan.fv[i], lequiv(std::move(head), stepwise_body(plan, g)));
      antecedent = antecedent ? conj(*antecedent, std::move(definition))
                              : std::move(definition);
    }
  }
  Formula consequent = reference(plan, f);
  if (escapes) consequent = disj(std::move(consequent), std::move(*escapes));
  return antecedent ? imp(*antecedent, std::move(consequent))
                    : std::move(consequent);
}

BoundedVerdict equivalence_theorem_check(const Formula& a, const Formula& b,
                                         const Formula& context,
                                         EquivPremise premise,
                                         SearchBounds bounds,
                                         const std::string& hole) {
  Formula equivalence = lequiv(a, b);
  Formula premise_body = premise == EquivPremise::with_delta
                             ? delta(equivalence)
                             : equivalence;
  Formula closed_premise = close_forall(free_vars(equivalence),
                                        std::move(premise_body));
  Formula ca = substitute_atoms(context, {{hole, a}});
  Formula cb = substitute_atoms(context, {{hole, b}});
  Formula whole = imp(std::move(closed_premise), lequiv(ca, cb));
  if (!free_vars(whole).empty())
    throw semantic_error("equivalence-theorem instance is not closed");
  return is_valid_fo_bounded(whole, bounds);
}

}  // namespace godel
