#include "godel/elimination.hpp"

#include <algorithm>
#include <optional>

namespace godel {

namespace {

std::vector<std::string> atom_list(const Formula& f) {
  auto atoms = free_atoms(f);
  return {atoms.begin(), atoms.end()};
}

// Canonical enumeration order, reused to sort normal forms.
bool chain_less(const Chain& a, const Chain& b) {
  if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
  if (a.blocks != b.blocks) return a.blocks < b.blocks;
  int ra = (a.top_merged ? 2 : 0) + (a.bot_merged ? 0 : 1);
  int rb = (b.top_merged ? 2 : 0) + (b.bot_merged ? 0 : 1);
  return ra < rb;
}

// The "smaller" chain for an atom residue: the atom's block and every block
// above it collapse into T's class. Returns nothing when the atom sits in
// F's class; that disjunct is equivalent to F.
std::optional<Chain> merge_from_atom(const Chain& c, const std::string& name) {
  std::size_t hit = c.blocks.size();
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    if (std::find(c.blocks[b].begin(), c.blocks[b].end(), name) !=
        c.blocks[b].end()) {
      hit = b;
      break;
    }
  }
  if (hit == c.blocks.size())
    throw semantic_error("residue atom '" + name + "' is not in the chain");
  if (hit == 0 && c.bot_merged) return std::nullopt;

  std::vector<std::vector<std::string>> blocks(c.blocks.begin(),
                                               c.blocks.begin() + hit);
  std::vector<std::string> merged;
  for (std::size_t b = hit; b < c.blocks.size(); ++b)
    merged.insert(merged.end(), c.blocks[b].begin(), c.blocks[b].end());
  blocks.push_back(std::move(merged));
  return make_chain(std::move(blocks), c.bot_merged, true);
}

}  // namespace

std::vector<std::pair<Chain, Formula>> residue_table(const Formula& f, Mode mode) {
  require_propositional(f);
  if (mode == Mode::standard && contains_delta(f))
    throw semantic_error("Delta admits no chain normal form in standard mode");
  auto vars = atom_list(f);
  auto chains = mode == Mode::restricted ? enumerate_restricted_chains(vars)
                                         : enumerate_chains(vars);
  DeltaRules rules =
      mode == Mode::restricted ? DeltaRules::restricted : DeltaRules::none;
  std::vector<std::pair<Chain, Formula>> out;
  out.reserve(chains.size());
  for (auto& c : chains) {
    Formula residue = syntactic_eval(c, f, rules);
    out.emplace_back(std::move(c), std::move(residue));
  }
  return out;
}

ChainNormalForm chain_normal_form(const Formula& f, Mode mode) {
  ChainNormalForm cnf{{}, mode};
  for (auto& [chain, residue] : residue_table(f, mode)) {
    switch (residue.kind()) {
      case Kind::Bot:
        continue;
      case Kind::Top:
        cnf.disjuncts.push_back({std::move(chain), top()});
        break;
      case Kind::Atom: {
        if (mode == Mode::restricted) continue;
        auto merged = merge_from_atom(chain, residue.name());
        if (merged) cnf.disjuncts.push_back({std::move(*merged), top()});
        break;
      }
      default:
        throw semantic_error("syntactic evaluation produced a non-atomic residue");
    }
  }
  std::sort(cnf.disjuncts.begin(), cnf.disjuncts.end(),
            [](const CnfDisjunct& a, const CnfDisjunct& b) {
              return chain_less(a.chain, b.chain);
            });
  cnf.disjuncts.erase(std::unique(cnf.disjuncts.begin(), cnf.disjuncts.end(),
                                  [](const CnfDisjunct& a, const CnfDisjunct& b) {
                                    return a.chain == b.chain;
                                  }),
                      cnf.disjuncts.end());
  return cnf;
}

Formula cnf_formula(const ChainNormalForm& cnf) {
  std::optional<Formula> acc;
  for (const auto& d : cnf.disjuncts) {
    Formula part = chain_formula(d.chain);
    if (d.residue.kind() != Kind::Top) part = conj(std::move(part), d.residue);
    acc = acc ? disj(*acc, std::move(part)) : std::move(part);
  }
  return acc ? *acc : bot();
}

ChainNormalForm optimize_cnf(const ChainNormalForm& cnf) {
  ChainNormalForm out{{}, cnf.mode};
  for (const auto& d : cnf.disjuncts) {
    bool duplicate = false;
    for (const auto& kept : out.disjuncts) {
      if (are_equivalent(chain_formula(kept.chain), chain_formula(d.chain),
                         cnf.mode)
              .valid) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.disjuncts.push_back(d);
  }
  return out;
}

Formula eliminate_delta(const Formula& f) {
  require_propositional(f);
  return cnf_formula(chain_normal_form(f, Mode::restricted));
}

Formula guard_formula(const Formula& f) {
  require_propositional(f);
  std::optional<Formula> guard;
  for (const auto& name : atom_list(f)) {
    Formula clause = neg(delta(atom(name)));
    guard = guard ? conj(*guard, std::move(clause)) : std::move(clause);
  }
  return guard ? imp(*guard, f) : f;
}

Formula validity_companion(const Formula& f) {
  require_propositional(f);
  Formula out = f;
  for (const auto& name : atom_list(f)) out = disj(std::move(out), atom(name));
  return out;
}

Verdict replace_top_stability_check(const Formula& f,
                                    const std::set<std::string>& atoms_to_top) {
  require_propositional(f);
  if (contains_delta(f))
    throw semantic_error(
        "replacement by T is only validity-preserving on Delta-free formulas");
  std::map<std::string, Formula> subst;
  for (const auto& name : atoms_to_top) subst.emplace(name, top());
  return is_valid(substitute_atoms(f, subst), Mode::restricted);
}

}  // namespace godel
