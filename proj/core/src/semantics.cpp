#include "godel/semantics.hpp"

#include <algorithm>
#include <vector>

namespace godel {

std::string to_string(Mode mode) {
  return mode == Mode::standard ? "standard" : "restricted";
}

int eval(const Formula& f, const Interpretation& interp) {
  const int top_level = interp.scale.top();
  switch (f.kind()) {
    case Kind::Atom: {
      if (!f.args().empty())
        throw semantic_error("predicate atom in propositional evaluation");
      auto it = interp.levels.find(f.name());
      if (it == interp.levels.end())
        throw semantic_error("atom '" + f.name() + "' is not assigned");
      return it->second;
    }
    case Kind::Top:
      return top_level;
    case Kind::Bot:
      return 0;
    case Kind::And:
      return std::min(eval(f.left(), interp), eval(f.right(), interp));
    case Kind::Or:
      return std::max(eval(f.left(), interp), eval(f.right(), interp));
    case Kind::Imp: {
      int a = eval(f.left(), interp);
      int b = eval(f.right(), interp);
      return a <= b ? top_level : b;
    }
    case Kind::Delta:
      return eval(f.child(), interp) == top_level ? top_level : 0;
    case Kind::Forall:
    case Kind::Exists:
      throw semantic_error("quantifier in propositional evaluation");
  }
  throw semantic_error("unreachable formula kind");
}

void for_each_interpretation(const std::set<std::string>& atoms,
                             TruthScale scale, bool restricted,
                             const std::function<bool(const Interpretation&)>& fn) {
  std::vector<std::string> names(atoms.begin(), atoms.end());
  const int max_level = restricted ? scale.top() - 1 : scale.top();
  Interpretation interp{{}, scale, restricted};
  for (const auto& name : names) interp.levels[name] = 0;

  while (true) {
    if (!fn(interp)) return;
    // Odometer: the last atom is the fastest digit, so assignments come out
    // in lexicographic order of the name-sorted level tuple.
    int i = static_cast<int>(names.size()) - 1;
    for (; i >= 0; --i) {
      int& level = interp.levels[names[i]];
      if (level < max_level) {
        ++level;
        break;
      }
      level = 0;
    }
    if (i < 0) return;
  }
}

std::vector<Interpretation> enumerate_interps(const std::set<std::string>& atoms,
                                              TruthScale scale, bool restricted) {
  std::vector<Interpretation> out;
  for_each_interpretation(atoms, scale, restricted, [&](const Interpretation& i) {
    out.push_back(i);
    return true;
  });
  return out;
}

Verdict is_valid_at(const Formula& f, int k, Mode mode) {
  require_propositional(f);
  TruthScale scale(k);
  Verdict verdict{true, std::nullopt, k, mode};
  for_each_interpretation(free_atoms(f), scale, mode == Mode::restricted,
                          [&](const Interpretation& interp) {
                            if (eval(f, interp) != scale.top()) {
                              verdict.valid = false;
                              verdict.countermodel = interp;
                              return false;
                            }
                            return true;
                          });
  return verdict;
}

Verdict is_valid(const Formula& f, Mode mode) {
  int n = static_cast<int>(free_atoms(f).size());
  return is_valid_at(f, n + 2, mode);
}

namespace {

Verdict compare_all(const Formula& f, const Formula& g, int k, Mode mode,
                    bool designated_only) {
  require_propositional(f);
  require_propositional(g);
  TruthScale scale(k);
  std::set<std::string> atoms = free_atoms(f);
  atoms.merge(free_atoms(g));
  Verdict verdict{true, std::nullopt, k, mode};
  for_each_interpretation(atoms, scale, mode == Mode::restricted,
                          [&](const Interpretation& interp) {
                            int a = eval(f, interp);
                            int b = eval(g, interp);
                            bool same = designated_only
                                            ? (a == scale.top()) == (b == scale.top())
                                            : a == b;
                            if (!same) {
                              verdict.valid = false;
                              verdict.countermodel = interp;
                              return false;
                            }
                            return true;
                          });
  return verdict;
}

int union_arity(const Formula& f, const Formula& g) {
  std::set<std::string> atoms = free_atoms(f);
  atoms.merge(free_atoms(g));
  return static_cast<int>(atoms.size());
}

}  // namespace

Verdict are_equivalent_at(const Formula& f, const Formula& g, int k, Mode mode) {
  return compare_all(f, g, k, mode, false);
}

Verdict are_equivalent(const Formula& f, const Formula& g, Mode mode) {
  return compare_all(f, g, union_arity(f, g) + 2, mode, false);
}

Verdict are_designated_equivalent(const Formula& f, const Formula& g, Mode mode) {
  return compare_all(f, g, union_arity(f, g) + 2, mode, true);
}

}  // namespace godel
