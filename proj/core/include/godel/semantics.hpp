#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "godel/formula.hpp"

namespace godel {

enum class Mode { standard, restricted };

std::string to_string(Mode mode);

/// Finite linearly ordered value set {0, 1/(k-1), ..., 1}, handled as integer
/// levels 0..k-1. Level k-1 is the designated value 1. Only the order of
/// levels matters; the rationals never appear in code.
struct TruthScale {
  int levels;

  explicit TruthScale(int k) : levels(k) {
    if (k < 2) throw semantic_error("a truth scale needs at least 2 levels");
  }
  int top() const { return levels - 1; }
  bool operator==(const TruthScale&) const = default;
};

/// Atom levels under one valuation. `restricted` means every atom is kept
/// strictly below the top level.
struct Interpretation {
  std::map<std::string, int> levels;
  TruthScale scale;
  bool restricted = false;
};

struct Verdict {
  bool valid = false;
  std::optional<Interpretation> countermodel;
  int scale = 2;
  Mode mode = Mode::standard;
};

/// Evaluates a propositional formula: And=min, Or=max, Imp(a,b)=top if a<=b
/// else b, Delta(a)=top if a=top else 0. Throws on unassigned atoms and on
/// first-order constructors.
int eval(const Formula& f, const Interpretation& interp);

/// Calls fn for each assignment of the given atoms, in lexicographic order
/// (atoms ordered by name, first atom most significant). Restricted
/// enumeration keeps every atom below top. fn returns false to stop early.
void for_each_interpretation(const std::set<std::string>& atoms,
                             TruthScale scale, bool restricted,
                             const std::function<bool(const Interpretation&)>& fn);

/// Convenience: materialized enumeration.
std::vector<Interpretation> enumerate_interps(const std::set<std::string>& atoms,
                                              TruthScale scale, bool restricted);

/// Decides validity exhaustively at scale k = n+2 for n free atoms; that
/// scale preserves every order type of the atoms against bottom and top.
/// The countermodel, if any, is the lexicographically first.
Verdict is_valid(const Formula& f, Mode mode);

/// Same decision at a caller-chosen scale (k >= 2), for monotonicity and
/// sufficiency experiments.
Verdict is_valid_at(const Formula& f, int k, Mode mode);

/// Valid iff f and g take the same level under every interpretation of the
/// union of their atoms at scale n+2; this coincides with validity of
/// (f -> g) & (g -> f). The countermodel shows differing levels.
Verdict are_equivalent(const Formula& f, const Formula& g, Mode mode);
Verdict are_equivalent_at(const Formula& f, const Formula& g, int k, Mode mode);

/// Valid iff f and g are designated together: under every interpretation,
/// f evaluates to top exactly when g does. Weaker than are_equivalent; this
/// is the guarantee the restricted-semantics Delta-elimination provides.
Verdict are_designated_equivalent(const Formula& f, const Formula& g, Mode mode);

}  // namespace godel
