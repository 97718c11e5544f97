#pragma once

#include <string>
#include <vector>

#include "godel/formula.hpp"
#include "godel/semantics.hpp"

namespace godel {

/// A chain is a syntactic total preorder of variables between F and T:
/// blocks are the equivalence classes, listed bottom to top, with strict
/// order between consecutive blocks. bot_merged puts the first block into
/// F's class, top_merged puts the last block into T's class. A chain is
/// *restricted* iff top_merged is false. Canonical form sorts the variables
/// inside each block; F is never in T's class.
struct Chain {
  std::vector<std::vector<std::string>> blocks;
  bool bot_merged = false;
  bool top_merged = false;

  bool restricted() const { return !top_merged; }
  std::vector<std::string> variables() const;
  bool operator==(const Chain&) const = default;
};

/// Canonicalizes (sorts block members) and validates: blocks nonempty and
/// disjoint, no merge flags on the empty chain, and a single block may not
/// merge with both F and T.
Chain make_chain(std::vector<std::vector<std::string>> blocks, bool bot_merged,
                 bool top_merged);

/// All canonical chains over vars, deterministically ordered: by number of
/// blocks, then by block structure, then bottom-merged < unmerged <
/// both-merged < top-merged.
std::vector<Chain> enumerate_chains(const std::vector<std::string>& vars);

/// The chains with no variable in T's class.
std::vector<Chain> enumerate_restricted_chains(const std::vector<std::string>& vars);

/// Conjunction of the pairwise constraints along F, the variables, T:
/// X <= Y inside a block encoded as (X -> Y) & (Y -> X), X < Y between
/// blocks encoded as (Y -> X) -> Y. The final X < T conjunct is emitted
/// even though its encoding holds everywhere, so the formula spells the
/// whole abbreviation out.
Formula chain_formula(const Chain& c);

/// True iff position(x) <= position(y) in the chain order. x and y are
/// atoms of the chain or the constants T / F. Throws when a symbol is
/// neither.
bool entails(const Chain& c, const Formula& x, const Formula& y);

enum class DeltaRules { none, restricted };

/// Innermost-first reduction of f to a single atom or constant P with
/// C & f <-> C & P: And keeps the entailed-smaller argument, Or the
/// entailed-larger, Imp gives T when antecedent <= consequent in the chain
/// and the consequent otherwise. Under DeltaRules::restricted, D(F) -> F,
/// D(X) -> F, D(T) -> T. Throws on Delta with DeltaRules::none and on
/// D(X) against a non-restricted chain.
Formula syntactic_eval(const Chain& c, const Formula& f, DeltaRules rules);

/// The unique chain whose blocks and merge flags match the order type of
/// the assignment.
Chain chain_of(const Interpretation& interp);

/// Text form, e.g. "B <= a < b < T" (B = F's class bound, T = top).
std::string chain_text(const Chain& c);

}  // namespace godel
