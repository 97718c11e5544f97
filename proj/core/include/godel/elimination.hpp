#pragma once

#include <set>
#include <utility>
#include <vector>

#include "godel/chain.hpp"
#include "godel/formula.hpp"
#include "godel/semantics.hpp"

namespace godel {

/// One surviving disjunct of a chain normal form. residue is T when the
/// bare chain survives; after normalization that is the only possibility,
/// atom residues only occur in the raw residue_table below.
struct CnfDisjunct {
  Chain chain;
  Formula residue;
};

struct ChainNormalForm {
  std::vector<CnfDisjunct> disjuncts;
  Mode mode = Mode::standard;
};

/// The syntactic evaluation of f under every enumerated chain over its
/// atoms (all chains in standard mode, restricted chains in restricted
/// mode), before any deletion or merging.
std::vector<std::pair<Chain, Formula>> residue_table(const Formula& f, Mode mode);

/// Chain normal form of f over its free atoms. Residue F deletes the
/// disjunct. In standard mode (Delta-free f only) an atom residue replaces
/// the chain by the smaller chain that merges the atom's block and
/// everything above it into T's class, or deletes the disjunct when the
/// atom sits in F's class. In restricted mode atom residues are deleted;
/// that step preserves which interpretations designate the formula, not its
/// value everywhere below 1. Duplicates introduced by merging are removed
/// and disjuncts come out in canonical chain order.
ChainNormalForm chain_normal_form(const Formula& f, Mode mode);

/// Disjunction of the disjunct formulas, left-folded in canonical order;
/// F when empty.
Formula cnf_formula(const ChainNormalForm& cnf);

/// Optional post-pass: drops disjuncts whose chain formulas are equivalent
/// (oracle-checked in the normal form's mode) to an earlier disjunct.
ChainNormalForm optimize_cnf(const ChainNormalForm& cnf);

/// Delta-free disjunction of restricted chains standing for f. Guarantees,
/// both oracle-checkable: the result is designated exactly where f is
/// (are_designated_equivalent), and it never gains Delta back. Value
/// equivalence below 1 additionally holds on Delta-free inputs' surviving
/// chains but cannot hold for every Delta formula: Delta's jump at the top
/// level has no Delta-free counterpart. An empty disjunction collapses
/// to F.
Formula eliminate_delta(const Formula& f);

/// (~D(x1) & ... & ~D(xn)) -> f over the atoms of f in lexicographic
/// order; f itself when it has no atoms. Restricted validity of f equals
/// standard validity of the guard.
Formula guard_formula(const Formula& f);

/// f | x1 | ... | xn, validity-equivalent to guard_formula(f) in standard
/// semantics.
Formula validity_companion(const Formula& f);

/// Substitutes T for the named atoms and decides restricted validity of the
/// result. Rejects formulas containing Delta: replacement by T preserves
/// restricted validity only on the Delta-free fragment.
Verdict replace_top_stability_check(const Formula& f,
                                    const std::set<std::string>& atoms_to_top);

}  // namespace godel
