#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "godel/formula.hpp"
#include "godel/semantics.hpp"

namespace godel {

/// Finite single-sorted constant-domain model: domain {0, ..., domain_size-1}
/// with a complete level table per predicate. Quantifiers evaluate as
/// min/max over the domain, so every model is witnessed by construction.
/// `restricted` keeps every table entry strictly below top.
struct FiniteModel {
  int domain_size = 1;
  TruthScale scale{2};
  bool restricted = false;
  std::map<std::string, std::map<std::vector<int>, int>> tables;
};

/// Evaluates f under m with the given variable bindings. Throws on unbound
/// variables and missing table entries.
int eval_fo(const Formula& f, const FiniteModel& m,
            const std::map<std::string, int>& env = {});

struct SearchBounds {
  int max_domain = 2;
  int max_levels = 3;
  long long budget = 10'000'000;  // models per (domain, scale) pair
};

/// Outcome of a bounded refutation search. Finding nothing never claims
/// validity, only that no countermodel exists within the bounds searched.
struct BoundedVerdict {
  bool countermodel_found = false;
  std::optional<FiniteModel> countermodel;
  SearchBounds bounds;
  Mode mode = Mode::standard;
};

/// Searches every model with domain size <= max_domain and scale
/// <= max_levels for one where the closed formula f evaluates below top.
/// Domains grow outermost, scales next, tables lexicographically, so the
/// reported countermodel is deterministic. Throws budget_exceeded before
/// enumerating any (domain, scale) slice larger than the budget.
BoundedVerdict is_valid_fo_bounded(const Formula& f, SearchBounds bounds,
                                   Mode mode = Mode::standard);

/// Definitional normal form: one fresh predicate per subformula (constants
/// excepted), each pinned by a Delta-guarded equivalence to the subformula
/// with its children already replaced. Fresh names are F_<i> with i the
/// post-order index; Delta subformulas get F4_<i>.
struct StructuralForm {
  Formula formula;
  std::vector<std::pair<std::string, Formula>> definitions;  // name -> subformula
  std::string root;
};

StructuralForm structural_form(const Formula& f);

/// Delta-free companion of structural_form: each Delta subformula's
/// definition becomes a crispness conjunct (~F | F) and a lower bound
/// (F -> body), and the consequent picks up one escape disjunct
/// exists (~F & body) per Delta subformula. Validity over witnessed models
/// agrees with the input's.
Formula translate_delta_free(const Formula& f);

enum class EquivPremise { plain, with_delta };

/// Builds  forall xs P(A <-> B) -> (C[A] <-> C[B])  where P is nothing or
/// Delta according to the premise kind, C[X] substitutes X for the hole
/// atom in the context (capture intended), and searches it for bounded
/// countermodels.
BoundedVerdict equivalence_theorem_check(const Formula& a, const Formula& b,
                                         const Formula& context,
                                         EquivPremise premise,
                                         SearchBounds bounds,
                                         const std::string& hole = "_");

}  // namespace godel
