#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "godel/errors.hpp"

namespace godel {

enum class Kind {
  Atom,    // propositional variable, or predicate applied to variables
  Top,
  Bot,
  And,
  Or,
  Imp,
  Delta,   // absoluteness operator
  Forall,
  Exists,
};

/// Immutable formula. Negation, <-> and < are not constructors; they are
/// parsed and built as sugar over Imp/And:
///   ~A      = A -> F
///   A <-> B = (A -> B) & (B -> A)
///   A < B   = (B -> A) -> B
/// Values share subtrees freely; all operations are pure.
class Formula {
public:
  Kind kind() const { return node_->kind; }

  /// Atom: predicate name. Forall/Exists: bound variable.
  const std::string& name() const { return node_->name; }
  /// Atom argument variables (empty for propositional atoms).
  const std::vector<std::string>& args() const { return node_->args; }

  const Formula& left() const { return node_->kids[0]; }
  const Formula& right() const { return node_->kids[1]; }
  /// Delta / Forall / Exists body.
  const Formula& child() const { return node_->kids[0]; }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  friend Formula atom(std::string name, std::vector<std::string> args);
  friend Formula top();
  friend Formula bot();
  friend Formula conj(Formula a, Formula b);
  friend Formula disj(Formula a, Formula b);
  friend Formula imp(Formula a, Formula b);
  friend Formula delta(Formula a);
  friend Formula forall(std::string var, Formula body);
  friend Formula exists(std::string var, Formula body);

private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<std::string> args;
    std::vector<Formula> kids;
  };

  static Formula make(Kind kind, std::string name, std::vector<std::string> args,
                      std::vector<Formula> kids);

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Reserved tokens that can never be atom or predicate names.
bool is_reserved_name(const std::string& name);

Formula atom(std::string name, std::vector<std::string> args = {});
Formula top();
Formula bot();
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula delta(Formula a);
Formula forall(std::string var, Formula body);
Formula exists(std::string var, Formula body);

// Sugar builders.
Formula neg(Formula a);
Formula lequiv(Formula a, Formula b);
Formula strict_less(Formula a, Formula b);

// Sugar pattern matches, used by the printer and by tests.
bool is_neg(const Formula& f);
bool is_lequiv(const Formula& f);
bool is_strict_less(const Formula& f);

/// Post-order subformula list, duplicates removed, f itself last.
std::vector<Formula> subformulas(const Formula& f);

/// Names of all atoms occurring in f (constants excluded).
std::set<std::string> free_atoms(const Formula& f);

bool contains_delta(const Formula& f);
bool contains_quantifier(const Formula& f);

/// True when f uses no quantifiers and no predicate arguments.
bool is_propositional(const Formula& f);
/// Throws semantic_error when f is not propositional.
void require_propositional(const Formula& f);

/// Individual variables of f not bound by a quantifier, in first-occurrence
/// order.
std::vector<std::string> free_vars(const Formula& f);

/// Predicate name -> arity. Throws semantic_error when one name is used
/// with two different arities.
std::map<std::string, int> predicate_arities(const Formula& f);

/// Replaces every atom whose name is a key of subst by the mapped formula.
/// Substitution is plain and capture is allowed on purpose: context
/// instantiation wants holes under quantifiers to be captured.
Formula substitute_atoms(const Formula& f,
                         const std::map<std::string, Formula>& subst);

}  // namespace godel
