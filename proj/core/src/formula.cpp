#include "godel/formula.hpp"

#include <functional>
#include <unordered_set>

namespace godel {

bool is_reserved_name(const std::string& name) {
  return name == "T" || name == "F" || name == "D" || name == "forall" ||
         name == "exists";
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  if (node_->name != other.node_->name) return false;
  if (node_->args != other.node_->args) return false;
  if (node_->kids.size() != other.node_->kids.size()) return false;
  for (std::size_t i = 0; i < node_->kids.size(); ++i) {
    if (node_->kids[i] != other.node_->kids[i]) return false;
  }
  return true;
}

Formula Formula::make(Kind kind, std::string name, std::vector<std::string> args,
                      std::vector<Formula> kids) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->args = std::move(args);
  node->kids = std::move(kids);
  return Formula(std::move(node));
}

Formula atom(std::string name, std::vector<std::string> args) {
  if (name.empty()) throw semantic_error("atom name must be nonempty");
  if (is_reserved_name(name))
    throw semantic_error("'" + name + "' is reserved and cannot name an atom");
  return Formula::make(Kind::Atom, std::move(name), std::move(args), {});
}

Formula top() {
  static const Formula t = Formula::make(Kind::Top, {}, {}, {});
  return t;
}

Formula bot() {
  static const Formula f = Formula::make(Kind::Bot, {}, {}, {});
  return f;
}

Formula conj(Formula a, Formula b) {
  return Formula::make(Kind::And, {}, {}, {std::move(a), std::move(b)});
}

Formula disj(Formula a, Formula b) {
  return Formula::make(Kind::Or, {}, {}, {std::move(a), std::move(b)});
}

Formula imp(Formula a, Formula b) {
  return Formula::make(Kind::Imp, {}, {}, {std::move(a), std::move(b)});
}

Formula delta(Formula a) {
  return Formula::make(Kind::Delta, {}, {}, {std::move(a)});
}

Formula forall(std::string var, Formula body) {
  return Formula::make(Kind::Forall, std::move(var), {}, {std::move(body)});
}

Formula exists(std::string var, Formula body) {
  return Formula::make(Kind::Exists, std::move(var), {}, {std::move(body)});
}

Formula neg(Formula a) { return imp(std::move(a), bot()); }

Formula lequiv(Formula a, Formula b) { return conj(imp(a, b), imp(b, a)); }

Formula strict_less(Formula a, Formula b) { return imp(imp(b, a), b); }

bool is_neg(const Formula& f) {
  return f.kind() == Kind::Imp && f.right().kind() == Kind::Bot;
}

bool is_lequiv(const Formula& f) {
  if (f.kind() != Kind::And) return false;
  const Formula& l = f.left();
  const Formula& r = f.right();
  return l.kind() == Kind::Imp && r.kind() == Kind::Imp &&
         l.left() == r.right() && l.right() == r.left();
}

bool is_strict_less(const Formula& f) {
  // (B -> A) -> B
  return f.kind() == Kind::Imp && f.left().kind() == Kind::Imp &&
         f.left().left() == f.right();
}

namespace {

void walk(const Formula& f, const std::function<void(const Formula&)>& fn) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Top:
    case Kind::Bot:
      break;
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      walk(f.left(), fn);
      walk(f.right(), fn);
      break;
    case Kind::Delta:
    case Kind::Forall:
    case Kind::Exists:
      walk(f.child(), fn);
      break;
  }
  fn(f);
}

// Structural key; unique because the encoding is prefix-unambiguous.
std::string structural_key(const Formula& f) {
  std::string out;
  std::function<void(const Formula&)> rec = [&](const Formula& g) {
    switch (g.kind()) {
      case Kind::Atom:
        out += 'a';
        out += g.name();
        for (const auto& arg : g.args()) {
          out += ',';
          out += arg;
        }
        out += ';';
        break;
      case Kind::Top: out += "T;"; break;
      case Kind::Bot: out += "F;"; break;
      case Kind::And: out += "&("; rec(g.left()); rec(g.right()); out += ')'; break;
      case Kind::Or: out += "|("; rec(g.left()); rec(g.right()); out += ')'; break;
      case Kind::Imp: out += ">("; rec(g.left()); rec(g.right()); out += ')'; break;
      case Kind::Delta: out += "D("; rec(g.child()); out += ')'; break;
      case Kind::Forall:
        out += "A" + g.name() + ";(";
        rec(g.child());
        out += ')';
        break;
      case Kind::Exists:
        out += "E" + g.name() + ";(";
        rec(g.child());
        out += ')';
        break;
    }
  };
  rec(f);
  return out;
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<std::string> seen;
  walk(f, [&](const Formula& g) {
    if (seen.insert(structural_key(g)).second) out.push_back(g);
  });
  return out;
}

std::set<std::string> free_atoms(const Formula& f) {
  std::set<std::string> out;
  walk(f, [&](const Formula& g) {
    if (g.kind() == Kind::Atom) out.insert(g.name());
  });
  return out;
}

bool contains_delta(const Formula& f) {
  bool found = false;
  walk(f, [&](const Formula& g) { found |= g.kind() == Kind::Delta; });
  return found;
}

bool contains_quantifier(const Formula& f) {
  bool found = false;
  walk(f, [&](const Formula& g) {
    found |= g.kind() == Kind::Forall || g.kind() == Kind::Exists;
  });
  return found;
}

bool is_propositional(const Formula& f) {
  bool fo = false;
  walk(f, [&](const Formula& g) {
    fo |= g.kind() == Kind::Forall || g.kind() == Kind::Exists;
    fo |= g.kind() == Kind::Atom && !g.args().empty();
  });
  return !fo;
}

void require_propositional(const Formula& f) {
  if (!is_propositional(f))
    throw semantic_error("operation requires a propositional formula");
}

namespace {

void collect_free_vars(const Formula& f, std::set<std::string>& bound,
                       std::vector<std::string>& order,
                       std::set<std::string>& seen) {
  switch (f.kind()) {
    case Kind::Atom:
      for (const auto& v : f.args()) {
        if (!bound.count(v) && seen.insert(v).second) order.push_back(v);
      }
      break;
    case Kind::Top:
    case Kind::Bot:
      break;
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      collect_free_vars(f.left(), bound, order, seen);
      collect_free_vars(f.right(), bound, order, seen);
      break;
    case Kind::Delta:
      collect_free_vars(f.child(), bound, order, seen);
      break;
    case Kind::Forall:
    case Kind::Exists: {
      bool was_bound = bound.count(f.name()) > 0;
      bound.insert(f.name());
      collect_free_vars(f.child(), bound, order, seen);
      if (!was_bound) bound.erase(f.name());
      break;
    }
  }
}

}  // namespace

std::vector<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, seen;
  std::vector<std::string> order;
  collect_free_vars(f, bound, order, seen);
  return order;
}

std::map<std::string, int> predicate_arities(const Formula& f) {
  std::map<std::string, int> out;
  walk(f, [&](const Formula& g) {
    if (g.kind() != Kind::Atom) return;
    int arity = static_cast<int>(g.args().size());
    auto [it, inserted] = out.emplace(g.name(), arity);
    if (!inserted && it->second != arity)
      throw semantic_error("predicate '" + g.name() +
                           "' used with two different arities");
  });
  return out;
}

Formula substitute_atoms(const Formula& f,
                         const std::map<std::string, Formula>& subst) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = subst.find(f.name());
      return it == subst.end() ? f : it->second;
    }
    case Kind::Top:
    case Kind::Bot:
      return f;
    case Kind::And:
      return conj(substitute_atoms(f.left(), subst),
                  substitute_atoms(f.right(), subst));
    case Kind::Or:
      return disj(substitute_atoms(f.left(), subst),
                  substitute_atoms(f.right(), subst));
    case Kind::Imp:
      return imp(substitute_atoms(f.left(), subst),
                 substitute_atoms(f.right(), subst));
    case Kind::Delta:
      return delta(substitute_atoms(f.child(), subst));
    case Kind::Forall:
      return forall(f.name(), substitute_atoms(f.child(), subst));
    case Kind::Exists:
      return exists(f.name(), substitute_atoms(f.child(), subst));
  }
  throw semantic_error("unreachable formula kind");
}

}  // namespace godel
