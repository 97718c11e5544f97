#include "godel/printer.hpp"

namespace godel {

namespace {

// Binding strength: quantifier 0 < (->, <->, <) 1 < | 2 < & 3 < unary 4.
constexpr int kQuant = 0;
constexpr int kImp = 1;
constexpr int kOr = 2;
constexpr int kAnd = 3;
constexpr int kUnary = 4;
constexpr int kPrimary = 5;

struct Printer {
  bool sugar;

  int level_of(const Formula& f) const {
    switch (f.kind()) {
      case Kind::Atom:
      case Kind::Top:
      case Kind::Bot:
        return kPrimary;
      case Kind::Delta:
        return kUnary;
      case Kind::And:
        return sugar && is_lequiv(f) ? kImp : kAnd;
      case Kind::Or:
        return kOr;
      case Kind::Imp:
        return sugar && is_neg(f) ? kUnary : kImp;
      case Kind::Forall:
      case Kind::Exists:
        return kQuant;
    }
    return kPrimary;
  }

  void print(const Formula& f, int min_level, std::string& out) const {
    bool parens = level_of(f) < min_level;
    if (parens) out += '(';
    print_bare(f, out);
    if (parens) out += ')';
  }

  void print_bare(const Formula& f, std::string& out) const {
    switch (f.kind()) {
      case Kind::Atom:
        out += f.name();
        if (!f.args().empty()) {
          out += '(';
          for (std::size_t i = 0; i < f.args().size(); ++i) {
            if (i) out += ", ";
            out += f.args()[i];
          }
          out += ')';
        }
        return;
      case Kind::Top: out += 'T'; return;
      case Kind::Bot: out += 'F'; return;
      case Kind::Delta:
        out += "D(";
        print(f.child(), kQuant, out);
        out += ')';
        return;
      case Kind::And:
        if (sugar && is_lequiv(f)) {
          print(f.left().left(), kOr, out);
          out += " <-> ";
          print(f.left().right(), kOr, out);
          return;
        }
        print(f.left(), kAnd, out);
        out += " & ";
        print(f.right(), kUnary, out);
        return;
      case Kind::Or:
        print(f.left(), kOr, out);
        out += " | ";
        print(f.right(), kAnd, out);
        return;
      case Kind::Imp:
        if (sugar && is_neg(f)) {
          out += '~';
          print(f.left(), kUnary, out);
          return;
        }
        if (sugar && is_strict_less(f)) {
          // (B -> A) -> B prints as A < B
          print(f.left().right(), kOr, out);
          out += " < ";
          print(f.right(), kOr, out);
          return;
        }
        print(f.left(), kOr, out);
        out += " -> ";
        print(f.right(), kImp, out);
        return;
      case Kind::Forall:
      case Kind::Exists:
        out += f.kind() == Kind::Forall ? "forall " : "exists ";
        out += f.name();
        out += ". ";
        print(f.child(), kQuant, out);
        return;
    }
  }
};

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  Printer{true}.print(f, kQuant, out);
  return out;
}

std::string render_raw(const Formula& f) {
  std::string out;
  Printer{false}.print(f, kQuant, out);
  return out;
}

}  // namespace godel
