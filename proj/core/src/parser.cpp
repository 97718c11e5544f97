#include "godel/parser.hpp"

#include <cctype>
#include <sstream>

namespace godel {

namespace {

enum class Tok {
  Ident,
  TopConst,
  BotConst,
  DeltaKw,
  ForallKw,
  ExistsKw,
  Arrow,    // ->
  Iff,      // <->
  Less,     // <
  AndOp,    // &
  OrOp,     // |
  NotOp,    // ~
  LParen,
  RParen,
  Dot,
  Comma,
  End,
};

struct Token {
  Tok tok;
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&] { return i + 1; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", col()});
      i += 2;
      continue;
    }
    if (c == '<') {
      if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
        out.push_back({Tok::Iff, "<->", col()});
        i += 3;
      } else {
        out.push_back({Tok::Less, "<", col()});
        ++i;
      }
      continue;
    }
    switch (c) {
      case '&': out.push_back({Tok::AndOp, "&", col()}); ++i; continue;
      case '|': out.push_back({Tok::OrOp, "|", col()}); ++i; continue;
      case '~': out.push_back({Tok::NotOp, "~", col()}); ++i; continue;
      case '(': out.push_back({Tok::LParen, "(", col()}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", col()}); ++i; continue;
      case '.': out.push_back({Tok::Dot, ".", col()}); ++i; continue;
      case ',': out.push_back({Tok::Comma, ",", col()}); ++i; continue;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_'))
        ++i;
      std::string word = text.substr(start, i - start);
      Tok tok = Tok::Ident;
      if (word == "T") tok = Tok::TopConst;
      else if (word == "F") tok = Tok::BotConst;
      else if (word == "D") tok = Tok::DeltaKw;
      else if (word == "forall") tok = Tok::ForallKw;
      else if (word == "exists") tok = Tok::ExistsKw;
      out.push_back({tok, std::move(word), start + 1});
      continue;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", col());
  }
  out.push_back({Tok::End, "", text.size() + 1});
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> tokens, Syntax syntax)
      : tokens_(std::move(tokens)), syntax_(syntax) {}

  Formula run() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw parse_error(msg, at.column);
  }

  Token expect(Tok tok, const std::string& what) {
    if (peek().tok != tok)
      fail("expected " + what + ", found '" + describe(peek()) + "'", peek());
    return take();
  }

  static std::string describe(const Token& t) {
    return t.tok == Tok::End ? "end of input" : t.text;
  }

  Formula formula() {
    if (peek().tok == Tok::ForallKw || peek().tok == Tok::ExistsKw) {
      Token q = take();
      if (syntax_ == Syntax::propositional)
        fail("quantifiers require first-order mode", q);
      Token var = expect(Tok::Ident, "a variable name");
      expect(Tok::Dot, "'.'");
      Formula body = formula();
      return q.tok == Tok::ForallKw ? forall(var.text, std::move(body))
                                    : exists(var.text, std::move(body));
    }
    return implication();
  }

  Formula implication() {
    Formula lhs = disjunction();
    switch (peek().tok) {
      case Tok::Arrow:
        take();
        return imp(std::move(lhs), implication());
      case Tok::Iff:
        take();
        return lequiv(std::move(lhs), disjunction());
      case Tok::Less:
        take();
        return strict_less(std::move(lhs), disjunction());
      default:
        return lhs;
    }
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().tok == Tok::OrOp) {
      take();
      f = disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().tok == Tok::AndOp) {
      take();
      f = conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    switch (peek().tok) {
      case Tok::NotOp:
        take();
        return neg(unary());
      case Tok::DeltaKw: {
        take();
        expect(Tok::LParen, "'(' after D");
        Formula body = formula();
        expect(Tok::RParen, "')'");
        return delta(std::move(body));
      }
      case Tok::LParen: {
        take();
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::TopConst:
        take();
        return top();
      case Tok::BotConst:
        take();
        return bot();
      case Tok::Ident:
        return atom_or_predicate();
      case Tok::ForallKw:
      case Tok::ExistsKw:
        fail("quantifiers bind weakest; parenthesize the quantified formula",
             peek());
      default:
        fail("expected a formula, found '" + describe(peek()) + "'", peek());
    }
  }

  Formula atom_or_predicate() {
    Token name = take();
    if (peek().tok != Tok::LParen) return atom(name.text);
    if (syntax_ == Syntax::propositional)
      fail("predicate arguments require first-order mode", peek());
    take();  // (
    std::vector<std::string> args;
    args.push_back(expect(Tok::Ident, "an argument variable").text);
    while (peek().tok == Tok::Comma) {
      take();
      args.push_back(expect(Tok::Ident, "an argument variable").text);
    }
    expect(Tok::RParen, "')'");
    return atom(name.text, std::move(args));
  }

  std::vector<Token> tokens_;
  Syntax syntax_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(const std::string& text, Syntax syntax) {
  return Parser(lex(text), syntax).run();
}

std::vector<std::pair<int, Formula>> parse_lines(const std::string& text,
                                                 Syntax syntax) {
  std::vector<std::pair<int, Formula>> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    out.emplace_back(lineno, parse(line, syntax));
  }
  return out;
}

}  // namespace godel
