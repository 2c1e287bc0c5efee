#include "parser.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"

namespace sahl {

namespace {

enum class Tok {
  End, Lower, Upper, True, False, All, Exists,
  Not, Box, Dia, And, Or, Implies, Iff, LParen, RParen, Comma, Dot, Eq, Neq,
};

const char* spelling(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Lower: return "identifier";
    case Tok::Upper: return "predicate";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::All: return "'all'";
    case Tok::Exists: return "'exists'";
    case Tok::Not: return "'~'";
    case Tok::Box: return "'[]'";
    case Tok::Dia: return "'<>'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Eq: return "'='";
    case Tok::Neq: return "'!='";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const std::size_t l = line_, c = col_;
      if (i_ >= s_.size()) {
        out.push_back({Tok::End, "", l, c});
        return out;
      }
      const char ch = s_[i_];
      if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::string word;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) word += take();
        Tok k = std::isupper(static_cast<unsigned char>(ch)) ? Tok::Upper : Tok::Lower;
        if (word == "true") k = Tok::True;
        else if (word == "false") k = Tok::False;
        else if (word == "all") k = Tok::All;
        else if (word == "exists") k = Tok::Exists;
        out.push_back({k, std::move(word), l, c});
        continue;
      }
      auto sym = [&](std::string_view lit, Tok k) {
        if (s_.substr(i_, lit.size()) != lit) return false;
        for (std::size_t j = 0; j < lit.size(); ++j) take();
        out.push_back({k, std::string(lit), l, c});
        return true;
      };
      if (sym("<->", Tok::Iff) || sym("->", Tok::Implies) || sym("<>", Tok::Dia) || sym("[]", Tok::Box) ||
          sym("!=", Tok::Neq) || sym("~", Tok::Not) || sym("&", Tok::And) || sym("|", Tok::Or) ||
          sym("(", Tok::LParen) || sym(")", Tok::RParen) || sym(",", Tok::Comma) || sym(".", Tok::Dot) ||
          sym("=", Tok::Eq))
        continue;
      throw ParseError(l, c, {"a token"}, "'" + std::string(1, ch) + "'");
    }
  }

 private:
  char take() {
    const char ch = s_[i_++];
    if (ch == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return ch;
  }
  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) take();
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class ParserBase {
 protected:
  explicit ParserBase(std::string_view text) : toks_(Lexer(text).run()) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  bool accept(Tok k) {
    if (!at(k)) return false;
    next();
    return true;
  }

  [[noreturn]] void fail(std::vector<Tok> expected) const {
    std::vector<std::string> names;
    for (Tok t : expected) names.emplace_back(spelling(t));
    const auto& t = peek();
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.col, std::move(names), found);
  }

  Token expect(Tok k) {
    if (!at(k)) fail({k});
    return next();
  }

  void expect_end() {
    if (!at(Tok::End)) fail({Tok::End});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

class ModalParser : ParserBase {
 public:
  explicit ModalParser(std::string_view text) : ParserBase(text) {}

  ModalFormula run() {
    auto f = iff();
    expect_end();
    return f;
  }

 private:
  ModalFormula iff() {
    auto f = implies();
    while (accept(Tok::Iff)) f = ModalFormula::iff(f, implies());
    return f;
  }
  ModalFormula implies() {
    auto f = disj();
    if (accept(Tok::Implies)) return ModalFormula::implies(f, implies());
    return f;
  }
  ModalFormula disj() {
    auto f = conj();
    while (accept(Tok::Or)) f = ModalFormula::disj(f, conj());
    return f;
  }
  ModalFormula conj() {
    auto f = unary();
    while (accept(Tok::And)) f = ModalFormula::conj(f, unary());
    return f;
  }
  ModalFormula unary() {
    if (accept(Tok::Not)) return ModalFormula::negation(unary());
    if (accept(Tok::Box)) return ModalFormula::box(unary());
    if (accept(Tok::Dia)) return ModalFormula::dia(unary());
    if (accept(Tok::True)) return ModalFormula::top();
    if (accept(Tok::False)) return ModalFormula::bottom();
    if (at(Tok::Lower) || at(Tok::All) || at(Tok::Exists)) {
      auto t = next();
      if (!is_valid_letter_name(t.text))
        throw ParseError(t.line, t.col, {"proposition letter"}, "'" + t.text + "'");
      return ModalFormula::prop(t.text);
    }
    if (accept(Tok::LParen)) {
      auto f = iff();
      expect(Tok::RParen);
      return f;
    }
    fail({Tok::Not, Tok::Box, Tok::Dia, Tok::True, Tok::False, Tok::Lower, Tok::LParen});
  }
};

class FoParser : ParserBase {
 public:
  explicit FoParser(std::string_view text) : ParserBase(text) {}

  FoFormula run() {
    auto f = iff();
    expect_end();
    return f;
  }

 private:
  FoFormula iff() {
    auto f = implies();
    while (accept(Tok::Iff)) f = FoFormula::iff(f, implies());
    return f;
  }
  FoFormula implies() {
    auto f = disj();
    if (accept(Tok::Implies)) return FoFormula::implies(f, implies());
    return f;
  }
  FoFormula disj() {
    std::vector<FoFormula> parts{conj()};
    while (accept(Tok::Or)) parts.push_back(conj());
    return FoFormula::disj(std::move(parts));
  }
  FoFormula conj() {
    std::vector<FoFormula> parts{unary()};
    while (accept(Tok::And)) parts.push_back(unary());
    return FoFormula::conj(std::move(parts));
  }
  std::string variable() {
    if (!at(Tok::Lower)) fail({Tok::Lower});
    return next().text;
  }
  FoFormula unary() {
    if (accept(Tok::Not)) return FoFormula::negation(unary());
    if (at(Tok::All) || at(Tok::Exists)) {
      const bool univ = next().kind == Tok::All;
      std::vector<std::string> vars{variable()};
      while (at(Tok::Lower)) vars.push_back(next().text);
      expect(Tok::Dot);
      auto body = iff();
      return univ ? FoFormula::forall(vars, std::move(body)) : FoFormula::exists(vars, std::move(body));
    }
    if (accept(Tok::True)) return FoFormula::truth();
    if (accept(Tok::False)) return FoFormula::falsity();
    if (accept(Tok::LParen)) {
      auto f = iff();
      expect(Tok::RParen);
      return f;
    }
    if (at(Tok::Upper)) {
      auto sym = next().text;
      expect(Tok::LParen);
      auto a = variable();
      if (sym == "R" && accept(Tok::Comma)) {
        auto b = variable();
        expect(Tok::RParen);
        return FoFormula::rel(std::move(a), std::move(b));
      }
      expect(Tok::RParen);
      return FoFormula::pred(std::move(sym), std::move(a));
    }
    if (at(Tok::Lower)) {
      auto a = next().text;
      if (accept(Tok::Eq)) return FoFormula::eq(a, variable());
      if (accept(Tok::Neq)) return FoFormula::negation(FoFormula::eq(a, variable()));
      fail({Tok::Eq, Tok::Neq});
    }
    fail({Tok::Not, Tok::All, Tok::Exists, Tok::True, Tok::False, Tok::LParen, Tok::Upper, Tok::Lower});
  }
};

}  // namespace

ModalFormula parse_modal(std::string_view text) { return ModalParser(text).run(); }

FoFormula parse_fo(std::string_view text) { return FoParser(text).run(); }

}  // namespace sahl
