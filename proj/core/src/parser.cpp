#include <cctype>
#include <sstream>

#include "lablogic/errors.hpp"
#include "lablogic/formula.hpp"

namespace lablogic {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += ", ";
    out += expected[i];
  }
  return out;
}

std::string parse_error_message(std::size_t offset, const std::vector<std::string>& expected,
                                const std::string& found) {
  std::ostringstream os;
  os << "syntax error at offset " << offset << ": expected one of {" << join_expected(expected) << "}, found "
     << (found.empty() ? "end of input" : "\"" + found + "\"");
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error(parse_error_message(offset, expected, found)), offset_(offset), expected_(std::move(expected)) {}

namespace {

enum class Tok { End, Atom, Not, And, Or, Imp, LParen, RParen, Bad };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, start, ""};

    auto rest = src_.substr(pos_);
    auto take = [&](Tok k, std::size_t len) {
      pos_ += len;
      return Token{k, start, std::string(rest.substr(0, len))};
    };
    char c = rest.front();
    if (c == '~') return take(Tok::Not, 1);
    if (c == '&') return take(Tok::And, 1);
    if (c == '|') return take(Tok::Or, 1);
    if (c == '(') return take(Tok::LParen, 1);
    if (c == ')') return take(Tok::RParen, 1);
    if (rest.starts_with("->")) return take(Tok::Imp, 2);
    // UTF-8 spellings of the connectives.
    if (rest.starts_with("¬")) return take(Tok::Not, 2);
    if (rest.starts_with("∧")) return take(Tok::And, 3);
    if (rest.starts_with("∨")) return take(Tok::Or, 3);
    if (rest.starts_with("→")) return take(Tok::Imp, 3);
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t len = 1;
      while (len < rest.size() &&
             (std::isalnum(static_cast<unsigned char>(rest[len])) || rest[len] == '_')) {
        ++len;
      }
      return take(Tok::Atom, len);
    }
    return take(Tok::Bad, 1);
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Formula parse_all() {
    Formula f = parse_imp();
    if (cur_.kind != Tok::End) fail({"->", "|", "&", "end of input"});
    return f;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    throw ParseError(cur_.offset, std::move(expected), cur_.text);
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (cur_.kind == Tok::Imp) {
      advance();
      return imp(std::move(lhs), parse_imp());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (cur_.kind == Tok::Or) {
      advance();
      lhs = disj(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_neg();
    while (cur_.kind == Tok::And) {
      advance();
      lhs = conj(std::move(lhs), parse_neg());
    }
    return lhs;
  }

  Formula parse_neg() {
    switch (cur_.kind) {
      case Tok::Not:
        advance();
        return neg(parse_neg());
      case Tok::Atom: {
        Formula a = atom(cur_.text);
        advance();
        return a;
      }
      case Tok::LParen: {
        advance();
        Formula inner = parse_imp();
        if (cur_.kind != Tok::RParen) fail({")", "->", "|", "&"});
        advance();
        return inner;
      }
      default:
        fail({"~", "(", "atom"});
    }
  }

  Lexer lexer_;
  Token cur_{Tok::End, 0, ""};
};

// Binding strength; higher binds tighter.
int precedence(Connective c) {
  switch (c) {
    case Connective::Imp:
      return 1;
    case Connective::Or:
      return 2;
    case Connective::And:
      return 3;
    case Connective::Not:
      return 4;
    case Connective::Atom:
      return 5;
  }
  return 0;
}

void render_into(const Formula& f, std::string& out);

void render_child(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(f, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  const int own = precedence(f.kind());
  switch (f.kind()) {
    case Connective::Atom:
      out += f.name();
      return;
    case Connective::Not: {
      out += '~';
      render_child(f.operand(), precedence(f.operand().kind()) < own, out);
      return;
    }
    case Connective::And:
    case Connective::Or: {
      // Left-associative: a same-level right operand needs parentheses.
      render_child(f.left(), precedence(f.left().kind()) < own, out);
      out += f.is_conjunction() ? " & " : " | ";
      render_child(f.right(), precedence(f.right().kind()) <= own, out);
      return;
    }
    case Connective::Imp: {
      // Right-associative.
      render_child(f.left(), precedence(f.left().kind()) <= own, out);
      out += " -> ";
      render_child(f.right(), precedence(f.right().kind()) < own, out);
      return;
    }
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

}  // namespace lablogic
