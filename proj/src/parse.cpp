// Recursive-descent parser and precedence-aware printer for terms.
//
//   term   := union
//   union  := concat ( "+" concat )*        left-associative
//   concat := star ( "." star )*            left-associative
//   star   := atom "*"*
//   atom   := "0" | "1" | IDENT | "~" IDENT | "(" term ")"

#include <cctype>

#include "kavc/term.hpp"

namespace kavc {

namespace {

enum class Tok { ident, zero, one, plus, dot, star, tilde, lparen, rparen, leq, eq, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::ident: return "identifier";
    case Tok::zero: return "'0'";
    case Tok::one: return "'1'";
    case Tok::plus: return "'+'";
    case Tok::dot: return "'.'";
    case Tok::star: return "'*'";
    case Tok::tilde: return "'~'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::leq: return "'<='";
    case Tok::eq: return "'='";
    case Tok::end: return "end of input";
  }
  return "token";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t tl = line;
    const std::size_t tc = column;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::ident, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      const std::string_view lexeme = text.substr(i, j - i);
      if (lexeme == "0") {
        out.push_back({Tok::zero, "0", tl, tc});
      } else if (lexeme == "1") {
        out.push_back({Tok::one, "1", tl, tc});
      } else {
        throw ParseError("unexpected '" + std::string(lexeme) +
                             "' (only 0 and 1 are numeric constants; identifiers "
                             "cannot start with a digit)",
                         tl, tc);
      }
      advance(j - i);
      continue;
    }
    switch (c) {
      case '+': out.push_back({Tok::plus, "+", tl, tc}); break;
      case '.': out.push_back({Tok::dot, ".", tl, tc}); break;
      case '*': out.push_back({Tok::star, "*", tl, tc}); break;
      case '~': out.push_back({Tok::tilde, "~", tl, tc}); break;
      case '(': out.push_back({Tok::lparen, "(", tl, tc}); break;
      case ')': out.push_back({Tok::rparen, ")", tl, tc}); break;
      case '=': out.push_back({Tok::eq, "=", tl, tc}); break;
      case '<':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          out.push_back({Tok::leq, "<=", tl, tc});
          advance(2);
          continue;
        }
        throw ParseError("expected '<='", tl, tc);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
    }
    advance(1);
  }
  out.push_back({Tok::end, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Term term() { return unite(); }

  const Token& peek() const { return tokens_[pos_]; }

  Token expect(Tok kind) {
    const Token& tok = peek();
    if (tok.kind != kind) {
      throw ParseError(std::string("expected ") + describe(kind) + ", found " + describe(tok.kind),
                       tok.line, tok.column);
    }
    return tokens_[pos_++];
  }

 private:
  Term unite() {
    Term out = concat();
    while (peek().kind == Tok::plus) {
      ++pos_;
      out = Term::unite(std::move(out), concat());
    }
    return out;
  }

  Term concat() {
    Term out = starred();
    while (peek().kind == Tok::dot) {
      ++pos_;
      out = Term::concat(std::move(out), starred());
    }
    return out;
  }

  Term starred() {
    Term out = atom();
    while (peek().kind == Tok::star) {
      ++pos_;
      out = Term::star(std::move(out));
    }
    return out;
  }

  Term atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::zero:
        ++pos_;
        return Term::zero();
      case Tok::one:
        ++pos_;
        return Term::one();
      case Tok::ident:
        ++pos_;
        return Term::var(tok.text);
      case Tok::tilde: {
        ++pos_;
        const Token& operand = peek();
        if (operand.kind != Tok::ident) {
          throw ParseError(std::string("complement applies only to a variable, found ") +
                               describe(operand.kind),
                           operand.line, operand.column);
        }
        ++pos_;
        return Term::cvar(operand.text);
      }
      case Tok::lparen: {
        ++pos_;
        Term inner = term();
        expect(Tok::rparen);
        return inner;
      }
      default:
        throw ParseError(std::string("expected a term, found ") + describe(tok.kind), tok.line,
                         tok.column);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Binding strength: union 0, composition 1, star 2, atoms 3.
int precedence(const Term& t) {
  switch (t.kind()) {
    case TermKind::unite: return 0;
    case TermKind::concat: return 1;
    case TermKind::star: return 2;
    default: return 3;
  }
}

void print_into(const Term& t, int min_prec, std::string& out) {
  const bool parens = precedence(t) < min_prec;
  if (parens) out += '(';
  switch (t.kind()) {
    case TermKind::var:
      out += t.name();
      break;
    case TermKind::cvar:
      out += '~';
      out += t.name();
      break;
    case TermKind::one:
      out += '1';
      break;
    case TermKind::zero:
      out += '0';
      break;
    case TermKind::unite:
      print_into(t.left(), 0, out);
      out += " + ";
      print_into(t.right(), 1, out);
      break;
    case TermKind::concat:
      print_into(t.left(), 1, out);
      out += " . ";
      print_into(t.right(), 2, out);
      break;
    case TermKind::star:
      print_into(t.body(), 2, out);
      out += '*';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Term parse_term(std::string_view text) {
  Parser parser(text);
  Term t = parser.term();
  parser.expect(Tok::end);
  return t;
}

Query parse_query(std::string_view text) {
  Parser parser(text);
  Term lhs = parser.term();
  const Token& rel = parser.peek();
  Relation relation;
  if (rel.kind == Tok::leq) {
    relation = Relation::leq;
  } else if (rel.kind == Tok::eq) {
    relation = Relation::eq;
  } else {
    throw ParseError(std::string("expected '<=' or '=', found ") + describe(rel.kind), rel.line,
                     rel.column);
  }
  parser.expect(rel.kind);
  Term rhs = parser.term();
  parser.expect(Tok::end);
  return Query{std::move(lhs), std::move(rhs), relation};
}

std::string print(const Term& t) {
  std::string out;
  print_into(t, 0, out);
  return out;
}

std::string print(const Literal& lit) {
  return lit.negative() ? "~" + lit.var.name : lit.var.name;
}

std::string print(const LitWord& w) { return print(to_term(w)); }

std::string print(const Query& q) {
  return print(q.lhs) + (q.relation == Relation::leq ? " <= " : " = ") + print(q.rhs);
}

}  // namespace kavc
