// Syntax of Kleene algebra terms with variable complements.
//
//   t ::= x | ~x | 1 | 0 | t + t | t . t | t*
//
// Complement only ever applies to a variable. Terms are immutable trees with
// shared structure; copying a Term is cheap.

#ifndef KAVC_TERM_HPP
#define KAVC_TERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kavc {

// Malformed term, query, or DNF text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An operation was handed input outside its domain (e.g. a starred term where
// a star-free one is required).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Variable {
  std::string name;

  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;
};

enum class Polarity : std::uint8_t { positive, negative };

// A letter of the doubled alphabet {x, ~x}. Orders by variable name first,
// then positive before negative.
struct Literal {
  Variable var;
  Polarity polarity = Polarity::positive;

  bool negative() const noexcept { return polarity == Polarity::negative; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
  friend bool operator==(const Literal&, const Literal&) = default;
};

// A word over literals; the empty word is the identity.
using LitWord = std::vector<Literal>;

enum class TermKind : std::uint8_t { var, cvar, one, zero, unite, concat, star };

class Term {
 public:
  static Term var(std::string name);
  static Term cvar(std::string name);
  static Term literal(const Literal& lit);
  static Term one();
  static Term zero();
  static Term unite(Term lhs, Term rhs);
  static Term concat(Term lhs, Term rhs);
  static Term star(Term body);

  TermKind kind() const noexcept;
  // Variable name; only meaningful for var and cvar.
  const std::string& name() const noexcept;
  // Children: left/right for unite and concat, body for star.
  const Term& left() const;
  const Term& right() const;
  const Term& body() const;

  // Node count.
  std::size_t size() const noexcept;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Canonical text; parse(print(t)) == t structurally.
std::string print(const Term& t);
std::string print(const LitWord& w);
std::string print(const Literal& lit);

Term parse_term(std::string_view text);

enum class Relation : std::uint8_t { leq, eq };

// "<term> <= <term>" or "<term> = <term>".
struct Query {
  Term lhs;
  Term rhs;
  Relation relation = Relation::leq;
};

Query parse_query(std::string_view text);
std::string print(const Query& q);

std::set<Variable> variables(const Term& t);
std::set<Variable> variables(const LitWord& w);

bool is_star_free(const Term& t);
bool is_composition_free(const Term& t);

// n-fold composition of the literals; the empty word embeds as 1.
Term to_term(const LitWord& w);
// Inverse of to_term for terms built only from literals, 1 and composition.
std::optional<LitWord> as_literal_word(const Term& t);

// First name of the form <prefix><k>, k = 0, 1, ..., not in `avoid`.
Variable fresh_variable(const std::set<Variable>& avoid, std::string_view prefix);

// x + ~x for a deterministic fresh x (names _t0, _t1, ...).
Term top_expansion(const std::set<Variable>& avoid);

// ---------------------------------------------------------------------------
// Language over the literal alphabet: every leaf x or ~x is an opaque letter.

// Requires a star-free term.
std::set<LitWord> lang_vprime_finite(const Term& t);

// Length of the longest word in lang_vprime_finite(t), or nullopt when that
// language is empty. Requires a star-free term.
std::optional<std::size_t> max_word_length(const Term& t);

// Lazily yields the words of length <= max_len of the literal-alphabet
// language, shortlex order, each word once. Single consumer.
class LangEnumerator {
 public:
  LangEnumerator(const Term& t, std::size_t max_len);
  ~LangEnumerator();
  LangEnumerator(LangEnumerator&&) noexcept;
  LangEnumerator& operator=(LangEnumerator&&) noexcept;

  std::optional<LitWord> next();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

std::vector<LitWord> lang_vprime_enumerate(const Term& t, std::size_t max_len);

// ---------------------------------------------------------------------------
// Propositional formulas in disjunctive normal form.

struct DnfLiteral {
  std::string var;
  bool negated = false;

  friend bool operator==(const DnfLiteral&, const DnfLiteral&) = default;
};

using DnfClause = std::vector<DnfLiteral>;

struct Dnf {
  std::vector<DnfClause> clauses;
};

// One clause per line, literals joined by '&', '!' marks a negative literal.
// A line reading "1" is the empty conjunction. Blank lines and lines starting
// with '#' are skipped.
Dnf parse_dnf(std::string_view text);
std::string print(const Dnf& phi);

std::set<std::string> dnf_variables(const Dnf& phi);

// Conjunction becomes composition, disjunction becomes union (both nested to
// the right), x becomes x and !x becomes ~x. Empty conjunction is 1, empty
// disjunction is 0.
Term dnf_to_term(const Dnf& phi);

}  // namespace kavc

#endif  // KAVC_TERM_HPP
