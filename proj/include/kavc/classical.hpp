// Terms read as ordinary regular expressions, compiled to automata and
// compared by subset construction.

#ifndef KAVC_CLASSICAL_HPP
#define KAVC_CLASSICAL_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kavc/term.hpp"

namespace kavc {

// Stands for every variable outside a declared set.
inline const std::string kOtherVariable = "\xE2\x8A\xA0";  // U+22A0

using SymbolWord = std::vector<std::string>;

// "x ~y"; symbols separated by spaces, the empty word as "1".
std::string print(const SymbolWord& w);

// Nondeterministic automaton with epsilon moves over named symbols.
class Nfa {
 public:
  using State = std::uint32_t;
  static constexpr int kEpsilon = -1;

  struct Edge {
    int symbol;  // index into alphabet(), or kEpsilon
    State to;
  };

  // Symbols are deduplicated and sorted.
  explicit Nfa(std::vector<std::string> alphabet);

  State add_state(bool accepting = false);
  void set_accepting(State s, bool accepting = true);
  void set_initial(State s);
  // Throws std::invalid_argument for an unknown symbol or state.
  void add_edge(State from, const std::string& symbol, State to);
  void add_epsilon(State from, State to);

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return edges_.size(); }
  State initial() const noexcept { return initial_; }
  bool accepting(State s) const { return accepting_.at(s); }
  const std::vector<Edge>& edges(State s) const { return edges_.at(s); }
  // Index of a symbol, or -1 when it is not in the alphabet.
  int symbol_index(const std::string& symbol) const;

  // Symbols outside the alphabet are never read.
  bool accepts(const SymbolWord& w) const;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<bool> accepting_;
  State initial_ = 0;
};

// Leaves x and ~x are two unrelated symbols, printed "x" and "~x".
Nfa nfa_over_vprime(const Term& t);

// Symbols are the declared variables plus kOtherVariable; ~x accepts every
// word except the one-symbol word x. Throws PreconditionError if t mentions
// an undeclared variable.
Nfa nfa_over_v(const Term& t, const std::set<Variable>& declared);

struct Comparison {
  bool holds = false;
  // A shortest word witnessing failure; the first in symbol order among
  // those of that length.
  std::optional<SymbolWord> separator;
};

// Automata over different alphabets are compared over their union.
Comparison lang_incl(const Nfa& a, const Nfa& b);
Comparison lang_equiv(const Nfa& a, const Nfa& b);

// Equality under all language valuations of terms without complements,
// which coincides with equality of their regular languages. Throws
// PreconditionError if either term has a complemented variable.
bool ka_lang_decide(const Term& t1, const Term& t2);

}  // namespace kavc

#endif  // KAVC_CLASSICAL_HPP
