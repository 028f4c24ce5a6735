// Explicit valuations telling distinct literal words apart, in general and for
// words over a single variable with one- and two-letter alphabets.

#ifndef KAVC_SEPARATION_HPP
#define KAVC_SEPARATION_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "kavc/decision.hpp"

namespace kavc {

// Which inclusion of an equation w1 = w2 a witness breaks.
enum class Direction : std::uint8_t { lhs_not_in_rhs, rhs_not_in_lhs };

std::string to_string(Direction d);

// How a separator was obtained when the textbook construction fell short.
enum class Fallback : std::uint8_t {
  none,
  // The word-separation constraint table asked for the empty word both
  // inside and outside some variable; the separator came from the
  // word-inclusion search instead.
  constraint_conflict,
  // The two-letter witness built from the first differing run lay in both
  // words; a different position for the b was used.
  witness_rejected,
};

std::string to_string(Fallback f);

struct Separation {
  Valuation valuation;
  LetterWord witness;  // in v(w1) \ v(w2) or v(w2) \ v(w1), per direction
  Direction direction = Direction::lhs_not_in_rhs;
  Fallback fallback = Fallback::none;
};

// The constraint table of word separation cannot be met.
class ConstraintConflict : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The table valuation for distinct words w (the shorter, w1 on ties) and u,
// over |w| letters: l_i in v(w_i), and for i < |u|, i <= j <= |w|, the factor
// l_i ... l_(j-1) in v(u_i) iff u_i = w_i and j = i + 1. Unconstrained
// memberships are left out. Throws ConstraintConflict when the requirements
// contradict each other, which happens when two positions disagree on the
// empty word (x . x against x . x . ~x, for one).
Valuation table_valuation(const LitWord& w1, const LitWord& w2);

// nullopt iff w1 == w2. Otherwise a valuation and a witness in one word and
// not the other. The table valuation is used when it exists, with witness
// l0 ... l(|w|-1); on a conflict the complete word-inclusion search over
// |w| letters (then |u| letters) supplies the separator. Propagates
// SearchLimitExceeded from that search.
std::optional<Separation> separate_words(const LitWord& w1, const LitWord& w2);

struct LiteralCounts {
  std::size_t pos = 0;  // occurrences of z
  std::size_t neg = 0;  // occurrences of ~z

  friend bool operator==(const LiteralCounts&, const LiteralCounts&) = default;
};

// z^c0 ~z z^c1 ~z ... ~z z^cn
struct RunDecomposition {
  std::vector<std::size_t> counts;

  friend bool operator==(const RunDecomposition&, const RunDecomposition&) = default;
};

// The following throw PreconditionError when the words mention two or more
// variables between them.
LiteralCounts literal_counts(const LitWord& w);
RunDecomposition run_decomposition(const LitWord& w);

struct OneVariableVerdict {
  Verdict verdict;  // for the equation w1 = w2
  std::optional<Direction> direction;  // refuted only
};

// Equality under all valuations into a one-letter alphabet: holds iff both
// literal counts agree.
OneVariableVerdict lang1_decide(const LitWord& w1, const LitWord& w2);

// nullopt iff w1 == w2. Equal-count pairs are separated over {l0, l1} with
// v(z) the words starting and ending in l0; unequal counts fall back to the
// one-letter separator. The b of the witness goes after as many a's as
// precede the ~z closing the first differing run. When that count also
// precedes some ~z of the other word, a count that separates the two is
// used, or failing that the dual valuation with the roles of z and ~z
// exchanged.
std::optional<Separation> lang2_separate(const LitWord& w1, const LitWord& w2);

}  // namespace kavc

#endif  // KAVC_SEPARATION_HPP
