// Decision procedures for inclusions t1 <= t2 valid under every language
// valuation. Each complete procedure searches a finite family of valuations
// over the factors of a short canonical word; every refutation it reports is
// re-checked with the evaluator before it is returned.

#ifndef KAVC_DECISION_HPP
#define KAVC_DECISION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "kavc/eval.hpp"
#include "kavc/search.hpp"
#include "kavc/term.hpp"
#include "kavc/valuation.hpp"

namespace kavc {

enum class Outcome : std::uint8_t { valid, refuted, unknown };

enum class Procedure : std::uint8_t {
  identity,
  composition_free,
  star_free,
  word,
  bounded,
  syntactic,
  separation,
  lang1,
  lang2,
};

std::string to_string(Outcome o);
std::string to_string(Procedure p);

struct Counterexample {
  Valuation valuation;
  LetterWord witness;
  std::optional<LitWord> lhs_word;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct Verdict {
  Outcome outcome = Outcome::unknown;
  Procedure procedure = Procedure::bounded;
  std::optional<Counterexample> counterexample;  // refuted only
  std::optional<std::size_t> bound;              // bounded search only

  bool valid() const noexcept { return outcome == Outcome::valid; }
  bool refuted() const noexcept { return outcome == Outcome::refuted; }
  bool unknown() const noexcept { return outcome == Outcome::unknown; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct DecisionOptions {
  // Longest left-hand-side literal word the bounded refuter tries.
  std::size_t max_len = 8;
  Execution execution = Execution::parallel;
  // Searches with fewer candidates than this run serially.
  std::uint64_t parallel_threshold = std::uint64_t{1} << 12;
  // A complete procedure needing more free membership bits than this gives up
  // with SearchLimitExceeded; 24 bits is a few seconds of search.
  unsigned max_search_bits = 24;
  // Fix the membership bits of variables occurring with a single polarity on
  // the right-hand side of a word inclusion to their extremal values. Turning
  // this off gives the plain exhaustive search kept as a reference.
  bool prune = true;
};

class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// witness in v(lhs) \ v(rhs) and, when present, witness in v(lhs_word).
bool verify_counterexample(const Term& lhs, const Term& rhs, const Counterexample& cex);

// 1 <= t. Valuations range over subsets of {1} for every variable of t.
Verdict decide_identity_inclusion(const Term& t, const DecisionOptions& opts = {});

// u <= t for a literal word u of length n, by valuations over the factors of
// l0 ... l(n-1). Empty u is the identity case.
Verdict decide_word_inclusion(const LitWord& u, const Term& t, const DecisionOptions& opts = {});

// t1 <= t2 for composition-free t1, by valuations into subsets of {1, l0}.
// Throws PreconditionError otherwise.
Verdict decide_composition_free_inclusion(const Term& t1, const Term& t2,
                                          const DecisionOptions& opts = {});

// (x + ~x) <= t for a fresh x.
Verdict decide_universality(const Term& t, const DecisionOptions& opts = {});

// t1 <= t2 for star-free t1, one word inclusion per literal word of t1.
// Throws PreconditionError otherwise.
Verdict decide_star_free_inclusion(const Term& t1, const Term& t2,
                                   const DecisionOptions& opts = {});

// Tries every literal word of t1 up to max_len. Sound for refutation; Valid
// only when t1 is star-free and all its words fit within the bound.
Verdict refute_bounded(const Term& t1, const Term& t2, std::size_t max_len,
                       const DecisionOptions& opts = {});

// Inclusion lhs <= rhs routed to the strongest applicable procedure.
Verdict decide_inclusion(const Term& lhs, const Term& rhs, const DecisionOptions& opts = {});

struct QueryVerdict {
  Verdict forward;                 // lhs <= rhs
  std::optional<Verdict> backward;  // rhs <= lhs, equations only

  // Refuted if either direction is, else Unknown if either is, else Valid.
  Outcome outcome() const;
};

QueryVerdict decide(const Query& q, const DecisionOptions& opts = {});

}  // namespace kavc

#endif  // KAVC_DECISION_HPP
