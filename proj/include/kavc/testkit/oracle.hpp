// Slow, direct reference semantics used to check the real implementation.
// Nothing here shares code with the factor tables or the automata.

#ifndef KAVC_TESTKIT_ORACLE_HPP
#define KAVC_TESTKIT_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "kavc/classical.hpp"
#include "kavc/term.hpp"
#include "kavc/valuation.hpp"

namespace kavc::testkit {

// Materialises the interpretation of a term restricted to the words of
// length <= max_len over an alphabet of n letters (at most 64 such words).
class NaiveLanguage {
 public:
  NaiveLanguage(std::size_t alphabet_size, std::size_t max_len);

  const std::vector<LetterWord>& universe() const noexcept { return universe_; }
  // Bit k of the result is set iff universe()[k] is in the interpretation.
  std::uint64_t evaluate(const Term& t, const Valuation& v) const;
  // Throws std::out_of_range if w is not in the universe.
  std::size_t index_of(const LetterWord& w) const;

 private:
  std::uint64_t leaf(const Valuation& v, const Variable& x) const;

  std::size_t alphabet_size_;
  std::size_t max_len_;
  std::vector<LetterWord> universe_;
  std::map<LetterWord, std::size_t> index_;
  std::vector<std::vector<int>> concat_;  // index of a.b, or -1 if too long
};

// w in the interpretation of t, by trying every way of splitting w.
bool split_member(const LetterWord& w, const Term& t, const Valuation& v);

// Membership of a word of variable names in the standard language of t,
// where ~x denotes every word other than the one-letter word x.
bool lang_member(const SymbolWord& w, const Term& t);

// Whether i = k0 < k1 < ... < km = j exists with step(k_p, k_(p+1)) for all
// p, or i == j.
bool chain_exists(std::size_t i, std::size_t j,
                  const std::function<bool(std::size_t, std::size_t)>& step);

// Every assignment of the formula's variables satisfies it.
bool dnf_valid(const Dnf& phi);

}  // namespace kavc::testkit

#endif  // KAVC_TESTKIT_ORACLE_HPP
