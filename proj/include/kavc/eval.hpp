// Membership of letter-words in the interpretation of a term under a
// valuation, by dynamic programming over the factors of a fixed word.

#ifndef KAVC_EVAL_HPP
#define KAVC_EVAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "kavc/letters.hpp"
#include "kavc/term.hpp"
#include "kavc/valuation.hpp"

namespace kavc {

// Index of a subterm inside a CompiledTerm.
using Handle = std::uint32_t;

// One or more terms flattened into a DAG with structurally equal subterms
// shared. Children always precede their parents, and variables are numbered
// ("slots") in name order.
class CompiledTerm {
 public:
  struct Node {
    TermKind kind;
    std::uint32_t slot;  // var and cvar only
    Handle left;         // unite, concat, star
    Handle right;        // unite, concat
  };

  explicit CompiledTerm(const Term& t) : CompiledTerm(std::vector<Term>{t}) {}
  explicit CompiledTerm(const std::vector<Term>& roots);

  std::size_t size() const noexcept { return nodes_.size(); }
  const Node& node(Handle h) const { return nodes_.at(h); }
  Handle root(std::size_t k = 0) const { return roots_.at(k); }
  const std::vector<Handle>& roots() const noexcept { return roots_; }

  const std::vector<Variable>& slots() const noexcept { return slots_; }
  std::optional<std::uint32_t> slot_of(const Variable& x) const;

  // Handle of a subterm of one of the roots, if present.
  std::optional<Handle> handle_of(const Term& sub) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Handle> roots_;
  std::vector<Variable> slots_;
};

// Entry (h, i, j) records whether the factor i..j of an n-letter word lies in
// the interpretation of subterm h. Immutable once built.
class MembershipTable {
 public:
  MembershipTable(std::shared_ptr<const CompiledTerm> term, std::size_t n,
                  std::vector<std::uint64_t> rows);

  std::size_t word_length() const noexcept { return n_; }
  const CompiledTerm& term() const noexcept { return *term_; }

  bool at(Handle h, Factor f) const;
  // Entry for the first root.
  bool contains(Factor f) const { return at(term_->root(), f); }

 private:
  std::shared_ptr<const CompiledTerm> term_;
  std::size_t n_;
  std::vector<std::uint64_t> rows_;
};

// Longest word (and largest alphabet for eval_factors) the factor tables cover.
inline constexpr std::size_t kMaxFactorWord = 63;

// Table over the factors of the canonical word l0 ... l(n-1), n the
// valuation's alphabet size. Throws std::length_error if n > kMaxFactorWord.
MembershipTable eval_factors(const Term& t, const Valuation& v);

// Table over the factors of an arbitrary word w.
MembershipTable eval_word(const Term& t, const Valuation& v, const LetterWord& w);

// w in the interpretation of t under v. Throws std::out_of_range for letters
// outside the alphabet.
bool member(const LetterWord& w, const Term& t, const Valuation& v);

// The valuation over n = parts.size() fresh letters that gives each variable x
// every factor l_i ... l_(j-1) whose corresponding concatenation
// parts[i] ... parts[j-1] lies in v(x).
Valuation words_to_letters(const Valuation& v, const std::vector<LetterWord>& parts);

}  // namespace kavc

#endif  // KAVC_EVAL_HPP
