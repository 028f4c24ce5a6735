#ifndef KAVC_LETTERS_HPP
#define KAVC_LETTERS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace kavc {

// The letter l<index> of a finite alphabet {l0, ..., l(n-1)}.
struct Letter {
  std::uint32_t index = 0;

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using LetterWord = std::vector<Letter>;

// The contiguous factor l_begin ... l_(end-1) of the canonical word
// l0 ... l(n-1). Every factor with begin == end is the empty word.
struct Factor {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool empty() const noexcept { return begin == end; }
  friend bool operator==(const Factor&, const Factor&) = default;
};

// l0 l1 ... l(n-1)
LetterWord canonical_word(std::size_t n);
LetterWord factor_word(Factor f);

LetterWord concat(const LetterWord& a, const LetterWord& b);

// "l0 l1"; the empty word prints as "1".
std::string print(const LetterWord& w);

}  // namespace kavc

#endif  // KAVC_LETTERS_HPP
