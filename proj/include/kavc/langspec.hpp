// Declarative languages over a finite letter alphabet: the values a valuation
// assigns to variables.

#ifndef KAVC_LANGSPEC_HPP
#define KAVC_LANGSPEC_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "kavc/letters.hpp"

namespace kavc {

// Complement-free regular expression over letters:
//
//   alt  := cat ( "+" cat )*
//   cat  := rep ( "."? rep )*        juxtaposition composes
//   rep  := atom "*"*
//   atom := "l" DIGITS | "0" | "1" | "(" alt ")"
//
// Membership walks a derivative automaton built once, at construction;
// after that the object is immutable and safe to share between threads.
class LetterRegex {
 public:
  static LetterRegex parse(std::string_view text);

  bool matches(const LetterWord& w) const;
  // Largest letter index mentioned, if any.
  std::optional<std::uint32_t> max_letter() const;
  // Number of states of the derivative automaton.
  std::size_t automaton_size() const;

  std::string to_string() const;

  friend bool operator==(const LetterRegex& a, const LetterRegex& b) {
    return a.to_string() == b.to_string();
  }

 private:
  struct Impl;
  explicit LetterRegex(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct FiniteWords {
  std::set<LetterWord> words;

  friend bool operator==(const FiniteWords&, const FiniteWords&) = default;
};

using LangSpec = std::variant<FiniteWords, LetterRegex>;

// Throws std::out_of_range if w uses a letter >= alphabet_size.
bool word_in_spec(const LetterWord& w, const LangSpec& spec, std::size_t alphabet_size);

// Largest letter index the spec mentions, if any.
std::optional<std::uint32_t> max_letter(const LangSpec& spec);

std::string print(const LangSpec& spec);

}  // namespace kavc

#endif  // KAVC_LANGSPEC_HPP
