#ifndef KAVC_VALUATION_HPP
#define KAVC_VALUATION_HPP

#include <map>
#include <set>
#include <string>

#include "kavc/langspec.hpp"
#include "kavc/term.hpp"

namespace kavc {

// Assigns each variable a language over the letters l0 ... l(n-1). A variable
// with no entry denotes the empty language.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {}
  // Throws std::out_of_range if a spec mentions a letter >= alphabet_size.
  Valuation(std::size_t alphabet_size, std::map<Variable, LangSpec> assignment);

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  const std::map<Variable, LangSpec>& assignment() const noexcept { return assignment_; }

  void assign(const Variable& x, LangSpec spec);
  // nullptr when x is unassigned.
  const LangSpec* find(const Variable& x) const;
  // w in v(x).
  bool contains(const Variable& x, const LetterWord& w) const;

  // Same valuation with an explicit empty entry for every listed variable
  // that has none.
  Valuation completed(const std::set<Variable>& vars) const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::size_t alphabet_size_ = 0;
  std::map<Variable, LangSpec> assignment_;
};

// "x -> {1, l0}, y -> l0 (l0 + l1)*"; "(empty)" when nothing is assigned.
std::string print(const Valuation& v);

}  // namespace kavc

#endif  // KAVC_VALUATION_HPP
