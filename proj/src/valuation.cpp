#include "kavc/valuation.hpp"

#include <stdexcept>

namespace kavc {

Valuation::Valuation(std::size_t alphabet_size, std::map<Variable, LangSpec> assignment)
    : alphabet_size_(alphabet_size) {
  for (auto& [x, spec] : assignment) assign(x, std::move(spec));
}

void Valuation::assign(const Variable& x, LangSpec spec) {
  if (const auto top = max_letter(spec); top && *top >= alphabet_size_) {
    throw std::out_of_range("valuation of " + x.name + " mentions l" + std::to_string(*top) +
                            " but the alphabet has " + std::to_string(alphabet_size_) +
                            " letters");
  }
  assignment_.insert_or_assign(x, std::move(spec));
}

const LangSpec* Valuation::find(const Variable& x) const {
  const auto it = assignment_.find(x);
  return it == assignment_.end() ? nullptr : &it->second;
}

bool Valuation::contains(const Variable& x, const LetterWord& w) const {
  const LangSpec* spec = find(x);
  if (spec == nullptr) {
    for (const Letter l : w) {
      if (l.index >= alphabet_size_) throw std::out_of_range("letter outside alphabet");
    }
    return false;
  }
  return word_in_spec(w, *spec, alphabet_size_);
}

Valuation Valuation::completed(const std::set<Variable>& vars) const {
  Valuation out = *this;
  for (const auto& x : vars) out.assignment_.try_emplace(x, FiniteWords{});
  return out;
}

std::string print(const Valuation& v) {
  if (v.assignment().empty()) return "(empty)";
  std::string out;
  for (const auto& [x, spec] : v.assignment()) {
    if (!out.empty()) out += ", ";
    out += x.name + " -> " + print(spec);
  }
  return out;
}

}  // namespace kavc
