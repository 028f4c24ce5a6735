#include "kavc/letters.hpp"

namespace kavc {

LetterWord canonical_word(std::size_t n) {
  LetterWord w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.push_back(Letter{static_cast<std::uint32_t>(i)});
  return w;
}

LetterWord factor_word(Factor f) {
  LetterWord w;
  for (std::size_t i = f.begin; i < f.end; ++i) w.push_back(Letter{static_cast<std::uint32_t>(i)});
  return w;
}

LetterWord concat(const LetterWord& a, const LetterWord& b) {
  LetterWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string print(const LetterWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) out += ' ';
    out += 'l';
    out += std::to_string(w[k].index);
  }
  return out;
}

}  // namespace kavc
