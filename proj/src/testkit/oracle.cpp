#include "kavc/testkit/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace kavc::testkit {

namespace {

bool leaf_contains(const Valuation& v, const Variable& x, const LetterWord& w) {
  const LangSpec* spec = v.find(x);
  if (spec == nullptr) return false;
  if (const auto* finite = std::get_if<FiniteWords>(spec)) return finite->words.contains(w);
  return std::get<LetterRegex>(*spec).matches(w);
}

LetterWord slice(const LetterWord& w, std::size_t i, std::size_t j) {
  return LetterWord(w.begin() + static_cast<std::ptrdiff_t>(i),
                    w.begin() + static_cast<std::ptrdiff_t>(j));
}

// Plain recursion over (subterm, i, j) with no memo table.
bool split_in(const LetterWord& w, std::size_t i, std::size_t j, const Term& t,
              const Valuation& v) {
  switch (t.kind()) {
    case TermKind::var: return leaf_contains(v, Variable{t.name()}, slice(w, i, j));
    case TermKind::cvar: return !leaf_contains(v, Variable{t.name()}, slice(w, i, j));
    case TermKind::one: return i == j;
    case TermKind::zero: return false;
    case TermKind::unite: return split_in(w, i, j, t.left(), v) || split_in(w, i, j, t.right(), v);
    case TermKind::concat:
      for (std::size_t k = i; k <= j; ++k) {
        if (split_in(w, i, k, t.left(), v) && split_in(w, k, j, t.right(), v)) return true;
      }
      return false;
    case TermKind::star:
      if (i == j) return true;
      // A non-empty first iteration, then the rest.
      for (std::size_t k = i + 1; k <= j; ++k) {
        if (split_in(w, i, k, t.body(), v) && split_in(w, k, j, t, v)) return true;
      }
      return false;
  }
  return false;
}

bool lang_in(const SymbolWord& w, std::size_t i, std::size_t j, const Term& t) {
  switch (t.kind()) {
    case TermKind::var: return j == i + 1 && w[i] == t.name();
    case TermKind::cvar: return !(j == i + 1 && w[i] == t.name());
    case TermKind::one: return i == j;
    case TermKind::zero: return false;
    case TermKind::unite: return lang_in(w, i, j, t.left()) || lang_in(w, i, j, t.right());
    case TermKind::concat:
      for (std::size_t k = i; k <= j; ++k) {
        if (lang_in(w, i, k, t.left()) && lang_in(w, k, j, t.right())) return true;
      }
      return false;
    case TermKind::star:
      if (i == j) return true;
      for (std::size_t k = i + 1; k <= j; ++k) {
        if (lang_in(w, i, k, t.body()) && lang_in(w, k, j, t)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace

NaiveLanguage::NaiveLanguage(std::size_t alphabet_size, std::size_t max_len)
    : alphabet_size_(alphabet_size), max_len_(max_len) {
  std::vector<LetterWord> layer{LetterWord{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<LetterWord> next;
    for (const auto& w : layer) {
      universe_.push_back(w);
      if (universe_.size() > 64) throw std::length_error("naive universe exceeds 64 words");
      for (std::uint32_t a = 0; a < alphabet_size; ++a) {
        LetterWord longer = w;
        longer.push_back(Letter{a});
        next.push_back(std::move(longer));
      }
    }
    layer = std::move(next);
    if (alphabet_size == 0) break;
  }
  for (std::size_t k = 0; k < universe_.size(); ++k) index_.emplace(universe_[k], k);
  concat_.assign(universe_.size(), std::vector<int>(universe_.size(), -1));
  for (std::size_t a = 0; a < universe_.size(); ++a) {
    for (std::size_t b = 0; b < universe_.size(); ++b) {
      const auto it = index_.find(concat(universe_[a], universe_[b]));
      if (it != index_.end()) concat_[a][b] = static_cast<int>(it->second);
    }
  }
}

std::size_t NaiveLanguage::index_of(const LetterWord& w) const {
  const auto it = index_.find(w);
  if (it == index_.end()) throw std::out_of_range("word outside the naive universe");
  return it->second;
}

std::uint64_t NaiveLanguage::leaf(const Valuation& v, const Variable& x) const {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < universe_.size(); ++k) {
    if (leaf_contains(v, x, universe_[k])) out |= std::uint64_t{1} << k;
  }
  return out;
}

std::uint64_t NaiveLanguage::evaluate(const Term& t, const Valuation& v) const {
  const std::uint64_t all =
      universe_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe_.size()) - 1;
  auto product = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    for (std::size_t p = 0; p < universe_.size(); ++p) {
      if (!((a >> p) & 1U)) continue;
      for (std::size_t q = 0; q < universe_.size(); ++q) {
        if (((b >> q) & 1U) && concat_[p][q] >= 0) out |= std::uint64_t{1} << concat_[p][q];
      }
    }
    return out;
  };
  switch (t.kind()) {
    case TermKind::var: return leaf(v, Variable{t.name()});
    case TermKind::cvar: return all & ~leaf(v, Variable{t.name()});
    case TermKind::one: return std::uint64_t{1} << index_of({});
    case TermKind::zero: return 0;
    case TermKind::unite: return evaluate(t.left(), v) | evaluate(t.right(), v);
    case TermKind::concat: return product(evaluate(t.left(), v), evaluate(t.right(), v));
    case TermKind::star: {
      const std::uint64_t body = evaluate(t.body(), v);
      std::uint64_t acc = std::uint64_t{1} << index_of({});
      for (;;) {
        const std::uint64_t next = acc | product(acc, body);
        if (next == acc) return acc;
        acc = next;
      }
    }
  }
  return 0;
}

bool split_member(const LetterWord& w, const Term& t, const Valuation& v) {
  for (const Letter l : w) {
    if (l.index >= v.alphabet_size()) throw std::out_of_range("letter outside alphabet");
  }
  return split_in(w, 0, w.size(), t, v);
}

bool lang_member(const SymbolWord& w, const Term& t) { return lang_in(w, 0, w.size(), t); }

bool chain_exists(std::size_t i, std::size_t j,
                  const std::function<bool(std::size_t, std::size_t)>& step) {
  if (i == j) return true;
  for (std::size_t k = i + 1; k <= j; ++k) {
    if (step(i, k) && chain_exists(k, j, step)) return true;
  }
  return false;
}

bool dnf_valid(const Dnf& phi) {
  const auto names = dnf_variables(phi);
  const std::vector<std::string> vars(names.begin(), names.end());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars.size()); ++mask) {
    auto value = [&](const std::string& x) {
      const auto k = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), x) - vars.begin());
      return ((mask >> k) & 1U) != 0;
    };
    bool satisfied = false;
    for (const auto& clause : phi.clauses) {
      bool all = true;
      for (const auto& lit : clause) all = all && (value(lit.var) != lit.negated);
      if (all) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

}  // namespace kavc::testkit
