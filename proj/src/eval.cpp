#include "kavc/eval.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "factor_kernel.hpp"

namespace kavc {

namespace {

using detail::Row;

using NodeKey = std::tuple<TermKind, std::uint32_t, Handle, Handle>;
constexpr Handle kNoChild = ~Handle{0};

NodeKey key_of(TermKind kind, std::uint32_t slot, Handle left, Handle right) {
  return {kind, slot, left, right};
}

class Builder {
 public:
  Builder(std::vector<CompiledTerm::Node>& nodes, std::map<NodeKey, Handle>& index,
          const std::vector<Variable>& slots)
      : nodes_(nodes), index_(index), slots_(slots) {}

  Handle add(const Term& t) {
    switch (t.kind()) {
      case TermKind::var:
      case TermKind::cvar:
        return intern(t.kind(), slot(t.name()), kNoChild, kNoChild);
      case TermKind::one:
      case TermKind::zero:
        return intern(t.kind(), 0, kNoChild, kNoChild);
      case TermKind::unite:
      case TermKind::concat: {
        const Handle l = add(t.left());
        const Handle r = add(t.right());
        return intern(t.kind(), 0, l, r);
      }
      case TermKind::star:
        return intern(TermKind::star, 0, add(t.body()), kNoChild);
    }
    throw std::logic_error("unknown term kind");
  }

 private:
  std::uint32_t slot(const std::string& name) const {
    const auto it = std::lower_bound(slots_.begin(), slots_.end(), Variable{name});
    return static_cast<std::uint32_t>(it - slots_.begin());
  }

  Handle intern(TermKind kind, std::uint32_t slot, Handle left, Handle right) {
    const NodeKey key = key_of(kind, slot, left, right);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    const auto h = static_cast<Handle>(nodes_.size());
    nodes_.push_back(CompiledTerm::Node{kind, slot, left, right});
    index_.emplace(key, h);
    return h;
  }

  std::vector<CompiledTerm::Node>& nodes_;
  std::map<NodeKey, Handle>& index_;
  const std::vector<Variable>& slots_;
};

std::optional<Handle> lookup(const std::map<NodeKey, Handle>& index,
                             const std::vector<Variable>& slots, const Term& t) {
  auto find = [&](TermKind kind, std::uint32_t slot, Handle l, Handle r) -> std::optional<Handle> {
    const auto it = index.find(key_of(kind, slot, l, r));
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  switch (t.kind()) {
    case TermKind::var:
    case TermKind::cvar: {
      const auto it = std::lower_bound(slots.begin(), slots.end(), Variable{t.name()});
      if (it == slots.end() || it->name != t.name()) return std::nullopt;
      return find(t.kind(), static_cast<std::uint32_t>(it - slots.begin()), kNoChild, kNoChild);
    }
    case TermKind::one:
    case TermKind::zero:
      return find(t.kind(), 0, kNoChild, kNoChild);
    case TermKind::unite:
    case TermKind::concat: {
      const auto l = lookup(index, slots, t.left());
      if (!l) return std::nullopt;
      const auto r = lookup(index, slots, t.right());
      if (!r) return std::nullopt;
      return find(t.kind(), 0, *l, *r);
    }
    case TermKind::star: {
      const auto b = lookup(index, slots, t.body());
      if (!b) return std::nullopt;
      return find(TermKind::star, 0, *b, kNoChild);
    }
  }
  return std::nullopt;
}

// Leaf rows for every slot over the factors of `word`.
std::vector<Row> leaf_rows(const CompiledTerm& ct, const Valuation& v, const LetterWord& word) {
  const std::size_t n = word.size();
  for (const Letter l : word) {
    if (l.index >= v.alphabet_size()) {
      throw std::out_of_range("letter l" + std::to_string(l.index) + " outside alphabet of size " +
                              std::to_string(v.alphabet_size()));
    }
  }
  std::vector<Row> rows(ct.slots().size() * (n + 1), 0);
  for (std::size_t s = 0; s < ct.slots().size(); ++s) {
    const LangSpec* spec = v.find(ct.slots()[s]);
    if (spec == nullptr) continue;
    for (std::size_t i = 0; i <= n; ++i) {
      LetterWord factor;
      for (std::size_t j = i;; ++j) {
        if (word_in_spec(factor, *spec, v.alphabet_size())) rows[s * (n + 1) + i] |= Row{1} << j;
        if (j == n) break;
        factor.push_back(word[j]);
      }
    }
  }
  return rows;
}

MembershipTable tabulate(const Term& t, const Valuation& v, const LetterWord& word) {
  if (word.size() > kMaxFactorWord) {
    throw std::length_error("factor tables cover words of length at most " +
                            std::to_string(kMaxFactorWord));
  }
  auto ct = std::make_shared<const CompiledTerm>(t);
  const auto leaves = leaf_rows(*ct, v, word);
  detail::FactorKernel kernel(*ct, word.size());
  kernel.evaluate(leaves.data());
  return MembershipTable(ct, word.size(), std::move(kernel).release());
}

}  // namespace

CompiledTerm::CompiledTerm(const std::vector<Term>& roots) {
  std::set<Variable> vars;
  for (const auto& t : roots) {
    const auto vs = variables(t);
    vars.insert(vs.begin(), vs.end());
  }
  slots_.assign(vars.begin(), vars.end());
  std::map<NodeKey, Handle> index;
  Builder builder(nodes_, index, slots_);
  for (const auto& t : roots) roots_.push_back(builder.add(t));
}

std::optional<std::uint32_t> CompiledTerm::slot_of(const Variable& x) const {
  const auto it = std::lower_bound(slots_.begin(), slots_.end(), x);
  if (it == slots_.end() || *it != x) return std::nullopt;
  return static_cast<std::uint32_t>(it - slots_.begin());
}

std::optional<Handle> CompiledTerm::handle_of(const Term& sub) const {
  // Rebuild the interning index on demand; lookups are rare.
  std::map<NodeKey, Handle> index;
  for (Handle h = 0; h < nodes_.size(); ++h) {
    const auto& n = nodes_[h];
    index.emplace(key_of(n.kind, n.slot, n.left, n.right), h);
  }
  return lookup(index, slots_, sub);
}

MembershipTable::MembershipTable(std::shared_ptr<const CompiledTerm> term, std::size_t n,
                                 std::vector<std::uint64_t> rows)
    : term_(std::move(term)), n_(n), rows_(std::move(rows)) {}

bool MembershipTable::at(Handle h, Factor f) const {
  if (h >= term_->size() || f.begin > f.end || f.end > n_) {
    throw std::out_of_range("membership table index out of range");
  }
  return (rows_[h * (n_ + 1) + f.begin] >> f.end) & 1U;
}

MembershipTable eval_factors(const Term& t, const Valuation& v) {
  if (v.alphabet_size() > kMaxFactorWord) {
    throw std::length_error("factor tables cover alphabets of size at most " +
                            std::to_string(kMaxFactorWord));
  }
  return tabulate(t, v, canonical_word(v.alphabet_size()));
}

MembershipTable eval_word(const Term& t, const Valuation& v, const LetterWord& w) {
  return tabulate(t, v, w);
}

bool member(const LetterWord& w, const Term& t, const Valuation& v) {
  return eval_word(t, v, w).contains(Factor{0, w.size()});
}

Valuation words_to_letters(const Valuation& v, const std::vector<LetterWord>& parts) {
  const std::size_t n = parts.size();
  Valuation out(n);
  for (const auto& [x, spec] : v.assignment()) {
    FiniteWords words;
    for (std::size_t i = 0; i <= n; ++i) {
      LetterWord joined;
      for (std::size_t j = i;; ++j) {
        if (word_in_spec(joined, spec, v.alphabet_size())) words.words.insert(factor_word({i, j}));
        if (j == n) break;
        joined.insert(joined.end(), parts[j].begin(), parts[j].end());
      }
    }
    out.assign(x, std::move(words));
  }
  return out;
}

}  // namespace kavc
