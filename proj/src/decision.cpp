#include "kavc/decision.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "factor_kernel.hpp"

namespace kavc {

namespace {

using detail::Row;

// Factors of l0 ... l(n-1) in search order: the non-empty ones by (begin, end),
// then the empty word once.
std::vector<Factor> factor_order(std::size_t n) {
  std::vector<Factor> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) out.push_back({i, j});
  }
  out.push_back({0, 0});
  return out;
}

enum class Membership : std::uint8_t { out, in, free };

// A family of valuations over the factors of an n-letter canonical word: each
// (variable, factor) membership is fixed or free, and candidate k sets the
// free memberships according to the bits of k, lowest bit first.
struct SearchSpace {
  std::size_t n = 0;
  std::vector<Factor> factors;
  std::shared_ptr<const CompiledTerm> term;  // roots: lhs, rhs
  std::vector<std::vector<Membership>> policy;  // slot -> factor index
  std::vector<Factor> witnesses;                // tried in order per candidate

  struct Delta {
    std::uint32_t offset;
    Row mask;
  };
  std::vector<Row> base;
  std::vector<std::vector<Delta>> bit_deltas;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> bit_owner;  // (slot, factor index)

  std::size_t stride() const { return n + 1; }

  std::vector<Delta> deltas_for(std::uint32_t slot, const Factor& f) const {
    std::vector<Delta> out;
    const auto row0 = static_cast<std::uint32_t>(slot * stride());
    if (f.empty()) {
      for (std::size_t i = 0; i <= n; ++i) {
        out.push_back({static_cast<std::uint32_t>(row0 + i), Row{1} << i});
      }
    } else {
      out.push_back({static_cast<std::uint32_t>(row0 + f.begin), Row{1} << f.end});
    }
    return out;
  }

  void prepare(unsigned max_bits) {
    base.assign(term->slots().size() * stride(), 0);
    for (std::uint32_t s = 0; s < policy.size(); ++s) {
      for (std::uint32_t k = 0; k < factors.size(); ++k) {
        if (policy[s][k] == Membership::in) {
          for (const auto& d : deltas_for(s, factors[k])) base[d.offset] |= d.mask;
        } else if (policy[s][k] == Membership::free) {
          bit_deltas.push_back(deltas_for(s, factors[k]));
          bit_owner.emplace_back(s, k);
        }
      }
    }
    if (bit_deltas.size() > max_bits) {
      throw SearchLimitExceeded("search needs " + std::to_string(bit_deltas.size()) +
                                " free membership bits; the limit is " +
                                std::to_string(max_bits));
    }
  }

  std::uint64_t candidates() const { return std::uint64_t{1} << bit_deltas.size(); }

  void load(std::uint64_t index, std::vector<Row>& leaves) const {
    leaves = base;
    for (std::uint64_t rest = index; rest != 0; rest &= rest - 1) {
      for (const auto& d : bit_deltas[std::countr_zero(rest)]) leaves[d.offset] |= d.mask;
    }
  }

  // First witness factor refuting lhs <= rhs under candidate `index`.
  struct Checker {
    const SearchSpace* space;
    detail::FactorKernel kernel;
    std::vector<Row> leaves;

    std::optional<Factor> refutation(std::uint64_t index) {
      space->load(index, leaves);
      kernel.evaluate(leaves.data());
      const Handle lhs = space->term->root(0);
      const Handle rhs = space->term->root(1);
      for (const auto& f : space->witnesses) {
        if (kernel.at(lhs, f.begin, f.end) && !kernel.at(rhs, f.begin, f.end)) return f;
      }
      return std::nullopt;
    }

    bool operator()(std::uint64_t index) { return refutation(index).has_value(); }
  };

  Checker checker() const { return Checker{this, detail::FactorKernel(*term, n), {}}; }

  Valuation valuation_of(std::uint64_t index) const {
    std::vector<std::set<LetterWord>> words(policy.size());
    for (std::uint32_t s = 0; s < policy.size(); ++s) {
      for (std::uint32_t k = 0; k < factors.size(); ++k) {
        if (policy[s][k] == Membership::in) words[s].insert(factor_word(factors[k]));
      }
    }
    for (std::size_t b = 0; b < bit_owner.size(); ++b) {
      if ((index >> b) & 1U) {
        const auto [s, k] = bit_owner[b];
        words[s].insert(factor_word(factors[k]));
      }
    }
    Valuation v(n);
    for (std::uint32_t s = 0; s < policy.size(); ++s) {
      v.assign(term->slots()[s], FiniteWords{std::move(words[s])});
    }
    return v;
  }
};

std::shared_ptr<const CompiledTerm> compile_pair(const Term& lhs, const Term& rhs) {
  return std::make_shared<const CompiledTerm>(std::vector<Term>{lhs, rhs});
}

// Runs the search; on a hit returns the refuting valuation and witness.
std::optional<Counterexample> run_search(SearchSpace& space, const DecisionOptions& opts) {
  space.prepare(opts.max_search_bits);
  const auto hit = find_first(
      space.candidates(), [&space] { return space.checker(); }, opts.execution,
      opts.parallel_threshold);
  if (!hit) return std::nullopt;
  auto check = space.checker();
  const auto f = check.refutation(*hit);
  if (!f) throw std::logic_error("search hit does not reproduce");
  return Counterexample{space.valuation_of(*hit), factor_word(*f), std::nullopt};
}

Verdict finish(Procedure p, const Term& lhs, const Term& rhs, std::optional<Counterexample> cex) {
  Verdict v;
  v.procedure = p;
  if (!cex) {
    v.outcome = Outcome::valid;
    return v;
  }
  if (!verify_counterexample(lhs, rhs, *cex)) {
    throw std::logic_error(to_string(p) + " procedure produced a counterexample that does not verify");
  }
  v.outcome = Outcome::refuted;
  v.counterexample = std::move(cex);
  return v;
}

void collect_polarities(const Term& t, std::map<Variable, std::pair<bool, bool>>& seen) {
  switch (t.kind()) {
    case TermKind::var: seen[Variable{t.name()}].first = true; break;
    case TermKind::cvar: seen[Variable{t.name()}].second = true; break;
    case TermKind::one:
    case TermKind::zero: break;
    case TermKind::unite:
    case TermKind::concat:
      collect_polarities(t.left(), seen);
      collect_polarities(t.right(), seen);
      break;
    case TermKind::star: collect_polarities(t.body(), seen); break;
  }
}

SearchSpace all_free(std::size_t n, const Term& lhs, const Term& rhs) {
  SearchSpace space;
  space.n = n;
  space.factors = factor_order(n);
  space.term = compile_pair(lhs, rhs);
  space.policy.assign(space.term->slots().size(),
                      std::vector<Membership>(space.factors.size(), Membership::free));
  return space;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::valid: return "valid";
    case Outcome::refuted: return "refuted";
    case Outcome::unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Procedure p) {
  switch (p) {
    case Procedure::identity: return "identity";
    case Procedure::composition_free: return "composition_free";
    case Procedure::star_free: return "star_free";
    case Procedure::word: return "word";
    case Procedure::bounded: return "bounded";
    case Procedure::syntactic: return "syntactic";
    case Procedure::separation: return "separation";
    case Procedure::lang1: return "lang1";
    case Procedure::lang2: return "lang2";
  }
  return "?";
}

bool verify_counterexample(const Term& lhs, const Term& rhs, const Counterexample& cex) {
  if (!member(cex.witness, lhs, cex.valuation)) return false;
  if (member(cex.witness, rhs, cex.valuation)) return false;
  if (cex.lhs_word && !member(cex.witness, to_term(*cex.lhs_word), cex.valuation)) return false;
  return true;
}

Verdict decide_identity_inclusion(const Term& t, const DecisionOptions& opts) {
  const Term lhs = Term::one();
  SearchSpace space = all_free(0, lhs, t);
  space.witnesses = {Factor{0, 0}};
  return finish(Procedure::identity, lhs, t, run_search(space, opts));
}

Verdict decide_word_inclusion(const LitWord& u, const Term& t, const DecisionOptions& opts) {
  if (u.empty()) {
    Verdict v = decide_identity_inclusion(t, opts);
    v.procedure = Procedure::word;
    if (v.counterexample) v.counterexample->lhs_word = LitWord{};
    return v;
  }
  const std::size_t n = u.size();
  if (n > kMaxFactorWord) {
    throw SearchLimitExceeded("literal word of length " + std::to_string(n) +
                              " exceeds the factor table limit");
  }
  const Term lhs = to_term(u);
  SearchSpace space = all_free(n, lhs, t);
  space.witnesses = {Factor{0, n}};

  if (opts.prune) {
    std::map<Variable, std::pair<bool, bool>> rhs_polarity;
    collect_polarities(t, rhs_polarity);
    const auto& slots = space.term->slots();
    for (std::uint32_t s = 0; s < slots.size(); ++s) {
      const auto it = rhs_polarity.find(slots[s]);
      const bool pos = it != rhs_polarity.end() && it->second.first;
      const bool neg = it != rhs_polarity.end() && it->second.second;
      // Growing v(x) only shrinks the right-hand side when x occurs there
      // purely complemented, and only grows it when x occurs purely positively.
      Membership fill = Membership::free;
      if (!neg) fill = Membership::out;
      else if (!pos) fill = Membership::in;
      std::fill(space.policy[s].begin(), space.policy[s].end(), fill);
    }
    // Position p of u reads letter l_p through the literal u_p.
    for (std::size_t p = 0; p < n; ++p) {
      const auto s = *space.term->slot_of(u[p].var);
      const auto k = static_cast<std::size_t>(
          std::find(space.factors.begin(), space.factors.end(), Factor{p, p + 1}) -
          space.factors.begin());
      space.policy[s][k] = u[p].negative() ? Membership::out : Membership::in;
    }
  }

  auto cex = run_search(space, opts);
  if (cex) cex->lhs_word = u;
  return finish(Procedure::word, lhs, t, std::move(cex));
}

Verdict decide_composition_free_inclusion(const Term& t1, const Term& t2,
                                          const DecisionOptions& opts) {
  if (!is_composition_free(t1)) {
    throw PreconditionError("left-hand side is not composition-free: " + print(t1));
  }
  SearchSpace space = all_free(1, t1, t2);
  space.witnesses = {Factor{0, 1}, Factor{0, 0}};
  return finish(Procedure::composition_free, t1, t2, run_search(space, opts));
}

Verdict decide_universality(const Term& t, const DecisionOptions& opts) {
  return decide_composition_free_inclusion(top_expansion(variables(t)), t, opts);
}

Verdict decide_star_free_inclusion(const Term& t1, const Term& t2, const DecisionOptions& opts) {
  if (!is_star_free(t1)) {
    throw PreconditionError("left-hand side is not star-free: " + print(t1));
  }
  for (const auto& u : lang_vprime_finite(t1)) {
    Verdict v = decide_word_inclusion(u, t2, opts);
    if (v.refuted()) return finish(Procedure::star_free, t1, t2, std::move(v.counterexample));
  }
  return finish(Procedure::star_free, t1, t2, std::nullopt);
}

Verdict refute_bounded(const Term& t1, const Term& t2, std::size_t max_len,
                       const DecisionOptions& opts) {
  bool skipped = false;
  LangEnumerator words(t1, max_len);
  while (auto u = words.next()) {
    Verdict v;
    try {
      v = decide_word_inclusion(*u, t2, opts);
    } catch (const SearchLimitExceeded&) {
      skipped = true;
      continue;
    }
    if (v.refuted()) {
      Verdict out = finish(Procedure::bounded, t1, t2, std::move(v.counterexample));
      out.bound = max_len;
      return out;
    }
  }
  Verdict out;
  out.procedure = Procedure::bounded;
  out.bound = max_len;
  if (!skipped && is_star_free(t1)) {
    const auto longest = max_word_length(t1);
    if (!longest || *longest <= max_len) {
      out.outcome = Outcome::valid;
      return out;
    }
  }
  out.outcome = Outcome::unknown;
  return out;
}

Verdict decide_inclusion(const Term& lhs, const Term& rhs, const DecisionOptions& opts) {
  if (lhs == rhs) {
    Verdict v;
    v.outcome = Outcome::valid;
    v.procedure = Procedure::syntactic;
    return v;
  }
  try {
    if (lhs.kind() == TermKind::one) return decide_identity_inclusion(rhs, opts);
    if (is_composition_free(lhs)) return decide_composition_free_inclusion(lhs, rhs, opts);
    if (const auto u = as_literal_word(lhs)) return decide_word_inclusion(*u, rhs, opts);
    if (is_star_free(lhs)) return decide_star_free_inclusion(lhs, rhs, opts);
  } catch (const SearchLimitExceeded&) {
    // Too large for a complete search; the bounded refuter may still answer.
  }
  return refute_bounded(lhs, rhs, opts.max_len, opts);
}

Outcome QueryVerdict::outcome() const {
  const bool any_refuted = forward.refuted() || (backward && backward->refuted());
  if (any_refuted) return Outcome::refuted;
  const bool any_unknown = forward.unknown() || (backward && backward->unknown());
  return any_unknown ? Outcome::unknown : Outcome::valid;
}

QueryVerdict decide(const Query& q, const DecisionOptions& opts) {
  QueryVerdict out{decide_inclusion(q.lhs, q.rhs, opts), std::nullopt};
  if (q.relation == Relation::eq) out.backward = decide_inclusion(q.rhs, q.lhs, opts);
  return out;
}

}  // namespace kavc
