#include "kavc/testkit/generators.hpp"

#include <algorithm>
#include <map>

namespace kavc::testkit {

namespace {

std::vector<Term> leaves(const TermShape& shape) {
  std::vector<Term> out;
  for (const auto& x : shape.variables) {
    out.push_back(Term::var(x));
    if (shape.complements) out.push_back(Term::cvar(x));
  }
  if (shape.constants) {
    out.push_back(Term::one());
    out.push_back(Term::zero());
  }
  return out;
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Term random_exact(Rng& rng, std::size_t size, const TermShape& shape,
                  const std::vector<Term>& leaf_pool) {
  if (size <= 1 || (size == 2 && !shape.stars)) {
    return leaf_pool[uniform(rng, 0, leaf_pool.size() - 1)];
  }
  // Binary operators need size >= 3; star needs size >= 2.
  const bool binary = size >= 3 && (!shape.stars || uniform(rng, 0, 3) != 0);
  if (!binary) return Term::star(random_exact(rng, size - 1, shape, leaf_pool));
  const std::size_t left = uniform(rng, 1, size - 2);
  Term a = random_exact(rng, left, shape, leaf_pool);
  Term b = random_exact(rng, size - 1 - left, shape, leaf_pool);
  return uniform(rng, 0, 1) == 0 ? Term::unite(std::move(a), std::move(b))
                                 : Term::concat(std::move(a), std::move(b));
}

}  // namespace

Term random_term(Rng& rng, const TermShape& shape) {
  const auto pool = leaves(shape);
  return random_exact(rng, uniform(rng, 1, std::max<std::size_t>(shape.max_size, 1)), shape, pool);
}

std::vector<Term> terms_of_size(std::size_t size, const TermShape& shape) {
  std::vector<std::vector<Term>> by_size(size + 1);
  if (size == 0) return {};
  by_size[1] = leaves(shape);
  for (std::size_t s = 2; s <= size; ++s) {
    if (shape.stars) {
      for (const auto& t : by_size[s - 1]) by_size[s].push_back(Term::star(t));
    }
    for (std::size_t left = 1; left + 1 < s; ++left) {
      const std::size_t right = s - 1 - left;
      for (const auto& a : by_size[left]) {
        for (const auto& b : by_size[right]) {
          by_size[s].push_back(Term::unite(a, b));
          by_size[s].push_back(Term::concat(a, b));
        }
      }
    }
  }
  return by_size[size];
}

std::vector<Term> terms_up_to(std::size_t max_size, const TermShape& shape) {
  std::vector<Term> out;
  for (std::size_t s = 1; s <= max_size; ++s) {
    auto more = terms_of_size(s, shape);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

std::vector<LitWord> literal_words(const std::vector<std::string>& variables,
                                   std::size_t max_len) {
  std::vector<Literal> alphabet;
  for (const auto& x : variables) {
    alphabet.push_back(Literal{Variable{x}, Polarity::positive});
    alphabet.push_back(Literal{Variable{x}, Polarity::negative});
  }
  std::sort(alphabet.begin(), alphabet.end());
  std::vector<LitWord> out;
  std::vector<LitWord> layer{LitWord{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<LitWord> next;
    for (const auto& w : layer) {
      for (const auto& lit : alphabet) {
        LitWord longer = w;
        longer.push_back(lit);
        next.push_back(std::move(longer));
      }
    }
    layer = std::move(next);
  }
  return out;
}

Dnf random_dnf(Rng& rng, std::size_t max_variables, std::size_t max_clauses) {
  static const std::vector<std::string> names{"p", "q", "r", "s", "u", "v", "w"};
  const std::size_t k = uniform(rng, 1, std::min(max_variables, names.size()));
  Dnf phi;
  const std::size_t clauses = uniform(rng, 1, max_clauses);
  for (std::size_t c = 0; c < clauses; ++c) {
    std::vector<std::size_t> picks(k);
    for (std::size_t i = 0; i < k; ++i) picks[i] = i;
    std::shuffle(picks.begin(), picks.end(), rng);
    // Short clauses keep valid formulas from being vanishingly rare.
    const std::size_t len = uniform(rng, 1, std::min<std::size_t>(k, 2));
    DnfClause clause;
    for (std::size_t i = 0; i < len; ++i) {
      clause.push_back(DnfLiteral{names[picks[i]], uniform(rng, 0, 1) == 1});
    }
    phi.clauses.push_back(std::move(clause));
  }
  return phi;
}

}  // namespace kavc::testkit
