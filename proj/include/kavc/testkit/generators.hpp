#ifndef KAVC_TESTKIT_GENERATORS_HPP
#define KAVC_TESTKIT_GENERATORS_HPP

#include <random>
#include <vector>

#include "kavc/term.hpp"

namespace kavc::testkit {

using Rng = std::mt19937_64;

struct TermShape {
  std::vector<std::string> variables{"x", "y"};
  std::size_t max_size = 6;
  bool complements = true;
  bool stars = true;
  bool constants = true;  // 0 and 1 leaves
};

// Size drawn uniformly from [1, max_size], then a random tree of that size
// (or one node smaller when the only fitting operator is a disabled star).
Term random_term(Rng& rng, const TermShape& shape);

// Every term of exactly the given size, in a fixed order.
std::vector<Term> terms_of_size(std::size_t size, const TermShape& shape);
std::vector<Term> terms_up_to(std::size_t max_size, const TermShape& shape);

// Every literal word over the variables of length <= max_len, shortlex.
std::vector<LitWord> literal_words(const std::vector<std::string>& variables, std::size_t max_len);

// 1..max_clauses clauses, each of one or two distinct literals over at most
// max_variables variables.
Dnf random_dnf(Rng& rng, std::size_t max_variables, std::size_t max_clauses);

}  // namespace kavc::testkit

#endif  // KAVC_TESTKIT_GENERATORS_HPP
