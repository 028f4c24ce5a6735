#include <catch_amalgamated.hpp>

#include "kavc/separation.hpp"
#include "kavc/testkit/generators.hpp"
#include "kavc/testkit/oracle.hpp"

using namespace kavc;

namespace {

Literal pos(const char* x) { return Literal{Variable{x}, Polarity::positive}; }
Literal neg(const char* x) { return Literal{Variable{x}, Polarity::negative}; }

LitWord z_word(std::initializer_list<int> runs) {
  // Runs of z separated by single ~z.
  LitWord w;
  bool first = true;
  for (int c : runs) {
    if (!first) w.push_back(neg("z"));
    first = false;
    for (int k = 0; k < c; ++k) w.push_back(pos("z"));
  }
  return w;
}

void require_separates(const Separation& s, const LitWord& w1, const LitWord& w2) {
  const Term in = to_term(s.direction == Direction::lhs_not_in_rhs ? w1 : w2);
  const Term out = to_term(s.direction == Direction::lhs_not_in_rhs ? w2 : w1);
  REQUIRE(testkit::split_member(s.witness, in, s.valuation));
  REQUIRE_FALSE(testkit::split_member(s.witness, out, s.valuation));
}

}  // namespace

TEST_CASE("equal words are not separated") {
  CHECK_FALSE(separate_words({}, {}).has_value());
  CHECK_FALSE(separate_words({pos("x"), neg("y")}, {pos("x"), neg("y")}).has_value());
  CHECK_FALSE(lang2_separate(z_word({1, 2}), z_word({1, 2})).has_value());
}

TEST_CASE("separation uses the shorter word's letters") {
  const LitWord w1{pos("x"), neg("y")};
  const LitWord w2{pos("x"), neg("y"), pos("x")};
  const auto s = separate_words(w2, w1);
  REQUIRE(s.has_value());
  CHECK(s->direction == Direction::rhs_not_in_lhs);
  CHECK(s->witness == canonical_word(2));
  CHECK(s->valuation.alphabet_size() == 2);
  require_separates(*s, w2, w1);
}

TEST_CASE("table valuations") {
  const auto s = separate_words({pos("x")}, {pos("x"), pos("y")});
  REQUIRE(s.has_value());
  CHECK(s->fallback == Fallback::none);
  CHECK(s->witness == canonical_word(1));
  CHECK(print(s->valuation) == "x -> {l0}, y -> {}");

  const auto t = separate_words({neg("x")}, {neg("y")});
  REQUIRE(t.has_value());
  CHECK_FALSE(t->valuation.contains(Variable{"x"}, canonical_word(1)));
  CHECK(t->valuation.contains(Variable{"y"}, canonical_word(1)));
  require_separates(*t, {neg("x")}, {neg("y")});
}

TEST_CASE("conflicting tables fall back to the word-inclusion search") {
  // Position 0 wants 1 outside v(x), the trailing ~x wants it inside.
  const LitWord w1{pos("x"), pos("x")};
  const LitWord w2{pos("x"), pos("x"), neg("x")};
  CHECK_THROWS_AS(table_valuation(w1, w2), ConstraintConflict);
  const auto s = separate_words(w1, w2);
  REQUIRE(s.has_value());
  CHECK(s->fallback == Fallback::constraint_conflict);
  require_separates(*s, w1, w2);

  const LitWord u1{pos("x")};
  const LitWord u2{pos("x"), neg("x")};
  CHECK_THROWS_AS(table_valuation(u1, u2), ConstraintConflict);
  require_separates(*separate_words(u1, u2), u1, u2);
}

TEST_CASE("every pair of short literal words is separated") {
  const auto words = testkit::literal_words({"x", "y"}, 3);
  for (const auto& w1 : words) {
    for (const auto& w2 : words) {
      const auto s = separate_words(w1, w2);
      INFO(print(w1) << " vs " << print(w2));
      REQUIRE(s.has_value() == (w1 != w2));
      if (!s) continue;
      if (s->fallback == Fallback::none) REQUIRE(s->witness.size() == std::min(w1.size(), w2.size()));
      require_separates(*s, w1, w2);
    }
  }
}

TEST_CASE("literal counts and runs") {
  const LitWord w = z_word({2, 0, 1});
  CHECK(literal_counts(w) == LiteralCounts{3, 2});
  CHECK(run_decomposition(w) == RunDecomposition{{2, 0, 1}});
  CHECK(run_decomposition({}) == RunDecomposition{{0}});
  CHECK_THROWS_AS(literal_counts({pos("x"), pos("y")}), PreconditionError);
  CHECK_THROWS_AS(lang1_decide({pos("x")}, {pos("y")}), PreconditionError);
}

TEST_CASE("one-letter equality is count equality") {
  const auto same = lang1_decide(z_word({1, 0}), z_word({0, 1}));
  CHECK(same.verdict.valid());
  CHECK(same.verdict.procedure == Procedure::lang1);

  const LitWord w1 = z_word({2});
  const LitWord w2 = z_word({1, 0});
  const auto pos_diff = lang1_decide(w1, w2);
  REQUIRE(pos_diff.verdict.refuted());
  REQUIRE(pos_diff.direction.has_value());
  const auto& cex = *pos_diff.verdict.counterexample;
  CHECK(cex.valuation.alphabet_size() == 1);
  const bool lhs_side = *pos_diff.direction == Direction::lhs_not_in_rhs;
  CHECK(testkit::split_member(cex.witness, to_term(lhs_side ? w1 : w2), cex.valuation));
  CHECK_FALSE(testkit::split_member(cex.witness, to_term(lhs_side ? w2 : w1), cex.valuation));

  const auto neg_diff = lang1_decide(z_word({0, 0}), z_word({0, 0, 0}));
  REQUIRE(neg_diff.verdict.refuted());
}

TEST_CASE("one-letter verdicts are exact on short words") {
  // Brute force over valuations into subsets of {1, a, aa, aaa}: a
  // separation there must exist exactly when the counts differ.
  const testkit::NaiveLanguage naive(1, 3);
  const auto words = testkit::literal_words({"z"}, 3);
  for (const auto& w1 : words) {
    for (const auto& w2 : words) {
      bool separated = false;
      for (unsigned bits = 0; bits < 16 && !separated; ++bits) {
        FiniteWords s;
        for (unsigned b = 0; b < 4; ++b) {
          if ((bits >> b) & 1U) s.words.insert(naive.universe()[b]);
        }
        const Valuation v(1, {{Variable{"z"}, s}});
        separated = naive.evaluate(to_term(w1), v) != naive.evaluate(to_term(w2), v);
      }
      const auto verdict = lang1_decide(w1, w2);
      INFO(print(w1) << " vs " << print(w2));
      if (separated) REQUIRE(verdict.verdict.refuted());
      if (verdict.verdict.valid()) REQUIRE_FALSE(separated);
    }
  }
}

TEST_CASE("two-letter witnesses from the first differing run") {
  const auto s = lang2_separate(z_word({1, 1}), z_word({2, 0}));
  REQUIRE(s.has_value());
  CHECK(s->witness == LetterWord{Letter{0}, Letter{1}, Letter{0}});
  CHECK(s->direction == Direction::lhs_not_in_rhs);
  CHECK(s->fallback == Fallback::none);

  const auto t = lang2_separate(z_word({0, 1}), z_word({1, 0}));
  REQUIRE(t.has_value());
  CHECK(t->witness == LetterWord{Letter{1}, Letter{0}});
}

TEST_CASE("the b moves when the first differing run is empty") {
  // Runs (0, 1, 0) against (0, 0, 1): the run-based witness b a lies in
  // both words, since each has a ~z after no z at all.
  const LitWord w1 = z_word({0, 1, 0});
  const LitWord w2 = z_word({0, 0, 1});
  const auto s = lang2_separate(w1, w2);
  REQUIRE(s.has_value());
  CHECK(s->fallback == Fallback::witness_rejected);
  CHECK(s->valuation.alphabet_size() == 2);
  require_separates(*s, w1, w2);
}

TEST_CASE("two-letter separation of equal-count words") {
  const LitWord w1 = z_word({1, 0});
  const LitWord w2 = z_word({0, 1});
  const auto s = lang2_separate(w1, w2);
  REQUIRE(s.has_value());
  CHECK(s->valuation.alphabet_size() == 2);
  require_separates(*s, w1, w2);

  const auto words = testkit::literal_words({"z"}, 7);
  for (const auto& a : words) {
    for (const auto& b : words) {
      const auto sep = lang2_separate(a, b);
      INFO(print(a) << " vs " << print(b));
      REQUIRE(sep.has_value() == (a != b));
      if (sep) require_separates(*sep, a, b);
    }
  }
}
