#include <catch_amalgamated.hpp>

#include "kavc/decision.hpp"
#include "kavc/testkit/generators.hpp"
#include "kavc/testkit/oracle.hpp"

using namespace kavc;

namespace {

Literal pos(const char* x) { return Literal{Variable{x}, Polarity::positive}; }
Literal neg(const char* x) { return Literal{Variable{x}, Polarity::negative}; }

DecisionOptions serial() {
  DecisionOptions o;
  o.execution = Execution::serial;
  return o;
}

void require_checked(const Term& lhs, const Term& rhs, const Verdict& v) {
  if (!v.refuted()) return;
  REQUIRE(v.counterexample.has_value());
  const auto& cex = *v.counterexample;
  REQUIRE(verify_counterexample(lhs, rhs, cex));
  REQUIRE(testkit::split_member(cex.witness, lhs, cex.valuation));
  REQUIRE_FALSE(testkit::split_member(cex.witness, rhs, cex.valuation));
}

// Some valuation into finite sets of words of length <= 2 over one letter
// separates t1 from t2. Exact within that universe, so a hit is a genuine
// counterexample.
bool small_counterexample(const Term& t1, const Term& t2) {
  static const testkit::NaiveLanguage naive(1, 2);
  const auto& words = naive.universe();
  std::vector<Variable> vars;
  for (const auto& x : variables(Term::unite(t1, t2))) vars.push_back(x);
  const std::size_t subsets = std::size_t{1} << words.size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < vars.size(); ++k) total *= subsets;
  for (std::size_t code = 0; code < total; ++code) {
    Valuation v(1);
    std::size_t rest = code;
    for (const auto& x : vars) {
      FiniteWords s;
      for (std::size_t b = 0; b < words.size(); ++b) {
        if ((rest % subsets >> b) & 1U) s.words.insert(words[b]);
      }
      rest /= subsets;
      v.assign(x, std::move(s));
    }
    if ((naive.evaluate(t1, v) & ~naive.evaluate(t2, v)) != 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("identity inclusions") {
  CHECK(decide_identity_inclusion(parse_term("x + ~x")).valid());
  CHECK(decide_identity_inclusion(parse_term("x*")).valid());
  CHECK(decide_identity_inclusion(parse_term("~x . ~y + x + y")).valid());

  const Verdict v = decide_identity_inclusion(parse_term("x . ~y"));
  REQUIRE(v.refuted());
  CHECK(v.procedure == Procedure::identity);
  CHECK(v.counterexample->witness.empty());
  require_checked(Term::one(), parse_term("x . ~y"), v);
}

TEST_CASE("the four divergence examples are refuted") {
  const char* queries[] = {"y <= ~x", "~x = ~x . ~x", "x + ~x = ~x . ~y", "x + ~x = ~x + ~y"};
  for (const char* text : queries) {
    INFO(text);
    const Query q = parse_query(text);
    const QueryVerdict qv = decide(q);
    CHECK(qv.outcome() == Outcome::refuted);
    require_checked(q.lhs, q.rhs, qv.forward);
    if (qv.backward) require_checked(q.rhs, q.lhs, *qv.backward);
  }
}

TEST_CASE("composition-free counterexample for y <= ~x") {
  const Verdict v = decide_inclusion(parse_term("y"), parse_term("~x"));
  REQUIRE(v.refuted());
  CHECK(v.procedure == Procedure::composition_free);
  const Valuation& val = v.counterexample->valuation;
  CHECK(val.contains(Variable{"x"}, LetterWord{Letter{0}}));
  CHECK(val.contains(Variable{"y"}, LetterWord{Letter{0}}));
}

TEST_CASE("universality of a union of complements") {
  const Verdict v = decide_universality(parse_term("~x + ~y"));
  REQUIRE(v.refuted());
  const Valuation& val = v.counterexample->valuation;
  const LetterWord& w = v.counterexample->witness;
  CHECK(val.contains(Variable{"x"}, w));
  CHECK(val.contains(Variable{"y"}, w));
}

TEST_CASE("word inclusions") {
  const Verdict v = decide_word_inclusion({neg("x")}, parse_term("~x . ~x"));
  REQUIRE(v.refuted());
  CHECK(v.procedure == Procedure::word);
  CHECK(v.counterexample->lhs_word == LitWord{neg("x")});
  require_checked(Term::cvar("x"), parse_term("~x . ~x"), v);

  CHECK(decide_word_inclusion({pos("x"), pos("y")}, parse_term("x . (y + z)")).valid());
  CHECK(decide_word_inclusion({pos("x")}, parse_term("x*")).valid());
  CHECK(decide_word_inclusion({neg("x"), neg("x")}, parse_term("~x*")).valid());

  // The empty word is the identity case but keeps its own label.
  const Verdict e = decide_word_inclusion({}, parse_term("x"));
  REQUIRE(e.refuted());
  CHECK(e.procedure == Procedure::word);
  CHECK(e.counterexample->lhs_word == LitWord{});
}

TEST_CASE("familiar laws hold") {
  const char* laws[] = {
      "x <= x + y",
      "x . (y + z) = x . y + x . z",
      "(x + y) . z = x . z + y . z",
      "x . 1 = x",
      "x . 0 = 0",
      "~x . ~y <= ~x . ~y + x",
      "x . ~y <= (x + y) . (~y + ~x)",
  };
  for (const char* text : laws) {
    INFO(text);
    CHECK(decide(parse_query(text)).outcome() == Outcome::valid);
  }
}

TEST_CASE("star laws are never refuted") {
  // Left-hand stars leave only the bounded refuter, which must find nothing.
  DecisionOptions opts;
  opts.max_len = 4;
  for (const char* text : {"1 + x . x* = x*", "x* . x* = x*", "(x + ~x)* <= (~x* . x*)*"}) {
    INFO(text);
    const QueryVerdict qv = decide(parse_query(text), opts);
    CHECK(qv.outcome() == Outcome::unknown);
  }
}

TEST_CASE("syntactically equal sides need no search") {
  const QueryVerdict qv = decide(parse_query("x* . ~y = x* . ~y"));
  CHECK(qv.outcome() == Outcome::valid);
  CHECK(qv.forward.procedure == Procedure::syntactic);
}

TEST_CASE("star left-hand sides fall back to bounded refutation") {
  const Verdict v = decide_inclusion(parse_term("x*"), parse_term("1 + x"));
  REQUIRE(v.refuted());
  CHECK(v.procedure == Procedure::bounded);
  require_checked(parse_term("x*"), parse_term("1 + x"), v);

  const Verdict u = decide_inclusion(parse_term("~x*"), parse_term("x + ~x*"));
  CHECK(u.unknown());
  CHECK(u.bound == DecisionOptions{}.max_len);
}

TEST_CASE("oversized searches give up cleanly") {
  DecisionOptions tight;
  tight.max_search_bits = 2;
  const LitWord u{pos("x"), neg("y"), pos("x")};
  const Term t = parse_term("(x + ~y)* . ~x . y");
  tight.prune = false;
  CHECK_THROWS_AS(decide_word_inclusion(u, t, tight), SearchLimitExceeded);
  // The dispatcher falls back instead of throwing.
  const Verdict v = decide_inclusion(to_term(u), t, tight);
  CHECK(v.procedure == Procedure::bounded);
  CHECK_FALSE(v.valid());
}

TEST_CASE("refutations are sound against a small brute-force search") {
  testkit::Rng rng(21);
  testkit::TermShape shape;
  shape.max_size = 5;
  testkit::TermShape lhs_shape = shape;
  lhs_shape.stars = false;
  for (int k = 0; k < 300; ++k) {
    const Term t1 = testkit::random_term(rng, lhs_shape);
    const Term t2 = testkit::random_term(rng, shape);
    const Verdict v = decide_inclusion(t1, t2);
    INFO(print(t1) << " <= " << print(t2));
    REQUIRE_FALSE(v.unknown());
    require_checked(t1, t2, v);
    if (small_counterexample(t1, t2)) REQUIRE(v.refuted());
  }
}

TEST_CASE("pruned and exhaustive word searches agree") {
  DecisionOptions full = serial();
  full.prune = false;
  testkit::TermShape shape;
  shape.max_size = 6;
  const auto words = testkit::literal_words({"x", "y"}, 2);
  testkit::Rng rng(4);
  for (int k = 0; k < 400; ++k) {
    const LitWord& u = words[rng() % words.size()];
    const Term t = testkit::random_term(rng, shape);
    const Verdict a = decide_word_inclusion(u, t, serial());
    const Verdict b = decide_word_inclusion(u, t, full);
    INFO(print(u) << " <= " << print(t));
    REQUIRE(a.outcome == b.outcome);
    require_checked(to_term(u), t, a);
    require_checked(to_term(u), t, b);
  }
}

TEST_CASE("serial and parallel searches return the same verdict") {
  DecisionOptions par;
  par.execution = Execution::parallel;
  par.parallel_threshold = 0;
  testkit::TermShape shape;
  shape.max_size = 6;
  const auto words = testkit::literal_words({"x", "y"}, 3);
  testkit::Rng rng(8);
  for (int k = 0; k < 300; ++k) {
    const LitWord& u = words[rng() % words.size()];
    const Term t = testkit::random_term(rng, shape);
    REQUIRE(decide_word_inclusion(u, t, serial()) == decide_word_inclusion(u, t, par));
  }
}

TEST_CASE("composition-free and star-free procedures agree") {
  testkit::TermShape lhs;
  lhs.max_size = 5;
  lhs.stars = false;
  testkit::TermShape rhs;
  rhs.max_size = 6;
  testkit::Rng rng(12);
  int compared = 0;
  while (compared < 300) {
    const Term t1 = testkit::random_term(rng, lhs);
    if (!is_composition_free(t1)) continue;
    const Term t2 = testkit::random_term(rng, rhs);
    const Verdict a = decide_composition_free_inclusion(t1, t2);
    const Verdict b = decide_star_free_inclusion(t1, t2);
    INFO(print(t1) << " <= " << print(t2));
    REQUIRE(a.outcome == b.outcome);
    require_checked(t1, t2, a);
    ++compared;
  }
  CHECK_THROWS_AS(decide_composition_free_inclusion(parse_term("x . y"), Term::one()),
                  PreconditionError);
  CHECK_THROWS_AS(decide_star_free_inclusion(parse_term("x*"), Term::one()), PreconditionError);
}

TEST_CASE("bounded refutation agrees with the star-free procedure") {
  testkit::TermShape lhs;
  lhs.max_size = 5;
  lhs.stars = false;
  testkit::TermShape rhs;
  rhs.max_size = 5;
  testkit::Rng rng(31);
  for (int k = 0; k < 200; ++k) {
    const Term t1 = testkit::random_term(rng, lhs);
    const Term t2 = testkit::random_term(rng, rhs);
    const Verdict a = decide_star_free_inclusion(t1, t2);
    const Verdict b = refute_bounded(t1, t2, 6);
    INFO(print(t1) << " <= " << print(t2));
    REQUIRE(a.outcome == b.outcome);
    require_checked(t1, t2, b);
  }
}

TEST_CASE("equations report both directions") {
  const QueryVerdict qv = decide(parse_query("x = x + y"));
  REQUIRE(qv.backward.has_value());
  CHECK(qv.forward.valid());
  CHECK(qv.backward->refuted());
  CHECK(qv.outcome() == Outcome::refuted);
  CHECK_FALSE(decide(parse_query("x <= x + y")).backward.has_value());
}
