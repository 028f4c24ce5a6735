#include <catch_amalgamated.hpp>

#include "kavc/json.hpp"

using namespace kavc;
using nlohmann::json;

TEST_CASE("valuations round-trip through JSON") {
  const Valuation v(2, {{Variable{"x"}, FiniteWords{{LetterWord{}, LetterWord{Letter{1}, Letter{0}}}}},
                        {Variable{"z"}, LetterRegex::parse("l0 + l0 (l0 + l1)* l0")}});
  const auto j = to_json(v);
  CHECK(j.dump() ==
        R"({"alphabet":2,"assignment":{"x":{"kind":"finite","words":[[],[1,0]]},)"
        R"("z":{"kind":"regex","expr":"l0 + l0 (l0 + l1)* l0"}}})");
  const Valuation back = valuation_from_json(json::parse(j.dump()));
  CHECK(back.alphabet_size() == 2);
  CHECK(back.contains(Variable{"x"}, LetterWord{Letter{1}, Letter{0}}));
  CHECK(back.contains(Variable{"z"}, LetterWord{Letter{0}, Letter{1}, Letter{0}}));
  CHECK(print(back) == print(v));
}

TEST_CASE("verdicts encode outcome, procedure and counterexample") {
  const Verdict v = decide_word_inclusion({Literal{Variable{"x"}, Polarity::negative}},
                                          parse_term("~x . ~x"));
  const auto j = to_json(v);
  CHECK(j["verdict"] == "refuted");
  CHECK(j["procedure"] == "word");
  CHECK(j["counterexample"]["lhs_word"] == "~x");
  CHECK(j["counterexample"].contains("witness"));
  CHECK_FALSE(j.contains("bound"));

  const auto valid = to_json(decide_identity_inclusion(parse_term("x + ~x")));
  CHECK(valid.dump() == R"({"verdict":"valid","procedure":"identity"})");
}

TEST_CASE("separations record their direction") {
  const auto s = separate_words({Literal{Variable{"x"}}, Literal{Variable{"x"}}}, {Literal{Variable{"x"}}});
  REQUIRE(s.has_value());
  const auto j = to_json(*s);
  CHECK(j["direction"] == "rhs_not_in_lhs");
  CHECK(j["witness"] == json::array({0}));
}

TEST_CASE("malformed valuation documents are rejected") {
  CHECK_THROWS_AS(valuation_from_json(json::parse("[]")), std::invalid_argument);
  CHECK_THROWS_AS(valuation_from_json(json::parse(R"({"alphabet":-1})")), std::invalid_argument);
  CHECK_THROWS_AS(valuation_from_json(json::parse(R"({"alphabet":1,"assignment":{"x":{"kind":"set"}}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      valuation_from_json(json::parse(R"({"alphabet":1,"assignment":{"x":{"kind":"finite","words":[[3]]}}})")),
      std::out_of_range);
  CHECK_THROWS_AS(
      valuation_from_json(json::parse(R"({"alphabet":1,"assignment":{"x":{"kind":"regex","expr":"(("}}})")),
      ParseError);
}
