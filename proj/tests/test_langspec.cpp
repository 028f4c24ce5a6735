#include <catch_amalgamated.hpp>

#include <algorithm>

#include "kavc/langspec.hpp"
#include "kavc/term.hpp"
#include "kavc/valuation.hpp"

using namespace kavc;

namespace {

LetterWord word(std::initializer_list<std::uint32_t> letters) {
  LetterWord w;
  for (auto l : letters) w.push_back(Letter{l});
  return w;
}

// Words over {l0, l1} up to length n.
std::vector<LetterWord> binary_words(std::size_t n) {
  std::vector<LetterWord> out{LetterWord{}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k].size() == n) continue;
    for (std::uint32_t a = 0; a < 2; ++a) {
      out.push_back(out[k]);
      out.back().push_back(Letter{a});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("regex membership") {
  const LangSpec ends = LetterRegex::parse("l0 + l0 (l0 + l1)* l0");
  CHECK(word_in_spec(word({0}), ends, 2));
  CHECK_FALSE(word_in_spec(word({0, 1}), ends, 2));
  CHECK(word_in_spec(word({0, 1, 0}), ends, 2));
  CHECK_FALSE(word_in_spec({}, ends, 2));
  CHECK_FALSE(word_in_spec({}, FiniteWords{}, 0));

  // Of the words up to length 2, only l0 and l0 l0.
  std::set<LetterWord> short_members;
  for (const auto& w : binary_words(2)) {
    if (word_in_spec(w, ends, 2)) short_members.insert(w);
  }
  CHECK(short_members == std::set<LetterWord>{word({0}), word({0, 0})});
}

TEST_CASE("regex membership matches a direct predicate") {
  struct Case {
    const char* expr;
    bool (*holds)(const LetterWord&);
  };
  const Case cases[] = {
      {"1 + l0 l0 l0*", [](const LetterWord& w) { return w.size() != 1 && std::all_of(w.begin(), w.end(), [](Letter l) { return l.index == 0; }); }},
      {"(l0 l1)*", [](const LetterWord& w) {
         if (w.size() % 2 != 0) return false;
         for (std::size_t k = 0; k < w.size(); ++k) {
           if (w[k].index != k % 2) return false;
         }
         return true;
       }},
      {"0", [](const LetterWord&) { return false; }},
      {"(l0 + l1)* l1 (l0 + l1)*", [](const LetterWord& w) { return std::any_of(w.begin(), w.end(), [](Letter l) { return l.index == 1; }); }},
      {"((l0*)*)* . 1", [](const LetterWord& w) { return std::all_of(w.begin(), w.end(), [](Letter l) { return l.index == 0; }); }},
  };
  for (const auto& c : cases) {
    const LetterRegex rx = LetterRegex::parse(c.expr);
    for (const auto& w : binary_words(7)) {
      INFO(c.expr << " on " << print(w));
      CHECK(rx.matches(w) == c.holds(w));
    }
  }
}

TEST_CASE("regex letters outside the expression go to a shared sink") {
  const LetterRegex rx = LetterRegex::parse("l3 l3*");
  CHECK(rx.matches(word({3, 3})));
  CHECK_FALSE(rx.matches(word({3, 7})));
  CHECK(rx.max_letter() == 3u);
  CHECK_FALSE(LetterRegex::parse("1 + 0").max_letter().has_value());
}

TEST_CASE("regex printing is stable") {
  CHECK(LetterRegex::parse("l0 + l0 (l0 + l1)* l0").to_string() == "l0 + l0 (l0 + l1)* l0");
  CHECK(LetterRegex::parse("l0.l1").to_string() == "l0 l1");
  CHECK(LetterRegex::parse("(l0 l1)*").to_string() == "(l0 l1)*");
  const auto again = LetterRegex::parse(LetterRegex::parse("l0 (l1 + 1) l2*").to_string());
  CHECK(again.to_string() == "l0 (l1 + 1) l2*");
}

TEST_CASE("regex parse errors") {
  CHECK_THROWS_AS(LetterRegex::parse("l"), ParseError);
  CHECK_THROWS_AS(LetterRegex::parse("a"), ParseError);
  CHECK_THROWS_AS(LetterRegex::parse("(l0"), ParseError);
  CHECK_THROWS_AS(LetterRegex::parse("l0 +"), ParseError);
  CHECK_THROWS_AS(LetterRegex::parse("2"), ParseError);
}

TEST_CASE("word_in_spec rejects letters outside the alphabet") {
  CHECK_THROWS_AS(word_in_spec(word({2}), FiniteWords{}, 2), std::out_of_range);
  CHECK_THROWS_AS(word_in_spec(word({0, 5}), LetterRegex::parse("l0*"), 2), std::out_of_range);
}

TEST_CASE("valuations validate letters and treat missing variables as empty") {
  Valuation v(1);
  CHECK_THROWS_AS(v.assign(Variable{"x"}, FiniteWords{{word({1})}}), std::out_of_range);
  CHECK_THROWS_AS(v.assign(Variable{"x"}, LetterRegex::parse("l0 l2")), std::out_of_range);
  v.assign(Variable{"x"}, FiniteWords{{LetterWord{}, word({0})}});
  CHECK(v.contains(Variable{"x"}, word({0})));
  CHECK_FALSE(v.contains(Variable{"y"}, LetterWord{}));
  CHECK(print(v) == "x -> {1, l0}");
  CHECK(print(v.completed({Variable{"y"}})) == "x -> {1, l0}, y -> {}");
}
