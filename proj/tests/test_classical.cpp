#include <catch_amalgamated.hpp>

#include "kavc/classical.hpp"
#include "kavc/testkit/generators.hpp"
#include "kavc/testkit/oracle.hpp"

using namespace kavc;

namespace {

std::vector<SymbolWord> symbol_words(const std::vector<std::string>& symbols, std::size_t max_len) {
  std::vector<SymbolWord> out{SymbolWord{}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k].size() == max_len) continue;
    for (const auto& s : symbols) {
      out.push_back(out[k]);
      out.back().push_back(s);
    }
  }
  return out;
}

const std::set<Variable> kXY{{"x"}, {"y"}};

}  // namespace

TEST_CASE("hand-built automata") {
  Nfa a({"b", "a", "a"});
  CHECK(a.alphabet() == std::vector<std::string>{"a", "b"});
  const auto s = a.add_state();
  const auto t = a.add_state(true);
  a.set_initial(s);
  a.add_edge(s, "a", t);
  a.add_edge(t, "b", s);
  CHECK(a.accepts({"a"}));
  CHECK(a.accepts({"a", "b", "a"}));
  CHECK_FALSE(a.accepts({"a", "b"}));
  CHECK_FALSE(a.accepts({"c"}));
  CHECK(a.symbol_index("c") == -1);
  CHECK_THROWS_AS(a.add_edge(s, "c", t), std::invalid_argument);
  CHECK_THROWS_AS(a.add_edge(s, "a", 7), std::invalid_argument);
}

TEST_CASE("literal symbols are unrelated over the doubled alphabet") {
  const Comparison c = lang_incl(nfa_over_vprime(parse_term("y")), nfa_over_vprime(parse_term("~x")));
  CHECK_FALSE(c.holds);
  CHECK(c.separator == SymbolWord{"y"});
  CHECK(nfa_over_vprime(parse_term("x . ~x")).accepts({"x", "~x"}));
}

TEST_CASE("complements over the variable alphabet") {
  const auto incl = [](const char* a, const char* b) {
    return lang_incl(nfa_over_v(parse_term(a), kXY), nfa_over_v(parse_term(b), kXY)).holds;
  };
  const auto equiv = [](const char* a, const char* b) {
    return lang_equiv(nfa_over_v(parse_term(a), kXY), nfa_over_v(parse_term(b), kXY)).holds;
  };
  CHECK(incl("y", "~x"));
  CHECK(equiv("~x", "~x . ~x"));
  CHECK(equiv("x + ~x", "~x . ~y"));
  CHECK(equiv("x + ~x", "~x + ~y"));
  CHECK_FALSE(incl("x", "~x"));

  const Nfa other = nfa_over_v(parse_term("~x"), kXY);
  CHECK(other.accepts({kOtherVariable}));
  CHECK(other.accepts({}));
  CHECK_FALSE(other.accepts({"x"}));
  CHECK_THROWS_AS(nfa_over_v(parse_term("z"), kXY), PreconditionError);
}

TEST_CASE("separators are shortest and least") {
  const auto c = lang_equiv(nfa_over_vprime(parse_term("x . y")), nfa_over_vprime(parse_term("y . x")));
  CHECK_FALSE(c.holds);
  CHECK(c.separator == SymbolWord{"x", "y"});
  const auto e = lang_incl(nfa_over_vprime(parse_term("x*")), nfa_over_vprime(parse_term("x")));
  CHECK(e.separator == SymbolWord{});
  CHECK(print(*e.separator) == "1");
  CHECK(print(SymbolWord{"x", "~y"}) == "x ~y");
}

TEST_CASE("automata agree with the textbook language") {
  testkit::TermShape shape;
  shape.max_size = 8;
  testkit::Rng rng(2);
  const auto over_v = symbol_words({"x", "y", kOtherVariable}, 4);
  const auto over_vprime = symbol_words({"x", "~x", "y", "~y"}, 3);
  for (int k = 0; k < 500; ++k) {
    const Term t = testkit::random_term(rng, shape);
    const Nfa v = nfa_over_v(t, kXY);
    for (const auto& w : over_v) REQUIRE(v.accepts(w) == testkit::lang_member(w, t));
    // Reading ~x as a plain symbol: compare against the term with each ~x
    // renamed to a fresh positive variable.
    const Nfa vp = nfa_over_vprime(t);
    const auto renamed = [&](const auto& self, const Term& u) -> Term {
      switch (u.kind()) {
        case TermKind::cvar: return Term::var("~" + u.name());
        case TermKind::unite: return Term::unite(self(self, u.left()), self(self, u.right()));
        case TermKind::concat: return Term::concat(self(self, u.left()), self(self, u.right()));
        case TermKind::star: return Term::star(self(self, u.body()));
        default: return u;
      }
    };
    const Term plain = renamed(renamed, t);
    for (const auto& w : over_vprime) REQUIRE(vp.accepts(w) == testkit::lang_member(w, plain));
  }
}

TEST_CASE("inclusion agrees with word-by-word comparison") {
  testkit::TermShape shape;
  shape.max_size = 6;
  testkit::Rng rng(6);
  const auto words = symbol_words({"x", "y", kOtherVariable}, 5);
  for (int k = 0; k < 300; ++k) {
    const Term a = testkit::random_term(rng, shape);
    const Term b = testkit::random_term(rng, shape);
    const Comparison c = lang_incl(nfa_over_v(a, kXY), nfa_over_v(b, kXY));
    bool short_gap = false;
    for (const auto& w : words) {
      if (testkit::lang_member(w, a) && !testkit::lang_member(w, b)) {
        short_gap = true;
        break;
      }
    }
    INFO(print(a) << " <= " << print(b));
    if (short_gap) REQUIRE_FALSE(c.holds);
    REQUIRE(c.holds == !c.separator.has_value());
    if (c.separator) {
      REQUIRE(testkit::lang_member(*c.separator, a));
      REQUIRE_FALSE(testkit::lang_member(*c.separator, b));
    }
  }
}

TEST_CASE("regular-language equality without complements") {
  CHECK(ka_lang_decide(parse_term("x* . x*"), parse_term("x*")));
  CHECK(ka_lang_decide(parse_term("(x + y)*"), parse_term("(x* . y*)*")));
  CHECK(ka_lang_decide(parse_term("x . (y . x)*"), parse_term("(x . y)* . x")));
  CHECK_FALSE(ka_lang_decide(parse_term("x . y"), parse_term("y . x")));
  CHECK_THROWS_AS(ka_lang_decide(parse_term("~x"), parse_term("x")), PreconditionError);
}
