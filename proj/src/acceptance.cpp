#include "kavc/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "kavc/classical.hpp"
#include "kavc/decision.hpp"
#include "kavc/eval.hpp"
#include "kavc/json.hpp"
#include "kavc/separation.hpp"
#include "kavc/testkit/generators.hpp"
#include "kavc/testkit/oracle.hpp"

namespace kavc {

namespace {

using testkit::Rng;

// FNV-1a over everything a criterion produces, so that the determinism check
// compares outputs rather than just counts.
class Digest {
 public:
  void add(std::string_view s) {
    for (const char c : s) {
      hash_ ^= static_cast<unsigned char>(c);
      hash_ *= 1099511628211ULL;
    }
    hash_ ^= 0xff;
    hash_ *= 1099511628211ULL;
  }

  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
    return buf;
  }

 private:
  std::uint64_t hash_ = 1469598103934665603ULL;
};

// Collects the first few disagreements for the report.
class Checks {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++count_;
    if (ok) return;
    ++failed_;
    if (examples_.size() < 3) examples_.push_back(what());
  }

  bool ok() const { return failed_ == 0; }

  std::string summary() const {
    std::string out = std::to_string(count_ - failed_) + "/" + std::to_string(count_) + " checks";
    for (const auto& e : examples_) out += "; FAILED " + e;
    return out;
  }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> examples_;
};

struct Result {
  bool correct;
  std::string detail;
};

Rng rng_for(const AcceptanceOptions& opts, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(id)};
  return Rng(seq);
}

DecisionOptions decision_options(const AcceptanceOptions& opts) {
  DecisionOptions d;
  d.execution = opts.execution;
  return d;
}

std::set<Variable> variables_of(const Term& a, const Term& b) {
  auto out = variables(a);
  const auto more = variables(b);
  out.insert(more.begin(), more.end());
  return out;
}

bool verified(const QueryVerdict& qv, const Query& q) {
  if (qv.forward.counterexample && !verify_counterexample(q.lhs, q.rhs, *qv.forward.counterexample)) {
    return false;
  }
  if (qv.backward && qv.backward->counterexample &&
      !verify_counterexample(q.rhs, q.lhs, *qv.backward->counterexample)) {
    return false;
  }
  return true;
}

std::string query_json(const QueryVerdict& qv) {
  std::string out = to_json(qv.forward).dump();
  if (qv.backward) out += to_json(*qv.backward).dump();
  return out;
}

// ---------------------------------------------------------------------------

Result divergence_corpus(const AcceptanceOptions& opts) {
  const Term x = Term::var("x");
  const Term y = Term::var("y");
  const Term nx = Term::cvar("x");
  const Term ny = Term::cvar("y");
  const Term top = top_expansion({Variable{"x"}, Variable{"y"}});
  const std::vector<Query> corpus{
      {y, nx, Relation::leq},
      {nx, Term::concat(nx, nx), Relation::eq},
      {top, Term::concat(nx, ny), Relation::eq},
      {top, Term::unite(nx, ny), Relation::eq},
  };

  Checks checks;
  Digest digest;
  for (const auto& q : corpus) {
    const std::string name = print(q);
    const QueryVerdict qv = decide(q, decision_options(opts));
    checks.expect(qv.outcome() == Outcome::refuted, [&] { return name + " not refuted"; });
    checks.expect(verified(qv, q), [&] { return name + " counterexample does not verify"; });

    const auto declared = variables_of(q.lhs, q.rhs);
    const Nfa a = nfa_over_v(q.lhs, declared);
    const Nfa b = nfa_over_v(q.rhs, declared);
    const bool related = q.relation == Relation::leq ? lang_incl(a, b).holds : lang_equiv(a, b).holds;
    checks.expect(related, [&] { return name + " not related in the standard language model"; });
    digest.add(name);
    digest.add(query_json(qv));
  }
  return {checks.ok(), std::to_string(corpus.size()) + " queries refuted and lang-related, " +
                           checks.summary() + ", digest " + digest.hex()};
}

// ---------------------------------------------------------------------------

Result dnf_reductions(const AcceptanceOptions& opts) {
  Rng rng = rng_for(opts, 2);
  const DecisionOptions d = decision_options(opts);
  Checks checks;
  Digest digest;
  std::size_t valid = 0;
  for (int k = 0; k < 200; ++k) {
    const Dnf phi = testkit::random_dnf(rng, 4, 4);
    const Term t = dnf_to_term(phi);
    const bool truth = testkit::dnf_valid(phi);
    valid += truth ? 1 : 0;

    const Verdict identity = decide_identity_inclusion(t, d);
    const Variable z = fresh_variable(variables(t), "_z");
    const Verdict fresh = decide_inclusion(Term::var(z.name), Term::concat(Term::var(z.name), t), d);
    const Verdict universal = decide_universality(Term::concat(top_expansion(variables(t)), t), d);

    const std::string name = print(t);
    checks.expect(identity.valid() == truth, [&] { return "identity on " + name; });
    checks.expect(fresh.valid() == truth, [&] { return "fresh-variable form of " + name; });
    checks.expect(universal.valid() == truth, [&] { return "universality form of " + name; });
    checks.expect(!identity.unknown() && !fresh.unknown() && !universal.unknown(),
                  [&] { return "unknown verdict on " + name; });
    digest.add(print(phi));
    digest.add(to_json(identity).dump() + to_json(fresh).dump() + to_json(universal).dump());
  }
  return {checks.ok(), "200 formulas (" + std::to_string(valid) + " valid), " + checks.summary() +
                           ", digest " + digest.hex()};
}

// ---------------------------------------------------------------------------

bool separation_holds(const Separation& s, const LitWord& w1, const LitWord& w2) {
  const bool forward = s.direction == Direction::lhs_not_in_rhs;
  const Term in = to_term(forward ? w1 : w2);
  const Term out = to_term(forward ? w2 : w1);
  return testkit::split_member(s.witness, in, s.valuation) &&
         !testkit::split_member(s.witness, out, s.valuation);
}

Result literal_words(const AcceptanceOptions& opts) {
  const auto words = testkit::literal_words({"x", "y"}, 3);
  const DecisionOptions d = decision_options(opts);
  Checks checks;
  Digest digest;
  std::size_t conflicts = 0;
  std::string first_conflict;
  for (const auto& w1 : words) {
    for (const auto& w2 : words) {
      const Query q{to_term(w1), to_term(w2), Relation::eq};
      const std::string name = print(q);
      const QueryVerdict qv = decide(q, d);
      checks.expect((qv.outcome() == Outcome::valid) == (w1 == w2), [&] { return name; });
      checks.expect(verified(qv, q), [&] { return name + " counterexample"; });
      digest.add(query_json(qv));

      if (w1 == w2) continue;
      try {
        table_valuation(w1, w2);
      } catch (const ConstraintConflict& e) {
        if (conflicts++ == 0) first_conflict = e.what();
      }
      const auto s = separate_words(w1, w2);
      checks.expect(s && separation_holds(*s, w1, w2), [&] { return name + " separator"; });
      if (s) digest.add(to_json(*s).dump());
    }
  }
  // The constraint table is required never to conflict; every conflict
  // fails the criterion even though the fallback still separates the pair.
  std::string detail = std::to_string(words.size()) + " words, " +
                       std::to_string(words.size() * words.size()) + " pairs, " +
                       std::to_string(conflicts) + " constraint-table conflicts";
  if (conflicts != 0) detail += " (first: " + first_conflict + ")";
  return {checks.ok() && conflicts == 0,
          detail + ", " + checks.summary() + ", digest " + digest.hex()};
}

// ---------------------------------------------------------------------------

LetterWord power(std::uint32_t letter, std::size_t k) { return LetterWord(k, Letter{letter}); }

Result one_variable_words(const AcceptanceOptions&) {
  const auto words = testkit::literal_words({"z"}, 5);
  Checks checks;
  Digest digest;

  // Four-letter subsets {1, a, aa, aaa} for the commutativity spot check.
  std::vector<Valuation> unary;
  for (unsigned mask = 0; mask < 16; ++mask) {
    FiniteWords s;
    for (std::size_t k = 0; k < 4; ++k) {
      if ((mask >> k) & 1U) s.words.insert(power(0, k));
    }
    unary.emplace_back(1, std::map<Variable, LangSpec>{{Variable{"z"}, s}});
  }

  std::size_t equal_counts = 0;
  std::size_t moved_b = 0;
  for (const auto& w1 : words) {
    for (const auto& w2 : words) {
      const std::string name = print(w1) + " vs " + print(w2);
      const bool same_counts = literal_counts(w1) == literal_counts(w2);
      const OneVariableVerdict one = lang1_decide(w1, w2);
      checks.expect(one.verdict.valid() == same_counts, [&] { return "one-letter " + name; });
      if (one.verdict.refuted()) {
        const auto& cex = *one.verdict.counterexample;
        const bool forward = *one.direction == Direction::lhs_not_in_rhs;
        checks.expect(testkit::split_member(cex.witness, to_term(forward ? w1 : w2), cex.valuation) &&
                          !testkit::split_member(cex.witness, to_term(forward ? w2 : w1),
                                                 cex.valuation),
                      [&] { return "one-letter witness " + name; });
        digest.add(to_json(one.verdict).dump());
      } else {
        ++equal_counts;
        const Term t1 = to_term(w1);
        const Term t2 = to_term(w2);
        for (const auto& v : unary) {
          for (std::size_t k = 0; k <= 6; ++k) {
            const LetterWord a = power(0, k);
            checks.expect(testkit::split_member(a, t1, v) == testkit::split_member(a, t2, v),
                          [&] { return "one-letter commutativity " + name; });
          }
        }
      }

      const auto two = lang2_separate(w1, w2);
      checks.expect(two.has_value() == (w1 != w2), [&] { return "two-letter " + name; });
      if (two) {
        checks.expect(separation_holds(*two, w1, w2), [&] { return "two-letter witness " + name; });
        moved_b += two->fallback == Fallback::witness_rejected ? 1 : 0;
        digest.add(to_json(*two).dump());
      }
      const bool lang2_equal = one.verdict.valid() && !two;
      checks.expect(lang2_equal == (w1 == w2), [&] { return "two-letter equality " + name; });
    }
  }

  // The separating language equals "non-empty, starts and ends with l0".
  const LetterRegex ends = LetterRegex::parse("l0 + l0 (l0 + l1)* l0");
  std::vector<LetterWord> layer{LetterWord{}};
  for (std::size_t len = 0; len <= 6; ++len) {
    std::vector<LetterWord> next;
    for (const auto& w : layer) {
      const bool expected = !w.empty() && w.front().index == 0 && w.back().index == 0;
      checks.expect(ends.matches(w) == expected, [&] { return "regex on " + print(w); });
      for (std::uint32_t a = 0; a < 2; ++a) {
        next.push_back(w);
        next.back().push_back(Letter{a});
      }
    }
    layer = std::move(next);
  }

  return {checks.ok(), std::to_string(words.size() * words.size()) + " pairs (" +
                           std::to_string(equal_counts) + " with equal counts, " +
                           std::to_string(moved_b) + " with the b moved off the first differing run), " +
                           checks.summary() + ", digest " + digest.hex()};
}

// ---------------------------------------------------------------------------

bool complete(const Verdict& v) {
  return v.procedure != Procedure::bounded || !v.unknown();
}

// A pair likely to be related: t2 extends or rearranges t1.
std::pair<Term, Term> random_pair(Rng& rng, const testkit::TermShape& shape) {
  for (;;) {
    const Term t1 = testkit::random_term(rng, shape);
    Term t2 = testkit::random_term(rng, shape);
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0:
        break;
      case 1:
        t2 = Term::unite(t1, t2);
        break;
      case 2:
        if (t1.kind() == TermKind::unite || t1.kind() == TermKind::concat) {
          // Swap operands: equal for union, usually not for composition.
          t2 = t1.kind() == TermKind::unite ? Term::unite(t1.right(), t1.left())
                                           : Term::concat(t1.right(), t1.left());
        } else if (t1.kind() == TermKind::star) {
          t2 = Term::unite(Term::one(), Term::concat(t1.body(), t1));
        }
        break;
    }
    if (t2.size() <= shape.max_size) return {t1, t2};
  }
}

Result classical_agreement(const AcceptanceOptions& opts) {
  Rng rng = rng_for(opts, 5);
  testkit::TermShape shape;
  shape.variables = {"x", "y", "z"};
  shape.max_size = 8;
  shape.complements = false;
  const DecisionOptions d = decision_options(opts);

  Checks checks;
  Digest digest;
  std::size_t complete_directions = 0;
  std::size_t both_complete = 0;
  std::size_t lang_equal = 0;
  for (int k = 0; k < 300; ++k) {
    const auto [t1, t2] = random_pair(rng, shape);
    const std::string name = print(t1) + " = " + print(t2);
    const Nfa a = nfa_over_vprime(t1);
    const Nfa b = nfa_over_vprime(t2);
    const bool equal = ka_lang_decide(t1, t2);
    lang_equal += equal ? 1 : 0;

    const Verdict forward = decide_inclusion(t1, t2, d);
    const Verdict backward = decide_inclusion(t2, t1, d);
    const bool incl_forward = lang_incl(a, b).holds;
    const bool incl_backward = lang_incl(b, a).holds;
    for (const auto& [v, incl] : {std::pair{forward, incl_forward}, std::pair{backward, incl_backward}}) {
      if (!complete(v)) {
        checks.expect(!(v.refuted() && incl), [&] { return "refuted an included direction of " + name; });
        continue;
      }
      ++complete_directions;
      checks.expect(v.valid() == incl, [&] { return "complete verdict on " + name; });
    }
    if (complete(forward) && complete(backward)) {
      ++both_complete;
      checks.expect((forward.valid() && backward.valid()) == equal, [&] { return name; });
    }
    const Verdict b1 = refute_bounded(t1, t2, 6, d);
    const Verdict b2 = refute_bounded(t2, t1, 6, d);
    checks.expect(!(b1.refuted() && incl_forward) && !(b2.refuted() && incl_backward),
                  [&] { return "bounded refuter on " + name; });
    digest.add(name);
    digest.add(to_json(forward).dump() + to_json(backward).dump() + to_json(b1).dump() +
               to_json(b2).dump());
  }
  return {checks.ok(), "300 pairs (" + std::to_string(lang_equal) + " lang-equal, " +
                           std::to_string(both_complete) + " decided completely both ways, " +
                           std::to_string(complete_directions) + " complete directions), " +
                           checks.summary() + ", digest " + digest.hex()};
}

// ---------------------------------------------------------------------------

// Every valuation over n letters assigning each of x, y a subset of the
// factor words of l0 ... l(n-1).
std::vector<Valuation> factor_valuations(std::size_t n) {
  std::set<LetterWord> factor_set;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) factor_set.insert(factor_word({i, j}));
  }
  const std::vector<LetterWord> factors(factor_set.begin(), factor_set.end());
  const std::uint64_t per_var = std::uint64_t{1} << factors.size();
  std::vector<Valuation> out;
  for (std::uint64_t a = 0; a < per_var; ++a) {
    for (std::uint64_t b = 0; b < per_var; ++b) {
      FiniteWords sx;
      FiniteWords sy;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if ((a >> k) & 1U) sx.words.insert(factors[k]);
        if ((b >> k) & 1U) sy.words.insert(factors[k]);
      }
      out.emplace_back(n, std::map<Variable, LangSpec>{{Variable{"x"}, sx}, {Variable{"y"}, sy}});
    }
  }
  return out;
}

Result evaluator_agreement(const AcceptanceOptions&) {
  testkit::TermShape shape;
  shape.variables = {"x", "y"};
  const auto terms = testkit::terms_up_to(6, shape);
  Checks checks;
  Digest digest;
  std::size_t valuations = 0;
  std::uint64_t true_entries = 0;
  for (std::size_t n = 0; n <= 2; ++n) {
    const testkit::NaiveLanguage naive(n, n);
    const auto vals = factor_valuations(n);
    valuations += vals.size();
    for (const auto& t : terms) {
      for (const auto& v : vals) {
        const MembershipTable table = eval_factors(t, v);
        const std::uint64_t expected = naive.evaluate(t, v);
        bool agree = true;
        for (std::size_t i = 0; i <= n; ++i) {
          for (std::size_t j = i; j <= n; ++j) {
            const bool got = table.contains({i, j});
            true_entries += got ? 1 : 0;
            agree = agree && got == (((expected >> naive.index_of(factor_word({i, j}))) & 1U) != 0);
          }
        }
        checks.expect(agree, [&] { return print(t) + " under " + print(v); });
      }
    }
  }
  digest.add(std::to_string(true_entries));
  return {checks.ok(), std::to_string(terms.size()) + " terms x " + std::to_string(valuations) +
                           " valuations, " + std::to_string(true_entries) + " true entries, " +
                           checks.summary() + ", digest " + digest.hex()};
}

// ---------------------------------------------------------------------------

LangSpec random_spec(Rng& rng) {
  static const std::vector<std::string> pool{
      "l0", "l0 l1*", "(l0 + l1)*", "1 + l1", "l0 + l0 (l0 + l1)* l0", "(l0 l1)*", "l1 l1 + 1",
  };
  std::uniform_int_distribution<int> coin(0, 9);
  if (coin(rng) < 4) {
    return LetterRegex::parse(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
  }
  FiniteWords s;
  for (const auto& w : std::vector<LetterWord>{{}, {{0}}, {{1}}, {{0}, {0}}, {{0}, {1}}, {{1}, {0}}, {{1}, {1}}}) {
    if (coin(rng) < 5) s.words.insert(w);
  }
  return s;
}

Result words_to_letters_property(const AcceptanceOptions& opts) {
  Rng rng = rng_for(opts, 7);
  testkit::TermShape shape;
  shape.variables = {"x", "y"};
  shape.max_size = 6;
  Checks checks;
  Digest digest;
  std::uint64_t factors_in = 0;
  for (int k = 0; k < 10000; ++k) {
    const Term t = testkit::random_term(rng, shape);
    Valuation v(2);
    for (const char* name : {"x", "y"}) {
      if (std::uniform_int_distribution<int>(0, 9)(rng) != 0) v.assign(Variable{name}, random_spec(rng));
    }
    std::vector<LetterWord> parts(std::uniform_int_distribution<std::size_t>(0, 3)(rng));
    for (auto& p : parts) {
      p.resize(std::uniform_int_distribution<std::size_t>(0, 2)(rng));
      for (auto& l : p) l.index = std::uniform_int_distribution<std::uint32_t>(0, 1)(rng);
    }
    const Valuation abstract = words_to_letters(v, parts);
    const MembershipTable table = eval_factors(t, abstract);
    for (std::size_t i = 0; i <= parts.size(); ++i) {
      for (std::size_t j = i; j <= parts.size(); ++j) {
        if (!table.contains({i, j})) continue;
        ++factors_in;
        LetterWord joined;
        for (std::size_t p = i; p < j; ++p) joined.insert(joined.end(), parts[p].begin(), parts[p].end());
        checks.expect(member(joined, t, v), [&] {
          return print(t) + " under " + print(v) + " at " + std::to_string(i) + ".." + std::to_string(j);
        });
      }
    }
    digest.add(print(t));
    digest.add(print(v));
  }
  return {checks.ok(), "10000 instances, " + std::to_string(factors_in) + " factors in the abstraction, " +
                           checks.summary() + ", digest " + digest.hex()};
}

// ---------------------------------------------------------------------------

struct Criterion {
  int id;
  const char* title;
  double budget;
  Result (*run)(const AcceptanceOptions&);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "divergence corpus: LANG-refuted yet lang-related", 1.0, divergence_corpus},
      {2, "DNF validity = identity / fresh-variable / universality forms", 10.0, dnf_reductions},
      {3, "literal words: equal iff identical, separators verify", 60.0, literal_words},
      {4, "one-variable words: counting, two-letter separators", 30.0, one_variable_words},
      {5, "complement-free pairs agree with automata", 60.0, classical_agreement},
      {6, "factor tables = naive language evaluation", 60.0, evaluator_agreement},
      {7, "words-to-letters abstraction is sound", 30.0, words_to_letters_property},
  };
  return all;
}

CriterionReport timed(const Criterion& c, const AcceptanceOptions& opts) {
  CriterionReport r;
  r.id = c.id;
  r.title = c.title;
  r.budget_seconds = c.budget;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Result o = c.run(opts);
    r.correct = o.correct;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.correct = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

constexpr double kDeterminismBudget = 300.0;

CriterionReport determinism(const std::vector<CriterionReport>& first, const AcceptanceOptions& opts) {
  CriterionReport r;
  r.id = 8;
  r.title = "determinism: same seed, identical reports";
  r.budget_seconds = kDeterminismBudget;
  const auto start = std::chrono::steady_clock::now();
  std::vector<CriterionReport> second;
  for (const auto& c : criteria()) second.push_back(timed(c, opts));
  const bool same = render(first) == render(second);
  r.correct = same;
  r.detail = same ? "criteria 1-7 rerun with identical reports"
                  : "reports differ on rerun:\n" + render(first) + render(second);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

CriterionReport run_criterion(int id, const AcceptanceOptions& opts) {
  if (id == 8) {
    std::vector<CriterionReport> first;
    for (const auto& c : criteria()) first.push_back(timed(c, opts));
    return determinism(first, opts);
  }
  for (const auto& c : criteria()) {
    if (c.id == id) return timed(c, opts);
  }
  throw std::out_of_range("no acceptance criterion " + std::to_string(id));
}

std::vector<CriterionReport> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionReport> out;
  for (const auto& c : criteria()) out.push_back(timed(c, opts));
  out.push_back(determinism(out, opts));
  return out;
}

std::string render(const std::vector<CriterionReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << (r.correct ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.title << ": " << r.detail << '\n';
  }
  return out.str();
}

std::string render_timings(const std::vector<CriterionReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d: %.2fs (budget %.0fs)%s", r.id, r.seconds, r.budget_seconds,
                  r.seconds <= r.budget_seconds ? "" : " OVER BUDGET");
    out << buf << '\n';
  }
  return out.str();
}

}  // namespace kavc
