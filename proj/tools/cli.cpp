#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "kavc/acceptance.hpp"
#include "kavc/classical.hpp"
#include "kavc/decision.hpp"
#include "kavc/json.hpp"
#include "kavc/separation.hpp"

namespace kavc {

namespace {

using ojson = nlohmann::ordered_json;

struct Config {
  std::size_t max_len = 8;
  bool json = false;
  std::uint64_t seed = 0;
  std::string over = "vprime";
};

// Malformed input text (as opposed to a misused command line).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::valid: return kExitValid;
    case Outcome::refuted: return kExitRefuted;
    case Outcome::unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

std::string letters_label(std::size_t n) {
  return std::to_string(n) + (n == 1 ? " letter" : " letters");
}

void print_valuation(std::ostream& out, const Valuation& v, const LetterWord& witness) {
  out << "  valuation over " << letters_label(v.alphabet_size()) << ": " << print(v) << '\n';
  out << "  witness: " << print(witness) << '\n';
}

void print_verdict(std::ostream& out, const std::string& label, const Verdict& v) {
  out << label << ": " << to_string(v.outcome) << " (" << to_string(v.procedure);
  if (v.bound) out << ", words up to length " << *v.bound;
  out << ")\n";
  if (v.counterexample) {
    print_valuation(out, v.counterexample->valuation, v.counterexample->witness);
    if (v.counterexample->lhs_word) {
      out << "  left-hand word: " << print(*v.counterexample->lhs_word) << '\n';
    }
  }
}

// Every query variable gets an explicit entry, empty if unconstrained.
Verdict completed(Verdict v, const Term& a, const Term& b) {
  if (!v.counterexample) return v;
  auto vars = variables(a);
  const auto more = variables(b);
  vars.insert(more.begin(), more.end());
  v.counterexample->valuation = v.counterexample->valuation.completed(vars);
  return v;
}

LitWord parse_word(const std::string& text) {
  const Term t = parse_term(text);
  auto w = as_literal_word(t);
  if (!w) throw PreconditionError("not a literal word: " + text);
  return *w;
}

// ---------------------------------------------------------------------------

int cmd_decide(const Config& cfg, const std::string& text, std::ostream& out) {
  const Query q = parse_query(text);
  DecisionOptions opts;
  opts.max_len = cfg.max_len;
  QueryVerdict qv = decide(q, opts);
  qv.forward = completed(std::move(qv.forward), q.lhs, q.rhs);
  if (qv.backward) qv.backward = completed(std::move(*qv.backward), q.lhs, q.rhs);

  const Query forward{q.lhs, q.rhs, Relation::leq};
  const Query backward{q.rhs, q.lhs, Relation::leq};
  if (cfg.json) {
    ojson doc;
    doc["query"] = print(q);
    doc["verdict"] = to_string(qv.outcome());
    ojson parts = ojson::array();
    auto add = [&](const Query& part, const Verdict& v, Direction d) {
      ojson j;
      j["inclusion"] = print(part);
      if (v.refuted()) j["direction"] = to_string(d);
      const ojson verdict = to_json(v);
      for (const auto& [key, value] : verdict.items()) j[key] = value;
      parts.push_back(std::move(j));
    };
    add(forward, qv.forward, Direction::lhs_not_in_rhs);
    if (qv.backward) add(backward, *qv.backward, Direction::rhs_not_in_lhs);
    doc["inclusions"] = std::move(parts);
    out << doc.dump(2) << '\n';
  } else {
    out << "query: " << print(q) << '\n';
    out << "verdict: " << to_string(qv.outcome()) << '\n';
    print_verdict(out, print(forward), qv.forward);
    if (qv.backward) print_verdict(out, print(backward), *qv.backward);
  }
  return exit_for(qv.outcome());
}

void emit_separation(const Config& cfg, std::ostream& out, const std::string& procedure,
                     const LitWord& w1, const LitWord& w2, const std::optional<Separation>& s) {
  if (cfg.json) {
    ojson doc;
    doc["verdict"] = s ? "refuted" : "valid";
    doc["procedure"] = procedure;
    if (s) doc["counterexample"] = to_json(*s);
    out << doc.dump(2) << '\n';
    return;
  }
  if (!s) {
    out << "equal: " << print(w1) << " and " << print(w2) << " are the same word\n";
    return;
  }
  const bool forward = s->direction == Direction::lhs_not_in_rhs;
  out << "refuted (" << procedure << "): " << print(forward ? w1 : w2) << " is not included in "
      << print(forward ? w2 : w1) << '\n';
  print_valuation(out, s->valuation, s->witness);
}

int cmd_separate(const Config& cfg, const std::string& a, const std::string& b, std::ostream& out) {
  const LitWord w1 = parse_word(a);
  const LitWord w2 = parse_word(b);
  auto s = separate_words(w1, w2);
  if (s) {
    auto vars = variables(w1);
    const auto more = variables(w2);
    vars.insert(more.begin(), more.end());
    s->valuation = s->valuation.completed(vars);
  }
  emit_separation(cfg, out, "separation", w1, w2, s);
  return s ? kExitRefuted : kExitValid;
}

int cmd_lang1(const Config& cfg, const std::string& a, const std::string& b, std::ostream& out) {
  const LitWord w1 = parse_word(a);
  const LitWord w2 = parse_word(b);
  const OneVariableVerdict r = lang1_decide(w1, w2);
  if (cfg.json) {
    ojson doc = to_json(r.verdict);
    if (r.direction) doc["counterexample"]["direction"] = to_string(*r.direction);
    out << doc.dump(2) << '\n';
  } else {
    const LiteralCounts c1 = literal_counts(w1);
    const LiteralCounts c2 = literal_counts(w2);
    out << "counts: " << print(w1) << " has (" << c1.pos << ", " << c1.neg << "), " << print(w2)
        << " has (" << c2.pos << ", " << c2.neg << ")\n";
    print_verdict(out, "one-letter equality", r.verdict);
    if (r.direction) out << "  direction: " << to_string(*r.direction) << '\n';
  }
  return exit_for(r.verdict.outcome);
}

int cmd_lang2(const Config& cfg, const std::string& a, const std::string& b, std::ostream& out) {
  const LitWord w1 = parse_word(a);
  const LitWord w2 = parse_word(b);
  const auto s = lang2_separate(w1, w2);
  const bool by_counts = literal_counts(w1) != literal_counts(w2);
  emit_separation(cfg, out, by_counts ? "lang1" : "lang2", w1, w2, s);
  return s ? kExitRefuted : kExitValid;
}

int cmd_langeq(const Config& cfg, const std::string& a, const std::string& b, std::ostream& out) {
  const Term t1 = parse_term(a);
  const Term t2 = parse_term(b);
  Comparison c;
  if (cfg.over == "v") {
    auto declared = variables(t1);
    const auto more = variables(t2);
    declared.insert(more.begin(), more.end());
    c = lang_equiv(nfa_over_v(t1, declared), nfa_over_v(t2, declared));
  } else {
    c = lang_equiv(nfa_over_vprime(t1), nfa_over_vprime(t2));
  }
  if (cfg.json) {
    ojson doc;
    doc["equivalent"] = c.holds;
    doc["separator"] = c.separator ? ojson(print(*c.separator)) : ojson(nullptr);
    out << doc.dump(2) << '\n';
  } else if (c.holds) {
    out << "equivalent\n";
  } else {
    out << "not equivalent; separator: " << print(*c.separator) << '\n';
  }
  return c.holds ? kExitValid : kExitRefuted;
}

int cmd_from_dnf(const Config& cfg, const std::string& path, std::istream& in, std::ostream& out) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  const Dnf phi = parse_dnf(text);
  const Term t = dnf_to_term(phi);
  const auto vars = variables(t);
  const Term z = Term::var(fresh_variable(vars, "_z").name);
  const Term top = top_expansion(vars);
  const Query identity{Term::one(), t, Relation::leq};
  const Query fresh{z, Term::concat(z, t), Relation::leq};
  const Query universality{top, Term::concat(top, t), Relation::leq};

  // Truth table, directly.
  const std::set<std::string> names = dnf_variables(phi);
  const std::vector<std::string> order(names.begin(), names.end());
  bool valid = true;
  for (std::uint64_t mask = 0; valid && mask < (std::uint64_t{1} << order.size()); ++mask) {
    bool any = false;
    for (const auto& clause : phi.clauses) {
      bool all = true;
      for (const auto& lit : clause) {
        const auto k = std::find(order.begin(), order.end(), lit.var) - order.begin();
        all = all && (((mask >> k) & 1U) != 0) != lit.negated;
      }
      any = any || all;
    }
    valid = any;
  }

  if (cfg.json) {
    ojson doc;
    doc["term"] = print(t);
    doc["identity"] = print(identity);
    doc["fresh_variable"] = print(fresh);
    doc["universality"] = print(universality);
    doc["valid"] = valid;
    out << doc.dump(2) << '\n';
  } else {
    out << "term: " << print(t) << '\n';
    out << "identity: " << print(identity) << '\n';
    out << "fresh-variable: " << print(fresh) << '\n';
    out << "universality: " << print(universality) << '\n';
    out << "truth table: " << (valid ? "valid" : "not valid") << '\n';
  }
  return valid ? kExitValid : kExitRefuted;
}

int cmd_selftest(const Config& cfg, int criterion, std::ostream& out, std::ostream& err) {
  AcceptanceOptions opts;
  opts.seed = cfg.seed;
  std::vector<CriterionReport> reports;
  if (criterion == 0) {
    reports = run_acceptance(opts);
  } else {
    reports.push_back(run_criterion(criterion, opts));
  }
  bool all = true;
  for (const auto& r : reports) all = all && r.passed();
  if (cfg.json) {
    ojson doc;
    doc["seed"] = cfg.seed;
    ojson list = ojson::array();
    for (const auto& r : reports) {
      ojson j;
      j["id"] = r.id;
      j["title"] = r.title;
      j["correct"] = r.correct;
      j["detail"] = r.detail;
      list.push_back(std::move(j));
    }
    doc["criteria"] = std::move(list);
    out << doc.dump(2) << '\n';
  } else {
    out << render(reports);
  }
  err << render_timings(reports);
  return all ? kExitValid : kExitRefuted;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Decide equations of Kleene algebra with variable complements over languages",
               "kavc"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--max-witness-len", cfg.max_len,
                 "longest left-hand literal word the bounded refuter tries")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_option("--seed", cfg.seed, "seed for the selftest corpora");
  app.add_option("--over", cfg.over, "alphabet for langeq")->check(CLI::IsMember({"vprime", "v"}));

  std::string first;
  std::string second;
  int criterion = 0;

  auto* decide_cmd = app.add_subcommand("decide", "decide \"<term> <= <term>\" or \"<term> = <term>\"");
  decide_cmd->add_option("query", first)->required();
  auto* separate_cmd = app.add_subcommand("separate", "separate two distinct literal words");
  auto* lang1_cmd = app.add_subcommand("lang1", "compare one-variable words over one letter");
  auto* lang2_cmd = app.add_subcommand("lang2", "separate one-variable words over two letters");
  auto* langeq_cmd = app.add_subcommand("langeq", "compare standard regular languages");
  for (auto* sub : {separate_cmd, lang1_cmd, lang2_cmd, langeq_cmd}) {
    sub->add_option("first", first)->required();
    sub->add_option("second", second)->required();
  }
  auto* dnf_cmd = app.add_subcommand("from-dnf", "emit the three reductions of a DNF formula");
  dnf_cmd->add_option("file", first, "DNF text file; standard input if absent or -");
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance battery");
  selftest_cmd->add_option("--criterion", criterion, "run a single criterion")
      ->check(CLI::Range(1, kCriterionCount));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitValid;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitValid;
  } catch (const CLI::ParseError& e) {
    err << "kavc: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (decide_cmd->parsed()) return cmd_decide(cfg, first, out);
    if (separate_cmd->parsed()) return cmd_separate(cfg, first, second, out);
    if (lang1_cmd->parsed()) return cmd_lang1(cfg, first, second, out);
    if (lang2_cmd->parsed()) return cmd_lang2(cfg, first, second, out);
    if (langeq_cmd->parsed()) return cmd_langeq(cfg, first, second, out);
    if (dnf_cmd->parsed()) return cmd_from_dnf(cfg, first, in, out);
    if (selftest_cmd->parsed()) return cmd_selftest(cfg, criterion, out, err);
  } catch (const ParseError& e) {
    err << "kavc: parse error at line " << e.line() << ", column " << e.column() << ": " << e.what()
        << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "kavc: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "kavc: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "kavc: no command\n";
  return kExitUsage;
}

}  // namespace kavc
