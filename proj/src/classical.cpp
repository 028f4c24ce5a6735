#include "kavc/classical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace kavc {

namespace {

using State = Nfa::State;
using StateSet = std::vector<State>;  // sorted

struct Fragment {
  State start;
  State end;
};

class Thompson {
 public:
  explicit Thompson(Nfa& nfa) : nfa_(nfa) {}

  template <class Leaf>
  Fragment build(const Term& t, Leaf&& leaf) {
    switch (t.kind()) {
      case TermKind::var:
      case TermKind::cvar:
        return leaf(t);
      case TermKind::one: {
        const Fragment f = fresh();
        nfa_.add_epsilon(f.start, f.end);
        return f;
      }
      case TermKind::zero:
        return fresh();
      case TermKind::unite: {
        const Fragment a = build(t.left(), leaf);
        const Fragment b = build(t.right(), leaf);
        const Fragment f = fresh();
        nfa_.add_epsilon(f.start, a.start);
        nfa_.add_epsilon(f.start, b.start);
        nfa_.add_epsilon(a.end, f.end);
        nfa_.add_epsilon(b.end, f.end);
        return f;
      }
      case TermKind::concat: {
        const Fragment a = build(t.left(), leaf);
        const Fragment b = build(t.right(), leaf);
        nfa_.add_epsilon(a.end, b.start);
        return {a.start, b.end};
      }
      case TermKind::star: {
        const Fragment a = build(t.body(), leaf);
        const Fragment f = fresh();
        nfa_.add_epsilon(f.start, a.start);
        nfa_.add_epsilon(f.start, f.end);
        nfa_.add_epsilon(a.end, a.start);
        nfa_.add_epsilon(a.end, f.end);
        return f;
      }
    }
    throw std::logic_error("unknown term kind");
  }

  Fragment fresh() { return {nfa_.add_state(), nfa_.add_state()}; }

  void finish(const Fragment& f) {
    nfa_.set_initial(f.start);
    nfa_.set_accepting(f.end);
  }

 private:
  Nfa& nfa_;
};

std::string literal_symbol(const Term& leaf) {
  return leaf.kind() == TermKind::cvar ? "~" + leaf.name() : leaf.name();
}

void collect_literal_symbols(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::var:
    case TermKind::cvar:
      out.insert(literal_symbol(t));
      break;
    case TermKind::one:
    case TermKind::zero:
      break;
    case TermKind::unite:
    case TermKind::concat:
      collect_literal_symbols(t.left(), out);
      collect_literal_symbols(t.right(), out);
      break;
    case TermKind::star:
      collect_literal_symbols(t.body(), out);
      break;
  }
}

bool has_complement(const Term& t) {
  switch (t.kind()) {
    case TermKind::cvar: return true;
    case TermKind::unite:
    case TermKind::concat: return has_complement(t.left()) || has_complement(t.right());
    case TermKind::star: return has_complement(t.body());
    default: return false;
  }
}

StateSet closure(const Nfa& nfa, StateSet seed) {
  std::vector<bool> seen(nfa.state_count(), false);
  std::vector<State> stack;
  for (State s : seed) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    for (const auto& e : nfa.edges(s)) {
      if (e.symbol == Nfa::kEpsilon && !seen[e.to]) {
        seen[e.to] = true;
        stack.push_back(e.to);
      }
    }
  }
  StateSet out;
  for (State s = 0; s < seen.size(); ++s) {
    if (seen[s]) out.push_back(s);
  }
  return out;
}

StateSet step(const Nfa& nfa, const StateSet& from, int symbol) {
  StateSet next;
  if (symbol < 0) return next;
  for (State s : from) {
    for (const auto& e : nfa.edges(s)) {
      if (e.symbol == symbol) next.push_back(e.to);
    }
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return closure(nfa, std::move(next));
}

bool any_accepting(const Nfa& nfa, const StateSet& set) {
  return std::any_of(set.begin(), set.end(), [&](State s) { return nfa.accepting(s); });
}

// Breadth-first walk of the product of both subset automata; stops at the
// first pair (in shortlex order of the words reaching it) where `bad` holds.
template <class Bad>
Comparison explore(const Nfa& a, const Nfa& b, Bad bad) {
  std::set<std::string> merged(a.alphabet().begin(), a.alphabet().end());
  merged.insert(b.alphabet().begin(), b.alphabet().end());
  const std::vector<std::string> symbols(merged.begin(), merged.end());

  using Pair = std::pair<StateSet, StateSet>;
  std::map<Pair, std::size_t> index;
  std::vector<Pair> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> parent;  // (pair, symbol)
  std::deque<std::size_t> queue;

  auto visit = [&](Pair p, std::size_t from, std::size_t symbol) {
    if (index.contains(p)) return;
    index.emplace(p, pairs.size());
    queue.push_back(pairs.size());
    pairs.push_back(std::move(p));
    parent.emplace_back(from, symbol);
  };
  visit({closure(a, {a.initial()}), closure(b, {b.initial()})}, 0, 0);

  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    const bool in_a = any_accepting(a, pairs[k].first);
    const bool in_b = any_accepting(b, pairs[k].second);
    if (bad(in_a, in_b)) {
      SymbolWord word;
      for (std::size_t at = k; at != 0; at = parent[at].first) {
        word.push_back(symbols[parent[at].second]);
      }
      std::reverse(word.begin(), word.end());
      return Comparison{false, std::move(word)};
    }
    for (std::size_t c = 0; c < symbols.size(); ++c) {
      Pair next{step(a, pairs[k].first, a.symbol_index(symbols[c])),
                step(b, pairs[k].second, b.symbol_index(symbols[c]))};
      visit(std::move(next), k, c);
    }
  }
  return Comparison{true, std::nullopt};
}

}  // namespace

std::string print(const SymbolWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) out += ' ';
    out += w[k];
  }
  return out;
}

Nfa::Nfa(std::vector<std::string> alphabet) : alphabet_(std::move(alphabet)) {
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
}

Nfa::State Nfa::add_state(bool accepting) {
  edges_.emplace_back();
  accepting_.push_back(accepting);
  return static_cast<State>(edges_.size() - 1);
}

void Nfa::set_accepting(State s, bool accepting) { accepting_.at(s) = accepting; }

void Nfa::set_initial(State s) {
  if (s >= edges_.size()) throw std::invalid_argument("unknown state");
  initial_ = s;
}

int Nfa::symbol_index(const std::string& symbol) const {
  const auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), symbol);
  if (it == alphabet_.end() || *it != symbol) return -1;
  return static_cast<int>(it - alphabet_.begin());
}

void Nfa::add_edge(State from, const std::string& symbol, State to) {
  const int c = symbol_index(symbol);
  if (c < 0) throw std::invalid_argument("symbol not in alphabet: " + symbol);
  if (from >= edges_.size() || to >= edges_.size()) throw std::invalid_argument("unknown state");
  edges_[from].push_back(Edge{c, to});
}

void Nfa::add_epsilon(State from, State to) {
  if (from >= edges_.size() || to >= edges_.size()) throw std::invalid_argument("unknown state");
  edges_[from].push_back(Edge{kEpsilon, to});
}

bool Nfa::accepts(const SymbolWord& w) const {
  if (edges_.empty()) return false;
  StateSet current = closure(*this, {initial_});
  for (const auto& symbol : w) {
    current = step(*this, current, symbol_index(symbol));
    if (current.empty()) return false;
  }
  return any_accepting(*this, current);
}

Nfa nfa_over_vprime(const Term& t) {
  std::set<std::string> symbols;
  collect_literal_symbols(t, symbols);
  Nfa nfa(std::vector<std::string>(symbols.begin(), symbols.end()));
  Thompson builder(nfa);
  const Fragment f = builder.build(t, [&](const Term& leaf) {
    const Fragment g = builder.fresh();
    nfa.add_edge(g.start, literal_symbol(leaf), g.end);
    return g;
  });
  builder.finish(f);
  return nfa;
}

Nfa nfa_over_v(const Term& t, const std::set<Variable>& declared) {
  for (const auto& x : variables(t)) {
    if (!declared.contains(x)) {
      throw PreconditionError("variable " + x.name + " is not in the declared alphabet");
    }
  }
  std::vector<std::string> symbols;
  for (const auto& x : declared) symbols.push_back(x.name);
  symbols.push_back(kOtherVariable);
  Nfa nfa(symbols);
  const std::vector<std::string>& sigma = nfa.alphabet();

  Thompson builder(nfa);
  const Fragment f = builder.build(t, [&](const Term& leaf) {
    const Fragment g = builder.fresh();
    if (leaf.kind() == TermKind::var) {
      nfa.add_edge(g.start, leaf.name(), g.end);
      return g;
    }
    // Everything but the one-letter word x: s0 start, s1 after exactly "x",
    // s2 after one other symbol, s3 after two or more symbols.
    const State s0 = g.start;
    const State s1 = nfa.add_state();
    const State s2 = nfa.add_state();
    const State s3 = nfa.add_state();
    for (const auto& c : sigma) {
      nfa.add_edge(s0, c, c == leaf.name() ? s1 : s2);
      nfa.add_edge(s1, c, s3);
      nfa.add_edge(s2, c, s3);
      nfa.add_edge(s3, c, s3);
    }
    for (const State s : {s0, s2, s3}) nfa.add_epsilon(s, g.end);
    return g;
  });
  builder.finish(f);
  return nfa;
}

Comparison lang_incl(const Nfa& a, const Nfa& b) {
  return explore(a, b, [](bool in_a, bool in_b) { return in_a && !in_b; });
}

Comparison lang_equiv(const Nfa& a, const Nfa& b) {
  return explore(a, b, [](bool in_a, bool in_b) { return in_a != in_b; });
}

bool ka_lang_decide(const Term& t1, const Term& t2) {
  if (has_complement(t1) || has_complement(t2)) {
    throw PreconditionError("classical comparison needs terms without complements");
  }
  return lang_equiv(nfa_over_vprime(t1), nfa_over_vprime(t2)).holds;
}

}  // namespace kavc
