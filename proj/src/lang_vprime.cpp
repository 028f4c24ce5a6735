// Shortlex enumeration of the literal-alphabet language of a term.
//
// The term is compiled to its position (Glushkov) automaton over literals;
// the enumerator walks the subset construction breadth-first. Each word
// reaches exactly one subset, so no word is produced twice.

#include <algorithm>
#include <map>

#include "kavc/term.hpp"

namespace kavc {

namespace {

using StateSet = std::vector<std::uint32_t>;

StateSet merged(const StateSet& a, const StateSet& b) {
  StateSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// State 0 is initial, state p + 1 is position p.
struct PositionAutomaton {
  std::vector<Literal> labels;            // per position
  std::vector<StateSet> successors;       // per state
  std::vector<bool> accepting;            // per state
  std::vector<bool> productive;           // per state: can reach acceptance

  explicit PositionAutomaton(const Term& t) {
    std::vector<StateSet> follow;
    const Summary root = summarize(t, follow);
    const std::size_t states = labels.size() + 1;
    successors.assign(states, {});
    accepting.assign(states, false);
    for (auto p : root.first) successors[0].push_back(p + 1);
    for (std::size_t p = 0; p < labels.size(); ++p) {
      for (auto q : follow[p]) successors[p + 1].push_back(q + 1);
    }
    accepting[0] = root.nullable;
    for (auto p : root.last) accepting[p + 1] = true;

    productive = accepting;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t s = 0; s < states; ++s) {
        if (productive[s]) continue;
        for (auto q : successors[s]) {
          if (productive[q]) {
            productive[s] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }

  struct Summary {
    bool nullable = false;
    StateSet first;
    StateSet last;
  };

  Summary summarize(const Term& t, std::vector<StateSet>& follow) {
    switch (t.kind()) {
      case TermKind::var:
      case TermKind::cvar: {
        const auto p = static_cast<std::uint32_t>(labels.size());
        labels.push_back(Literal{Variable{t.name()}, t.kind() == TermKind::cvar
                                                         ? Polarity::negative
                                                         : Polarity::positive});
        follow.emplace_back();
        return Summary{false, {p}, {p}};
      }
      case TermKind::one:
        return Summary{true, {}, {}};
      case TermKind::zero:
        return Summary{false, {}, {}};
      case TermKind::unite: {
        const Summary a = summarize(t.left(), follow);
        const Summary b = summarize(t.right(), follow);
        return Summary{a.nullable || b.nullable, merged(a.first, b.first), merged(a.last, b.last)};
      }
      case TermKind::concat: {
        const Summary a = summarize(t.left(), follow);
        const Summary b = summarize(t.right(), follow);
        for (auto p : a.last) follow[p] = merged(follow[p], b.first);
        return Summary{a.nullable && b.nullable,
                       a.nullable ? merged(a.first, b.first) : a.first,
                       b.nullable ? merged(a.last, b.last) : b.last};
      }
      case TermKind::star: {
        Summary a = summarize(t.body(), follow);
        for (auto p : a.last) follow[p] = merged(follow[p], a.first);
        a.nullable = true;
        return a;
      }
    }
    return {};
  }
};

}  // namespace

struct LangEnumerator::State {
  PositionAutomaton automaton;
  std::size_t max_len;
  std::size_t length = 0;
  std::vector<std::pair<LitWord, StateSet>> level;
  std::size_t cursor = 0;

  State(const Term& t, std::size_t bound) : automaton(t), max_len(bound) {
    if (automaton.productive[0]) level.push_back({LitWord{}, StateSet{0}});
  }

  bool accepts(const StateSet& states) const {
    return std::any_of(states.begin(), states.end(),
                       [&](std::uint32_t s) { return automaton.accepting[s]; });
  }

  void descend() {
    std::vector<std::pair<LitWord, StateSet>> next;
    for (const auto& [word, states] : level) {
      std::map<Literal, StateSet> moves;
      for (auto s : states) {
        for (auto q : automaton.successors[s]) {
          if (automaton.productive[q]) moves[automaton.labels[q - 1]].push_back(q);
        }
      }
      for (auto& [lit, targets] : moves) {
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        LitWord extended = word;
        extended.push_back(lit);
        next.emplace_back(std::move(extended), std::move(targets));
      }
    }
    level = std::move(next);
    cursor = 0;
    ++length;
  }
};

LangEnumerator::LangEnumerator(const Term& t, std::size_t max_len)
    : state_(std::make_unique<State>(t, max_len)) {}

LangEnumerator::~LangEnumerator() = default;
LangEnumerator::LangEnumerator(LangEnumerator&&) noexcept = default;
LangEnumerator& LangEnumerator::operator=(LangEnumerator&&) noexcept = default;

std::optional<LitWord> LangEnumerator::next() {
  State& st = *state_;
  for (;;) {
    while (st.cursor < st.level.size()) {
      const auto& entry = st.level[st.cursor++];
      if (st.accepts(entry.second)) return entry.first;
    }
    if (st.level.empty() || st.length >= st.max_len) return std::nullopt;
    st.descend();
  }
}

std::vector<LitWord> lang_vprime_enumerate(const Term& t, std::size_t max_len) {
  std::vector<LitWord> out;
  LangEnumerator words(t, max_len);
  while (auto w = words.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace kavc
