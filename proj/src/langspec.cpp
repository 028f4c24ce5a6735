#include "kavc/langspec.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

#include "kavc/term.hpp"

namespace kavc {

namespace {

enum class RxKind : std::uint8_t { zero, one, letter, alt, cat, star };

// Parsed syntax, kept verbatim for printing.
struct Syntax {
  RxKind kind = RxKind::zero;
  std::uint32_t letter = 0;
  std::vector<Syntax> kids;
};

class RegexParser {
 public:
  explicit RegexParser(std::string_view text) : text_(text) {}

  Syntax parse() {
    Syntax out = alt();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("letter regex: " + what, 1, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool atom_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == 'l' || c == '0' || c == '1' || c == '(';
  }

  Syntax alt() {
    Syntax out = cat();
    while (at('+')) {
      ++pos_;
      out = Syntax{RxKind::alt, 0, {std::move(out), cat()}};
    }
    return out;
  }

  Syntax cat() {
    Syntax out = rep();
    for (;;) {
      if (at('.')) {
        ++pos_;
      } else if (!atom_start()) {
        break;
      }
      out = Syntax{RxKind::cat, 0, {std::move(out), rep()}};
    }
    return out;
  }

  Syntax rep() {
    Syntax out = atom();
    while (at('*')) {
      ++pos_;
      out = Syntax{RxKind::star, 0, {std::move(out)}};
    }
    return out;
  }

  Syntax atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected an atom, found end of input");
    const char c = text_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("numeric constants are 0 and 1 only");
      }
      return Syntax{c == '0' ? RxKind::zero : RxKind::one, 0, {}};
    }
    if (c == '(') {
      ++pos_;
      Syntax inner = alt();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'l') {
      ++pos_;
      const std::size_t start = pos_;
      std::uint64_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (value > std::numeric_limits<std::uint32_t>::max() / 2) fail("letter index too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected digits after 'l'");
      return Syntax{RxKind::letter, static_cast<std::uint32_t>(value), {}};
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Syntax& s) {
  switch (s.kind) {
    case RxKind::alt: return 0;
    case RxKind::cat: return 1;
    case RxKind::star: return 2;
    default: return 3;
  }
}

void print_syntax(const Syntax& s, int min_prec, std::string& out) {
  const bool parens = precedence(s) < min_prec;
  if (parens) out += '(';
  switch (s.kind) {
    case RxKind::zero: out += '0'; break;
    case RxKind::one: out += '1'; break;
    case RxKind::letter:
      out += 'l';
      out += std::to_string(s.letter);
      break;
    case RxKind::alt:
      print_syntax(s.kids[0], 0, out);
      out += " + ";
      print_syntax(s.kids[1], 1, out);
      break;
    case RxKind::cat:
      print_syntax(s.kids[0], 1, out);
      out += ' ';
      print_syntax(s.kids[1], 2, out);
      break;
    case RxKind::star:
      print_syntax(s.kids[0], 2, out);
      out += '*';
      break;
  }
  if (parens) out += ')';
}

void collect_letters(const Syntax& s, std::vector<std::uint32_t>& out) {
  if (s.kind == RxKind::letter) out.push_back(s.letter);
  for (const auto& k : s.kids) collect_letters(k, out);
}

// Hash-consed regex nodes with smart constructors that normalise unions up
// to associativity, commutativity and idempotence. Under that normalisation
// every regex has finitely many distinct derivatives.
class DerivativePool {
 public:
  static constexpr std::uint32_t kZero = 0;
  static constexpr std::uint32_t kOne = 1;

  DerivativePool() {
    intern(RxKind::zero, 0, {});
    intern(RxKind::one, 0, {});
  }

  std::uint32_t build(const Syntax& s) {
    switch (s.kind) {
      case RxKind::zero: return kZero;
      case RxKind::one: return kOne;
      case RxKind::letter: return intern(RxKind::letter, s.letter, {});
      case RxKind::alt: return alt({build(s.kids[0]), build(s.kids[1])});
      case RxKind::cat: return cat(build(s.kids[0]), build(s.kids[1]));
      case RxKind::star: return star(build(s.kids[0]));
    }
    return kZero;
  }

  bool nullable(std::uint32_t id) {
    const Node& n = nodes_[id];
    switch (n.kind) {
      case RxKind::zero:
      case RxKind::letter:
        return false;
      case RxKind::one:
      case RxKind::star:
        return true;
      case RxKind::alt:
        return std::any_of(n.kids.begin(), n.kids.end(),
                           [&](std::uint32_t k) { return nullable(k); });
      case RxKind::cat:
        return nullable(n.kids[0]) && nullable(n.kids[1]);
    }
    return false;
  }

  std::uint32_t derive(std::uint32_t id, std::uint32_t letter) {
    const auto key = std::make_pair(id, letter);
    if (auto it = derivatives_.find(key); it != derivatives_.end()) return it->second;
    const Node n = nodes_[id];
    std::uint32_t out = kZero;
    switch (n.kind) {
      case RxKind::zero:
      case RxKind::one:
        out = kZero;
        break;
      case RxKind::letter:
        out = n.letter == letter ? kOne : kZero;
        break;
      case RxKind::alt: {
        std::vector<std::uint32_t> parts;
        for (auto k : n.kids) parts.push_back(derive(k, letter));
        out = alt(std::move(parts));
        break;
      }
      case RxKind::cat: {
        const std::uint32_t head = cat(derive(n.kids[0], letter), n.kids[1]);
        out = nullable(n.kids[0]) ? alt({head, derive(n.kids[1], letter)}) : head;
        break;
      }
      case RxKind::star:
        out = cat(derive(n.kids[0], letter), id);
        break;
    }
    derivatives_.emplace(key, out);
    return out;
  }

 private:
  struct Node {
    RxKind kind;
    std::uint32_t letter;
    std::vector<std::uint32_t> kids;
  };

  std::uint32_t intern(RxKind kind, std::uint32_t letter, std::vector<std::uint32_t> kids) {
    auto key = std::make_tuple(kind, letter, kids);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(Node{kind, letter, std::move(kids)});
    index_.emplace(std::move(key), id);
    return id;
  }

  std::uint32_t alt(std::vector<std::uint32_t> parts) {
    std::vector<std::uint32_t> flat;
    for (auto p : parts) {
      if (p == kZero) continue;
      if (nodes_[p].kind == RxKind::alt) {
        flat.insert(flat.end(), nodes_[p].kids.begin(), nodes_[p].kids.end());
      } else {
        flat.push_back(p);
      }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return kZero;
    if (flat.size() == 1) return flat.front();
    return intern(RxKind::alt, 0, std::move(flat));
  }

  std::uint32_t cat(std::uint32_t a, std::uint32_t b) {
    if (a == kZero || b == kZero) return kZero;
    if (a == kOne) return b;
    if (b == kOne) return a;
    if (nodes_[a].kind == RxKind::cat) {
      const auto a0 = nodes_[a].kids[0];
      const auto a1 = nodes_[a].kids[1];
      return cat(a0, cat(a1, b));
    }
    return intern(RxKind::cat, 0, {a, b});
  }

  std::uint32_t star(std::uint32_t a) {
    if (a == kZero || a == kOne) return kOne;
    if (nodes_[a].kind == RxKind::star) return a;
    return intern(RxKind::star, 0, {a});
  }

  std::vector<Node> nodes_;
  std::map<std::tuple<RxKind, std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t> index_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> derivatives_;
};

constexpr std::uint32_t kOtherLetter = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kMaxAutomatonStates = 1u << 16;

}  // namespace

struct LetterRegex::Impl {
  Syntax syntax;
  std::vector<std::uint32_t> letters;              // sorted, distinct; last class is "other"
  std::vector<std::vector<std::uint32_t>> delta;   // state -> class -> state
  std::vector<bool> accepting;

  std::size_t letter_class(std::uint32_t letter) const {
    const auto it = std::lower_bound(letters.begin(), letters.end(), letter);
    if (it != letters.end() && *it == letter) return static_cast<std::size_t>(it - letters.begin());
    return letters.size();
  }
};

LetterRegex LetterRegex::parse(std::string_view text) {
  auto impl = std::make_shared<Impl>();
  impl->syntax = RegexParser(text).parse();
  collect_letters(impl->syntax, impl->letters);
  std::sort(impl->letters.begin(), impl->letters.end());
  impl->letters.erase(std::unique(impl->letters.begin(), impl->letters.end()),
                      impl->letters.end());

  DerivativePool pool;
  std::map<std::uint32_t, std::uint32_t> state_of;
  std::vector<std::uint32_t> regex_of;
  std::deque<std::uint32_t> queue;
  auto state_for = [&](std::uint32_t rx) {
    if (auto it = state_of.find(rx); it != state_of.end()) return it->second;
    const auto s = static_cast<std::uint32_t>(regex_of.size());
    if (s >= kMaxAutomatonStates) throw std::length_error("letter regex automaton too large");
    state_of.emplace(rx, s);
    regex_of.push_back(rx);
    impl->delta.emplace_back(impl->letters.size() + 1, 0);
    impl->accepting.push_back(pool.nullable(rx));
    queue.push_back(s);
    return s;
  };
  state_for(pool.build(impl->syntax));
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c <= impl->letters.size(); ++c) {
      const std::uint32_t letter = c < impl->letters.size() ? impl->letters[c] : kOtherLetter;
      const auto target = state_for(pool.derive(regex_of[s], letter));
      impl->delta[s][c] = target;
    }
  }
  return LetterRegex(std::move(impl));
}

bool LetterRegex::matches(const LetterWord& w) const {
  std::uint32_t state = 0;
  for (const Letter l : w) state = impl_->delta[state][impl_->letter_class(l.index)];
  return impl_->accepting[state];
}

std::optional<std::uint32_t> LetterRegex::max_letter() const {
  if (impl_->letters.empty()) return std::nullopt;
  return impl_->letters.back();
}

std::size_t LetterRegex::automaton_size() const { return impl_->delta.size(); }

std::string LetterRegex::to_string() const {
  std::string out;
  print_syntax(impl_->syntax, 0, out);
  return out;
}

bool word_in_spec(const LetterWord& w, const LangSpec& spec, std::size_t alphabet_size) {
  for (const Letter l : w) {
    if (l.index >= alphabet_size) {
      throw std::out_of_range("letter l" + std::to_string(l.index) + " outside alphabet of size " +
                              std::to_string(alphabet_size));
    }
  }
  if (const auto* finite = std::get_if<FiniteWords>(&spec)) return finite->words.contains(w);
  return std::get<LetterRegex>(spec).matches(w);
}

std::optional<std::uint32_t> max_letter(const LangSpec& spec) {
  if (const auto* finite = std::get_if<FiniteWords>(&spec)) {
    std::optional<std::uint32_t> out;
    for (const auto& w : finite->words) {
      for (const Letter l : w) out = std::max(out.value_or(0), l.index);
    }
    return out;
  }
  return std::get<LetterRegex>(spec).max_letter();
}

std::string print(const LangSpec& spec) {
  if (const auto* finite = std::get_if<FiniteWords>(&spec)) {
    std::string out = "{";
    bool first = true;
    for (const auto& w : finite->words) {
      if (!first) out += ", ";
      first = false;
      out += print(w);
    }
    return out + "}";
  }
  return std::get<LetterRegex>(spec).to_string();
}

}  // namespace kavc
