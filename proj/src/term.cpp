#include "kavc/term.hpp"

#include <algorithm>
#include <utility>

namespace kavc {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line_(line),
      column_(column) {}

struct Term::Node {
  TermKind kind;
  std::string name;
  std::optional<Term> left;
  std::optional<Term> right;
  std::size_t size = 1;
};

Term Term::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::var;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::cvar(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::cvar;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::literal(const Literal& lit) {
  return lit.negative() ? cvar(lit.var.name) : var(lit.var.name);
}

Term Term::one() {
  static const Term kOne = [] {
    auto node = std::make_shared<Node>();
    node->kind = TermKind::one;
    return Term(std::move(node));
  }();
  return kOne;
}

Term Term::zero() {
  static const Term kZero = [] {
    auto node = std::make_shared<Node>();
    node->kind = TermKind::zero;
    return Term(std::move(node));
  }();
  return kZero;
}

Term Term::unite(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::unite;
  node->size = 1 + lhs.size() + rhs.size();
  node->left = std::move(lhs);
  node->right = std::move(rhs);
  return Term(std::move(node));
}

Term Term::concat(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::concat;
  node->size = 1 + lhs.size() + rhs.size();
  node->left = std::move(lhs);
  node->right = std::move(rhs);
  return Term(std::move(node));
}

Term Term::star(Term body) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::star;
  node->size = 1 + body.size();
  node->left = std::move(body);
  return Term(std::move(node));
}

TermKind Term::kind() const noexcept { return node_->kind; }
const std::string& Term::name() const noexcept { return node_->name; }

const Term& Term::left() const {
  if (kind() != TermKind::unite && kind() != TermKind::concat) {
    throw std::logic_error("Term::left on a node without two children");
  }
  return *node_->left;
}

const Term& Term::right() const {
  if (kind() != TermKind::unite && kind() != TermKind::concat) {
    throw std::logic_error("Term::right on a node without two children");
  }
  return *node_->right;
}

const Term& Term::body() const {
  if (kind() != TermKind::star) throw std::logic_error("Term::body on a non-star node");
  return *node_->left;
}

std::size_t Term::size() const noexcept { return node_->size; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case TermKind::var:
    case TermKind::cvar:
      return a.name() == b.name();
    case TermKind::one:
    case TermKind::zero:
      return true;
    case TermKind::unite:
    case TermKind::concat:
      return a.left() == b.left() && a.right() == b.right();
    case TermKind::star:
      return a.body() == b.body();
  }
  return false;
}

namespace {

void collect_variables(const Term& t, std::set<Variable>& out) {
  switch (t.kind()) {
    case TermKind::var:
    case TermKind::cvar:
      out.insert(Variable{t.name()});
      return;
    case TermKind::one:
    case TermKind::zero:
      return;
    case TermKind::unite:
    case TermKind::concat:
      collect_variables(t.left(), out);
      collect_variables(t.right(), out);
      return;
    case TermKind::star:
      collect_variables(t.body(), out);
      return;
  }
}

}  // namespace

std::set<Variable> variables(const Term& t) {
  std::set<Variable> out;
  collect_variables(t, out);
  return out;
}

std::set<Variable> variables(const LitWord& w) {
  std::set<Variable> out;
  for (const auto& lit : w) out.insert(lit.var);
  return out;
}

bool is_star_free(const Term& t) {
  switch (t.kind()) {
    case TermKind::star:
      return false;
    case TermKind::unite:
    case TermKind::concat:
      return is_star_free(t.left()) && is_star_free(t.right());
    default:
      return true;
  }
}

bool is_composition_free(const Term& t) {
  switch (t.kind()) {
    case TermKind::star:
    case TermKind::concat:
      return false;
    case TermKind::unite:
      return is_composition_free(t.left()) && is_composition_free(t.right());
    default:
      return true;
  }
}

Term to_term(const LitWord& w) {
  if (w.empty()) return Term::one();
  Term out = Term::literal(w.front());
  for (std::size_t i = 1; i < w.size(); ++i) out = Term::concat(std::move(out), Term::literal(w[i]));
  return out;
}

namespace {

bool append_literal_word(const Term& t, LitWord& out) {
  switch (t.kind()) {
    case TermKind::var:
      out.push_back(Literal{Variable{t.name()}, Polarity::positive});
      return true;
    case TermKind::cvar:
      out.push_back(Literal{Variable{t.name()}, Polarity::negative});
      return true;
    case TermKind::one:
      return true;
    case TermKind::concat:
      return append_literal_word(t.left(), out) && append_literal_word(t.right(), out);
    default:
      return false;
  }
}

}  // namespace

std::optional<LitWord> as_literal_word(const Term& t) {
  LitWord out;
  if (!append_literal_word(t, out)) return std::nullopt;
  return out;
}

Variable fresh_variable(const std::set<Variable>& avoid, std::string_view prefix) {
  for (std::size_t k = 0;; ++k) {
    Variable candidate{std::string(prefix) + std::to_string(k)};
    if (!avoid.contains(candidate)) return candidate;
  }
}

Term top_expansion(const std::set<Variable>& avoid) {
  const Variable v = fresh_variable(avoid, "_t");
  return Term::unite(Term::var(v.name), Term::cvar(v.name));
}

std::set<LitWord> lang_vprime_finite(const Term& t) {
  switch (t.kind()) {
    case TermKind::var:
      return {LitWord{Literal{Variable{t.name()}, Polarity::positive}}};
    case TermKind::cvar:
      return {LitWord{Literal{Variable{t.name()}, Polarity::negative}}};
    case TermKind::one:
      return {LitWord{}};
    case TermKind::zero:
      return {};
    case TermKind::unite: {
      auto out = lang_vprime_finite(t.left());
      out.merge(lang_vprime_finite(t.right()));
      return out;
    }
    case TermKind::concat: {
      const auto lhs = lang_vprime_finite(t.left());
      if (lhs.empty()) return {};
      const auto rhs = lang_vprime_finite(t.right());
      std::set<LitWord> out;
      for (const auto& a : lhs) {
        for (const auto& b : rhs) {
          LitWord w = a;
          w.insert(w.end(), b.begin(), b.end());
          out.insert(std::move(w));
        }
      }
      return out;
    }
    case TermKind::star:
      throw PreconditionError("lang_vprime_finite requires a star-free term, got " + print(t));
  }
  return {};
}

std::optional<std::size_t> max_word_length(const Term& t) {
  switch (t.kind()) {
    case TermKind::var:
    case TermKind::cvar:
      return 1;
    case TermKind::one:
      return 0;
    case TermKind::zero:
      return std::nullopt;
    case TermKind::unite: {
      const auto a = max_word_length(t.left());
      const auto b = max_word_length(t.right());
      if (!a) return b;
      if (!b) return a;
      return std::max(*a, *b);
    }
    case TermKind::concat: {
      const auto a = max_word_length(t.left());
      const auto b = max_word_length(t.right());
      if (!a || !b) return std::nullopt;
      return *a + *b;
    }
    case TermKind::star:
      throw PreconditionError("max_word_length requires a star-free term, got " + print(t));
  }
  return std::nullopt;
}

}  // namespace kavc
