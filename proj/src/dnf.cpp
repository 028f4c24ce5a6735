#include <cctype>

#include "kavc/term.hpp"

namespace kavc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  const auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

// Right-nested fold: a op (b op (c ...)).
template <class Combine>
Term fold_right(std::vector<Term> items, Term unit, Combine combine) {
  if (items.empty()) return unit;
  Term out = items.back();
  for (std::size_t k = items.size() - 1; k-- > 0;) out = combine(items[k], std::move(out));
  return out;
}

}  // namespace

Dnf parse_dnf(std::string_view text) {
  Dnf phi;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    const std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t line_offset = static_cast<std::size_t>(line.data() - raw.data());

    DnfClause clause;
    if (line == "1") {
      phi.clauses.push_back(std::move(clause));
      continue;
    }
    std::size_t start = 0;
    for (;;) {
      const auto amp = line.find('&', start);
      const std::string_view piece = line.substr(start, amp == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : amp - start);
      std::string_view lit = trim(piece);
      const std::size_t column =
          line_offset + start + static_cast<std::size_t>(lit.data() - piece.data()) + 1;
      bool negated = false;
      if (!lit.empty() && lit.front() == '!') {
        negated = true;
        lit = trim(lit.substr(1));
      }
      if (!is_identifier(lit)) {
        throw ParseError("expected a literal (identifier or !identifier) in DNF clause", line_no,
                         column);
      }
      clause.push_back(DnfLiteral{std::string(lit), negated});
      if (amp == std::string_view::npos) break;
      start = amp + 1;
    }
    phi.clauses.push_back(std::move(clause));
  }
  return phi;
}

std::string print(const Dnf& phi) {
  std::string out;
  for (const auto& clause : phi.clauses) {
    if (clause.empty()) {
      out += "1\n";
      continue;
    }
    for (std::size_t k = 0; k < clause.size(); ++k) {
      if (k > 0) out += " & ";
      if (clause[k].negated) out += '!';
      out += clause[k].var;
    }
    out += '\n';
  }
  return out;
}

std::set<std::string> dnf_variables(const Dnf& phi) {
  std::set<std::string> out;
  for (const auto& clause : phi.clauses) {
    for (const auto& lit : clause) out.insert(lit.var);
  }
  return out;
}

Term dnf_to_term(const Dnf& phi) {
  std::vector<Term> disjuncts;
  for (const auto& clause : phi.clauses) {
    std::vector<Term> conjuncts;
    for (const auto& lit : clause) {
      conjuncts.push_back(lit.negated ? Term::cvar(lit.var) : Term::var(lit.var));
    }
    disjuncts.push_back(fold_right(std::move(conjuncts), Term::one(), Term::concat));
  }
  return fold_right(std::move(disjuncts), Term::zero(), Term::unite);
}

}  // namespace kavc
