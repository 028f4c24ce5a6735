#include "kavc/json.hpp"

#include <stdexcept>

namespace kavc {

namespace {

using ojson = nlohmann::ordered_json;

ojson letters_json(const LetterWord& w) {
  ojson out = ojson::array();
  for (const Letter l : w) out.push_back(l.index);
  return out;
}

void put_valuation(ojson& out, const Valuation& v) {
  out["alphabet"] = v.alphabet_size();
  ojson assignment = ojson::object();
  for (const auto& [x, spec] : v.assignment()) assignment[x.name] = to_json(spec);
  out["assignment"] = std::move(assignment);
}

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("malformed valuation JSON: " + what);
}

}  // namespace

ojson to_json(const LangSpec& spec) {
  ojson out;
  if (const auto* finite = std::get_if<FiniteWords>(&spec)) {
    out["kind"] = "finite";
    ojson words = ojson::array();
    for (const auto& w : finite->words) words.push_back(letters_json(w));
    out["words"] = std::move(words);
  } else {
    out["kind"] = "regex";
    out["expr"] = std::get<LetterRegex>(spec).to_string();
  }
  return out;
}

ojson to_json(const Valuation& v) {
  ojson out;
  put_valuation(out, v);
  return out;
}

ojson to_json(const Counterexample& cex) {
  ojson out;
  put_valuation(out, cex.valuation);
  out["witness"] = letters_json(cex.witness);
  if (cex.lhs_word) out["lhs_word"] = print(*cex.lhs_word);
  return out;
}

ojson to_json(const Verdict& v) {
  ojson out;
  out["verdict"] = to_string(v.outcome);
  out["procedure"] = to_string(v.procedure);
  if (v.counterexample) out["counterexample"] = to_json(*v.counterexample);
  if (v.bound) out["bound"] = *v.bound;
  return out;
}

ojson to_json(const Separation& s) {
  ojson out;
  put_valuation(out, s.valuation);
  out["witness"] = letters_json(s.witness);
  out["direction"] = to_string(s.direction);
  if (s.fallback != Fallback::none) out["fallback"] = to_string(s.fallback);
  return out;
}

LangSpec lang_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    malformed("a language needs a string \"kind\"");
  }
  const std::string kind = j["kind"];
  if (kind == "regex") {
    if (!j.contains("expr") || !j["expr"].is_string()) malformed("regex needs a string \"expr\"");
    return LetterRegex::parse(j["expr"].get<std::string>());
  }
  if (kind != "finite") malformed("unknown kind \"" + kind + "\"");
  if (!j.contains("words") || !j["words"].is_array()) malformed("finite needs a \"words\" array");
  FiniteWords out;
  for (const auto& w : j["words"]) {
    if (!w.is_array()) malformed("each word must be an array of letter indices");
    LetterWord word;
    for (const auto& l : w) {
      if (!l.is_number_unsigned()) malformed("letter indices must be non-negative integers");
      word.push_back(Letter{l.get<std::uint32_t>()});
    }
    out.words.insert(std::move(word));
  }
  return out;
}

Valuation valuation_from_json(const nlohmann::json& j) {
  if (!j.is_object()) malformed("expected an object");
  if (!j.contains("alphabet") || !j["alphabet"].is_number_unsigned()) {
    malformed("\"alphabet\" must be a non-negative integer");
  }
  Valuation v(j["alphabet"].get<std::size_t>());
  if (j.contains("assignment")) {
    if (!j["assignment"].is_object()) malformed("\"assignment\" must be an object");
    for (const auto& [name, spec] : j["assignment"].items()) {
      v.assign(Variable{name}, lang_spec_from_json(spec));
    }
  }
  return v;
}

}  // namespace kavc
