// JSON encodings of valuations, verdicts and separations.

#ifndef KAVC_JSON_HPP
#define KAVC_JSON_HPP

#include <json.hpp>

#include "kavc/decision.hpp"
#include "kavc/separation.hpp"
#include "kavc/valuation.hpp"

namespace kavc {

// {"kind":"finite","words":[[0],[0,1]]} or {"kind":"regex","expr":"l0 l1*"}
nlohmann::ordered_json to_json(const LangSpec& spec);
// {"alphabet": n, "assignment": {"x": <spec>, ...}}
nlohmann::ordered_json to_json(const Valuation& v);
// Valuation fields plus "witness" and, when present, "lhs_word".
nlohmann::ordered_json to_json(const Counterexample& cex);
// {"verdict": ..., "procedure": ..., "counterexample": ..., "bound": ...}
nlohmann::ordered_json to_json(const Verdict& v);
// Valuation fields plus "witness" and "direction".
nlohmann::ordered_json to_json(const Separation& s);

// Inverses for input. Throw std::invalid_argument on malformed documents and
// std::out_of_range for letters outside the alphabet.
LangSpec lang_spec_from_json(const nlohmann::json& j);
Valuation valuation_from_json(const nlohmann::json& j);

}  // namespace kavc

#endif  // KAVC_JSON_HPP
