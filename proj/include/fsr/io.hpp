#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fsr/ideal.hpp"
#include "fsr/rational.hpp"
#include "fsr/ring.hpp"

namespace fsr {

// A ring together with the names of its variables.
struct RingSpec {
    std::vector<std::string> variables;
    StanleyReisnerRing ring;
};

// {"variables": [...], "p": prime, "relations": [<monomial>...]}; relations may
// mix exponent arrays and monomial strings.
RingSpec parse_ring_json(const nlohmann::json& j);
RingSpec parse_ring_text(const std::string& text);
// A path, or inline JSON when the text starts with '{'.
RingSpec load_ring(const std::string& source);

// "x^2*y", "1". Throws InputError naming the offending token.
ExponentVector parse_monomial(const std::string& text, const std::vector<std::string>& variables);
ExponentVector parse_monomial_json(const nlohmann::json& j, const std::vector<std::string>& variables);

// Accepted forms: "0" (zero ideal), a comma-separated list of monomial
// strings, or JSON: [[1,0,1], ...] or ["x*z", ...].
MonomialIdeal parse_ideal(const std::string& text, const std::vector<std::string>& variables);

std::string monomial_to_string(const ExponentVector& v, const std::vector<std::string>& variables);
// Generators as monomial strings in canonical order.
nlohmann::json ideal_to_json(const MonomialIdeal& a, const std::vector<std::string>& variables);
nlohmann::json ring_to_json(const RingSpec& spec);
nlohmann::json varset_to_json(VarSet s, const std::vector<std::string>& variables);

} // namespace fsr
