#include "fsr/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "fsr/errors.hpp"

namespace fsr {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Exponent parse_exponent(const std::string& digits, const std::string& token) {
    if (digits.empty() || digits.size() > 18 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InputError("malformed exponent in '" + token + "'");
    return std::stoull(digits);
}

std::vector<std::string> split_top_level(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

} // namespace

ExponentVector parse_monomial(const std::string& text, const std::vector<std::string>& variables) {
    const std::string body = trim(text);
    if (body.empty())
        throw InputError("empty monomial");
    ExponentVector v(variables.size());
    for (const auto& raw : split_top_level(body, '*')) {
        const std::string factor = trim(raw);
        if (factor.empty())
            throw InputError("malformed monomial '" + body + "'");
        if (factor == "1")
            continue;
        const auto caret = factor.find('^');
        const std::string name = trim(factor.substr(0, caret));
        Exponent e = 1;
        if (caret != std::string::npos)
            e = parse_exponent(trim(factor.substr(caret + 1)), factor);
        const auto it = std::find(variables.begin(), variables.end(), name);
        if (it == variables.end())
            throw InputError("unknown variable '" + name + "'");
        auto& slot = v[static_cast<std::size_t>(it - variables.begin())];
        slot = checked_add(slot, e);
    }
    return v;
}

ExponentVector parse_monomial_json(const json& j, const std::vector<std::string>& variables) {
    if (j.is_string())
        return parse_monomial(j.get<std::string>(), variables);
    if (!j.is_array())
        throw InputError("monomial must be an exponent array or a string, got " + j.dump());
    if (j.size() != variables.size())
        throw InputError("exponent array " + j.dump() + " has length " + std::to_string(j.size()) + ", expected " +
                         std::to_string(variables.size()));
    ExponentVector v(variables.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_unsigned())
            throw InputError("malformed exponent " + j[i].dump() + " in " + j.dump());
        v[i] = j[i].get<Exponent>();
    }
    return v;
}

MonomialIdeal parse_ideal(const std::string& text, const std::vector<std::string>& variables) {
    const std::string body = trim(text);
    const std::size_t n = variables.size();
    if (body == "0")
        return MonomialIdeal::zero(n);
    std::vector<ExponentVector> gens;
    if (!body.empty() && body.front() == '[') {
        json j;
        try {
            j = json::parse(body);
        } catch (const json::parse_error& e) {
            throw InputError("malformed ideal literal '" + body + "'");
        }
        if (!j.is_array())
            throw InputError("ideal literal must be a list");
        for (const auto& g : j)
            gens.push_back(parse_monomial_json(g, variables));
    } else {
        if (body.empty())
            throw InputError("empty ideal literal; use \"0\" for the zero ideal");
        for (const auto& part : split_top_level(body, ','))
            gens.push_back(parse_monomial(part, variables));
    }
    return normalize(std::move(gens), n);
}

RingSpec parse_ring_json(const json& j) {
    if (!j.is_object())
        throw InputError("ring file must be a JSON object");
    static const std::set<std::string> known{"variables", "p", "relations", "name", "comment"};
    for (const auto& [key, value] : j.items())
        if (!known.contains(key))
            throw InputError("unknown ring field '" + key + "'");
    if (!j.contains("variables") || !j["variables"].is_array())
        throw InputError("ring file needs a \"variables\" list");
    std::vector<std::string> vars;
    for (const auto& v : j["variables"]) {
        if (!v.is_string() || !is_identifier(v.get<std::string>()))
            throw InputError("invalid variable name " + v.dump());
        if (std::find(vars.begin(), vars.end(), v.get<std::string>()) != vars.end())
            throw InputError("duplicate variable '" + v.get<std::string>() + "'");
        vars.push_back(v.get<std::string>());
    }
    if (vars.size() > kMaxVariables)
        throw InputError("at most " + std::to_string(kMaxVariables) + " variables are supported");
    if (!j.contains("p") || !j["p"].is_number_unsigned())
        throw InputError("ring file needs a nonnegative integer \"p\"");
    const auto p = j["p"].get<std::uint64_t>();
    if (!is_prime(p))
        throw InputError("p = " + std::to_string(p) + " is not prime");
    std::vector<ExponentVector> rel;
    if (j.contains("relations")) {
        if (!j["relations"].is_array())
            throw InputError("\"relations\" must be a list");
        for (const auto& g : j["relations"])
            rel.push_back(parse_monomial_json(g, vars));
    }
    auto ideal = normalize(std::move(rel), vars.size());
    return RingSpec{vars, StanleyReisnerRing(vars.size(), p, std::move(ideal))};
}

RingSpec parse_ring_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("ring is not valid JSON: ") + e.what());
    }
    return parse_ring_json(j);
}

RingSpec load_ring(const std::string& source) {
    const std::string body = trim(source);
    if (!body.empty() && body.front() == '{')
        return parse_ring_text(body);
    std::ifstream in(source);
    if (!in)
        throw InputError("cannot open ring file '" + source + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ring_text(ss.str());
}

std::string monomial_to_string(const ExponentVector& v, const std::vector<std::string>& variables) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += variables.at(i);
        if (v[i] > 1)
            out += '^' + std::to_string(v[i]);
    }
    return out.empty() ? "1" : out;
}

json ideal_to_json(const MonomialIdeal& a, const std::vector<std::string>& variables) {
    json out = json::array();
    for (const auto& g : a.generators())
        out.push_back(monomial_to_string(g, variables));
    return out;
}

json ring_to_json(const RingSpec& spec) {
    json out;
    out["variables"] = spec.variables;
    out["p"] = spec.ring.p();
    out["relations"] = ideal_to_json(spec.ring.defining_ideal(), spec.variables);
    return out;
}

json varset_to_json(VarSet s, const std::vector<std::string>& variables) {
    json out = json::array();
    for (auto i : s.indices())
        out.push_back(variables.at(i));
    return out;
}

} // namespace fsr
