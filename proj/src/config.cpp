#include "rdelab/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rdelab {

using nlohmann::json;

namespace {

Rational rational_field(const json& node, const std::string& field) {
    if (!node.is_string()) throw ConfigError(field, "expected a rational string such as \"-3/8\"");
    try {
        return Rational::parse(node.get<std::string>());
    } catch (const ParseError& e) {
        throw ConfigError(field, e.what());
    }
}

CoefficientSpec coefficient_field(const json& node, const std::string& field) {
    if (node.is_string()) return CoefficientSpec::constant(rational_field(node, field));
    if (!node.is_object()) throw ConfigError(field, "expected an object with \"kind\" and \"values\"");
    if (!node.contains("kind")) throw ConfigError(field + ".kind", "missing");
    if (!node.contains("values")) throw ConfigError(field + ".values", "missing");
    const json& kind = node.at("kind");
    const json& values = node.at("values");
    if (!kind.is_string()) throw ConfigError(field + ".kind", "expected a string");
    if (!values.is_array() || values.empty()) throw ConfigError(field + ".values", "expected a nonempty array");

    std::vector<Rational> parsed;
    for (std::size_t i = 0; i < values.size(); ++i) {
        parsed.push_back(rational_field(values[i], field + ".values[" + std::to_string(i) + "]"));
    }
    const std::string k = kind.get<std::string>();
    if (k == "constant") {
        if (parsed.size() != 1) throw ConfigError(field + ".values", "a constant takes exactly one value");
        return CoefficientSpec::constant(parsed.front());
    }
    if (k == "periodic") return CoefficientSpec::periodic(std::move(parsed));
    if (k == "explicit") return CoefficientSpec::explicit_list(std::move(parsed));
    throw ConfigError(field + ".kind", "unknown kind '" + k + "' (constant, periodic, explicit)");
}

json coefficient_json(const CoefficientSpec& spec) {
    json values = json::array();
    for (const auto& v : spec.values()) values.push_back(v.to_string());
    return json{{"kind", to_string(spec.kind())}, {"values", values}};
}

}  // namespace

RunConfig default_config() {
    RunConfig config;
    config.initial = InitialConditions({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
    return config;
}

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<document>", e.what());
    }
    if (!doc.is_object()) throw ConfigError("<document>", "expected a JSON object");

    for (const char* required : {"initial", "a", "b", "steps"}) {
        if (!doc.contains(required)) throw ConfigError(required, "missing");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "initial" && key != "a" && key != "b" && key != "steps" && key != "seed") {
            throw ConfigError(key, "unknown field");
        }
    }

    RunConfig config;
    const json& initial = doc.at("initial");
    if (!initial.is_array() || initial.size() != 5) {
        throw ConfigError("initial", "expected five rational strings x_{-4} .. x_0");
    }
    std::array<Rational, 5> seeds;
    for (std::size_t i = 0; i < 5; ++i) seeds[i] = rational_field(initial[i], "initial[" + std::to_string(i) + "]");
    config.initial = InitialConditions(std::move(seeds));

    config.a = coefficient_field(doc.at("a"), "a");
    config.b = coefficient_field(doc.at("b"), "b");

    const json& steps = doc.at("steps");
    if (!steps.is_number_integer() || steps.get<std::int64_t>() < 1) {
        throw ConfigError("steps", "expected a positive integer");
    }
    config.steps = steps.get<std::int64_t>();

    if (doc.contains("seed")) {
        const json& seed = doc.at("seed");
        if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
            throw ConfigError("seed", "expected a nonnegative integer");
        }
        config.seed = seed.get<std::uint64_t>();
    }
    return config;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("<file>", "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const RunConfig& config) {
    json initial = json::array();
    for (const auto& v : config.initial.seeds()) initial.push_back(v.to_string());
    json doc = {
        {"initial", initial},
        {"a", coefficient_json(config.a)},
        {"b", coefficient_json(config.b)},
        {"steps", config.steps},
    };
    if (config.seed) doc["seed"] = *config.seed;
    return doc.dump(2);
}

}  // namespace rdelab
