#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rdelab/errors.hpp"
#include "rdelab/model.hpp"

namespace rdelab {

/// Malformed configuration; `field()` names the offending key path.
class ConfigError : public ParseError {
public:
    ConfigError(std::string field, const std::string& message)
        : ParseError("config field '" + field + "': " + message), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/**
 * Run configuration, stored as JSON with every rational written as a string:
 *
 *     {
 *       "initial": ["1", "1", "1", "1", "-3/8"],          // x_{-4} .. x_0
 *       "a": {"kind": "periodic", "values": ["1", "-1"]},
 *       "b": {"kind": "constant", "values": ["1"]},
 *       "steps": 20,
 *       "seed": 7                                          // optional
 *     }
 *
 * A coefficient may also be given as a bare string ("2/3"), meaning a constant.
 */
struct RunConfig {
    InitialConditions initial;
    CoefficientSpec a = CoefficientSpec::constant(Rational(1));
    CoefficientSpec b = CoefficientSpec::constant(Rational(1));
    std::int64_t steps = 10;
    std::optional<std::uint64_t> seed;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// All-ones seeds, a = b = 1, ten steps.
RunConfig default_config();

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& config);

}  // namespace rdelab
