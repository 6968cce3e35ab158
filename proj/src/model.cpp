#include "rdelab/model.hpp"

#include <charconv>
#include <sstream>

#include "rdelab/errors.hpp"

namespace rdelab {

CoefficientSpec CoefficientSpec::constant(Rational value) {
    return CoefficientSpec(Kind::constant, {std::move(value)});
}

CoefficientSpec CoefficientSpec::periodic(std::vector<Rational> values) {
    if (values.empty()) throw Error("periodic coefficient sequence needs period >= 1");
    return CoefficientSpec(Kind::periodic, std::move(values));
}

CoefficientSpec CoefficientSpec::explicit_list(std::vector<Rational> values) {
    if (values.empty()) throw Error("explicit coefficient list must be nonempty");
    return CoefficientSpec(Kind::explicit_list, std::move(values));
}

std::optional<std::size_t> CoefficientSpec::period() const {
    if (kind_ == Kind::explicit_list) return std::nullopt;
    return values_.size();
}

const Rational& CoefficientSpec::at(std::int64_t n) const {
    if (n < 0) throw Error("coefficient index must be nonnegative, got " + std::to_string(n));
    switch (kind_) {
        case Kind::constant:
            return values_.front();
        case Kind::periodic:
            return values_[static_cast<std::size_t>(n) % values_.size()];
        case Kind::explicit_list:
            if (static_cast<std::size_t>(n) >= values_.size()) throw IndexBeyondExplicitData(n, values_.size());
            return values_[static_cast<std::size_t>(n)];
    }
    return values_.front();
}

const Rational& coeff_at(const CoefficientSpec& spec, std::int64_t n) {
    return spec.at(n);
}

std::string to_string(CoefficientSpec::Kind kind) {
    switch (kind) {
        case CoefficientSpec::Kind::constant: return "constant";
        case CoefficientSpec::Kind::periodic: return "periodic";
        case CoefficientSpec::Kind::explicit_list: return "explicit";
    }
    return "?";
}

const Rational& InitialConditions::x(int m) const {
    if (m < -4 || m > 0) throw Error("seed index x_" + std::to_string(m) + " outside [-4, 0]");
    return seeds_[static_cast<std::size_t>(m + 4)];
}

const Rational& InitialConditions::u(int m) const {
    if (m < 0 || m > 4) throw Error("seed index u_" + std::to_string(m) + " outside [0, 4]");
    return seeds_[static_cast<std::size_t>(m)];
}

Rational InitialConditions::lead_product() const {
    return seeds_[0] * seeds_[1] * seeds_[2] * seeds_[3];
}

Rational InitialConditions::trail_product() const {
    return seeds_[1] * seeds_[2] * seeds_[3] * seeds_[4];
}

std::string to_string(SingularityReason reason) {
    return reason == SingularityReason::zero_xn ? "zero_xn" : "zero_bracket";
}

const Rational& Trajectory::x(std::int64_t n) const {
    if (!has(n)) throw ValueUnavailable(n);
    return values_[static_cast<std::size_t>(n - first_index)];
}

InitialConditions Trajectory::initial_conditions() const {
    if (values_.size() < 5) throw ValueUnavailable(static_cast<std::int64_t>(values_.size()) + first_index);
    return InitialConditions({values_[0], values_[1], values_[2], values_[3], values_[4]});
}

const Rational& u_view(const Trajectory& traj, std::int64_t m) {
    if (m < 0) throw ValueUnavailable(m - 4);
    return traj.u(m);
}

const Rational& u_view(const InitialConditions& ic, const Trajectory& traj, std::int64_t m) {
    if (m >= 0 && m <= 4) return ic.u(static_cast<int>(m));
    return u_view(traj, m);
}

const Rational& InvariantSeq::at(std::int64_t n) const {
    if (n < 0 || static_cast<std::size_t>(n) >= entries.size()) throw ValueUnavailable(n);
    return entries[static_cast<std::size_t>(n)];
}

ExponentPattern ExponentPattern::parse(const std::string& text) {
    ExponentPattern pattern;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto comma = text.find(',', pos);
        const bool last = i == 3;
        if (last != (comma == std::string::npos)) {
            throw ParseError("pattern '" + text + "' must be four comma-separated integers");
        }
        std::string_view field(text.data() + pos, (last ? text.size() : comma) - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        const char* begin = field.data();
        const char* end = begin + field.size();
        auto [ptr, ec] = std::from_chars(begin, end, pattern.p[i]);
        if (field.empty() || ec != std::errc() || ptr != end) {
            throw ParseError("pattern entry '" + std::string(field) + "' is not an integer");
        }
        pos = comma + 1;
    }
    return pattern;
}

std::string ExponentPattern::to_string() const {
    std::ostringstream os;
    os << p[0] << ',' << p[1] << ',' << p[2] << ',' << p[3];
    return os.str();
}

}  // namespace rdelab
