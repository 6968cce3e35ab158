#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdelab/rational.hpp"

namespace rdelab {

/**
 * A coefficient sequence a_n or b_n, n >= 0.
 *
 * - constant:  one value repeated forever
 * - periodic:  values[n mod period]
 * - explicit:  a finite list; reading past its end throws IndexBeyondExplicitData
 */
class CoefficientSpec {
public:
    enum class Kind { constant, periodic, explicit_list };

    static CoefficientSpec constant(Rational value);
    static CoefficientSpec periodic(std::vector<Rational> values);
    static CoefficientSpec explicit_list(std::vector<Rational> values);

    Kind kind() const { return kind_; }
    const std::vector<Rational>& values() const { return values_; }

    /// Number of values that repeat; nullopt for explicit lists.
    std::optional<std::size_t> period() const;

    const Rational& at(std::int64_t n) const;

    friend bool operator==(const CoefficientSpec&, const CoefficientSpec&) = default;

private:
    CoefficientSpec(Kind kind, std::vector<Rational> values) : kind_(kind), values_(std::move(values)) {}

    Kind kind_ = Kind::constant;
    std::vector<Rational> values_;
};

const Rational& coeff_at(const CoefficientSpec& spec, std::int64_t n);

std::string to_string(CoefficientSpec::Kind kind);

/// The five seeds x_{-4}, ..., x_0; in the forward (u) indexing u_m = x_{m-4}, m = 0..4.
class InitialConditions {
public:
    InitialConditions() = default;
    explicit InitialConditions(std::array<Rational, 5> seeds) : seeds_(std::move(seeds)) {}

    /// x_m for m in [-4, 0].
    const Rational& x(int m) const;
    /// u_m for m in [0, 4].
    const Rational& u(int m) const;

    const std::array<Rational, 5>& seeds() const { return seeds_; }

    /// x_{-4} x_{-3} x_{-2} x_{-1}  (= u_0 u_1 u_2 u_3)
    Rational lead_product() const;
    /// x_{-3} x_{-2} x_{-1} x_0  (= u_1 u_2 u_3 u_4)
    Rational trail_product() const;

    friend bool operator==(const InitialConditions&, const InitialConditions&) = default;

private:
    std::array<Rational, 5> seeds_{};
};

enum class SingularityReason { zero_xn, zero_bracket };

std::string to_string(SingularityReason reason);

struct Singularity {
    std::int64_t index;  // x-index whose value could not be computed
    SingularityReason reason;

    friend bool operator==(const Singularity&, const Singularity&) = default;
};

/// x_{-4}, x_{-3}, ... in order, optionally cut short by a singularity.
class Trajectory {
public:
    static constexpr std::int64_t first_index = -4;

    Trajectory() = default;
    Trajectory(std::vector<Rational> values, std::optional<Singularity> singularity)
        : values_(std::move(values)), singularity_(singularity) {}

    const std::vector<Rational>& values() const { return values_; }
    const std::optional<Singularity>& singularity() const { return singularity_; }

    /// Largest x-index with a stored value.
    std::int64_t last_index() const { return first_index + static_cast<std::int64_t>(values_.size()) - 1; }
    bool has(std::int64_t n) const { return n >= first_index && n <= last_index(); }

    /// x_n; throws ValueUnavailable outside the stored range.
    const Rational& x(std::int64_t n) const;
    /// u_m = x_{m-4}.
    const Rational& u(std::int64_t m) const { return x(m - 4); }

    InitialConditions initial_conditions() const;

    friend bool operator==(const Trajectory&, const Trajectory&) = default;

private:
    std::vector<Rational> values_;
    std::optional<Singularity> singularity_;
};

const Rational& u_view(const Trajectory& traj, std::int64_t m);
/// Same as above; `ic` must be the trajectory's own seeds and only serves m <= 4 lookups.
const Rational& u_view(const InitialConditions& ic, const Trajectory& traj, std::int64_t m);

/// V_0, V_1, ... with V_n = 1 / (u_n u_{n+1} u_{n+2} u_{n+3}).
struct InvariantSeq {
    enum class Origin { trajectory, closed_form };

    std::vector<Rational> entries;
    Origin origin = Origin::trajectory;

    const Rational& at(std::int64_t n) const;
    std::size_t size() const { return entries.size(); }
};

/// Period-4 integer scaling exponents: u_m -> t^{p[m mod 4]} u_m.
struct ExponentPattern {
    std::array<std::int64_t, 4> p{};

    std::int64_t sum() const { return p[0] + p[1] + p[2] + p[3]; }
    /// Exponent applied to u_m (equivalently to x_{m-4}); negative indices wrap.
    std::int64_t exponent_for(std::int64_t m) const { return p[static_cast<std::size_t>(((m % 4) + 4) % 4)]; }

    /// "a,b,c,d"
    static ExponentPattern parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(const ExponentPattern&, const ExponentPattern&) = default;
};

}  // namespace rdelab
