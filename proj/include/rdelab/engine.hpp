#pragma once

#include <array>
#include <cstdint>
#include <variant>

#include "rdelab/errors.hpp"
#include "rdelab/model.hpp"

namespace rdelab {

/// Thrown by step() when the next value is undefined.
class SingularityError : public Error {
public:
    explicit SingularityError(SingularityReason reason)
        : Error("singular step: " + to_string(reason)), reason_(reason) {}

    SingularityReason reason() const { return reason_; }

private:
    SingularityReason reason_;
};

/// Window of five consecutive values, oldest first: x_{n-4}, x_{n-3}, x_{n-2}, x_{n-1}, x_n.
using Window = std::array<Rational, 5>;

/**
 * One application of
 *
 *     x_{n+1} = x_{n-3} x_{n-4} / (x_n (a_n + b_n x_{n-1} x_{n-2} x_{n-3} x_{n-4}))
 *
 * Returns the new value, or the reason it is undefined.
 */
std::variant<Rational, SingularityReason> try_step(const Window& window, const Rational& a_n, const Rational& b_n);

/// As try_step, but a singular step throws SingularityError.
Rational step(const Window& window, const Rational& a_n, const Rational& b_n);

/**
 * Forward iteration for n = 0..steps-1, producing x_{-4}..x_{steps}.
 *
 * A singular step ends the trajectory and is recorded on it; an explicit
 * coefficient list that runs out throws IndexBeyondExplicitData.
 */
Trajectory iterate(const InitialConditions& ic, const CoefficientSpec& a, const CoefficientSpec& b, std::int64_t steps);

/// x_{n+1} x_n (a_n + b_n x_{n-1}..x_{n-4}) - x_{n-3} x_{n-4}; zero for every genuine step.
Rational step_residual(const Trajectory& traj, const CoefficientSpec& a, const CoefficientSpec& b, std::int64_t n);

}  // namespace rdelab
