#include "rdelab/engine.hpp"

namespace rdelab {

std::variant<Rational, SingularityReason> try_step(const Window& window, const Rational& a_n, const Rational& b_n) {
    const Rational& x_n = window[4];
    if (x_n.is_zero()) return SingularityReason::zero_xn;

    Rational bracket = window[0] * window[1];
    bracket *= window[2];
    bracket *= window[3];
    bracket *= b_n;
    bracket += a_n;
    if (bracket.is_zero()) return SingularityReason::zero_bracket;

    Rational next = window[1] * window[0];
    bracket *= x_n;
    next /= bracket;
    return next;
}

Rational step(const Window& window, const Rational& a_n, const Rational& b_n) {
    auto result = try_step(window, a_n, b_n);
    if (auto* reason = std::get_if<SingularityReason>(&result)) throw SingularityError(*reason);
    return std::get<Rational>(std::move(result));
}

Trajectory iterate(const InitialConditions& ic, const CoefficientSpec& a, const CoefficientSpec& b, std::int64_t steps) {
    if (steps < 1) throw Error("iteration needs steps >= 1, got " + std::to_string(steps));

    std::vector<Rational> values(ic.seeds().begin(), ic.seeds().end());
    values.reserve(static_cast<std::size_t>(steps) + 5);
    Window window = ic.seeds();

    for (std::int64_t n = 0; n < steps; ++n) {
        auto result = try_step(window, a.at(n), b.at(n));
        if (auto* reason = std::get_if<SingularityReason>(&result)) {
            return Trajectory(std::move(values), Singularity{n + 1, *reason});
        }
        for (std::size_t i = 0; i + 1 < window.size(); ++i) window[i] = std::move(window[i + 1]);
        window[4] = std::get<Rational>(std::move(result));
        values.push_back(window[4]);
    }
    return Trajectory(std::move(values), std::nullopt);
}

Rational step_residual(const Trajectory& traj, const CoefficientSpec& a, const CoefficientSpec& b, std::int64_t n) {
    const Rational product = traj.x(n - 1) * traj.x(n - 2) * traj.x(n - 3) * traj.x(n - 4);
    return traj.x(n + 1) * traj.x(n) * (a.at(n) + b.at(n) * product) - traj.x(n - 3) * traj.x(n - 4);
}

}  // namespace rdelab
