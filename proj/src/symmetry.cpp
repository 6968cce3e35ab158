#include "rdelab/symmetry.hpp"

#include <algorithm>

#include "rdelab/engine.hpp"
#include "rdelab/errors.hpp"

namespace rdelab {

bool constraint_check(const ExponentPattern& pattern) {
    return pattern.sum() == 0;
}

InitialConditions scale_ics(const InitialConditions& ic, const ExponentPattern& pattern, const Rational& t) {
    if (t.is_zero()) throw DegenerateScale();
    std::array<Rational, 5> seeds = ic.seeds();
    for (std::size_t m = 0; m < seeds.size(); ++m) {
        seeds[m] *= t.pow(pattern.exponent_for(static_cast<std::int64_t>(m)));
    }
    return InitialConditions(std::move(seeds));
}

const std::vector<ExponentPattern>& symmetry_basis() {
    static const std::vector<ExponentPattern> basis = {
        ExponentPattern{{1, -1, 1, -1}},
        ExponentPattern{{1, 0, -1, 0}},
        ExponentPattern{{0, 1, 0, -1}},
    };
    return basis;
}

std::optional<std::array<Rational, 3>> basis_coordinates(const ExponentPattern& pattern) {
    if (!constraint_check(pattern)) return std::nullopt;
    // c0 (1,-1,1,-1) + c1 (1,0,-1,0) + c2 (0,1,0,-1) = (c0+c1, c2-c0, c0-c1, -c0-c2)
    const auto& p = pattern.p;
    const Rational c0(p[0] + p[2], 2);
    const Rational c1(p[0] - p[2], 2);
    return std::array<Rational, 3>{c0, c1, Rational(p[1]) + c0};
}

std::string to_string(SymmetryStatus status) {
    switch (status) {
        case SymmetryStatus::invariant: return "invariant";
        case SymmetryStatus::not_a_symmetry: return "NotASymmetry";
        case SymmetryStatus::violated: return "violated";
        case SymmetryStatus::incomparable: return "incomparable";
    }
    return "?";
}

SymmetryReport verify_group_invariance(const Trajectory& original, const CoefficientSpec& a,
                                       const CoefficientSpec& b, const ExponentPattern& pattern, const Rational& t,
                                       std::int64_t steps) {
    const InitialConditions ic = original.initial_conditions();
    const Trajectory scaled = iterate(scale_ics(ic, pattern, t), a, b, steps);

    SymmetryReport report;
    report.pattern = pattern;
    report.t = t;
    report.accepted = constraint_check(pattern);

    const std::int64_t last = std::min({original.last_index(), scaled.last_index(), steps});
    Rational factors[4];
    for (std::int64_t r = 0; r < 4; ++r) factors[r] = t.pow(pattern.p[static_cast<std::size_t>(r)]);

    for (std::int64_t k = Trajectory::first_index; k <= last; ++k) {
        Rational residual = scaled.x(k) - factors[((k % 4) + 4) % 4] * original.x(k);
        if (!residual.is_zero() && !report.first_failure) report.first_failure = k;
        report.residuals.push_back(std::move(residual));
    }
    if (last < steps) report.incomparable_from = last + 1;

    if (report.first_failure) {
        report.status = report.accepted ? SymmetryStatus::violated : SymmetryStatus::not_a_symmetry;
    } else if (report.incomparable_from) {
        report.status = SymmetryStatus::incomparable;
    } else {
        report.status = SymmetryStatus::invariant;
    }
    return report;
}

SymmetryReport verify_group_invariance(const InitialConditions& ic, const CoefficientSpec& a,
                                       const CoefficientSpec& b, const ExponentPattern& pattern, const Rational& t,
                                       std::int64_t steps) {
    return verify_group_invariance(iterate(ic, a, b, steps), a, b, pattern, t, steps);
}

}  // namespace rdelab
