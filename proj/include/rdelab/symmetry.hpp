#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdelab/model.hpp"

namespace rdelab {

/// True iff p_0 + p_1 + p_2 + p_3 = 0, i.e. the pattern solves beta_n + ... + beta_{n+3} = 0.
bool constraint_check(const ExponentPattern& pattern);

/// u_m -> t^{p[m mod 4]} u_m for the five seeds (u_4 uses p_0). Throws DegenerateScale for t = 0.
InitialConditions scale_ics(const InitialConditions& ic, const ExponentPattern& pattern, const Rational& t);

/// Real forms of the three characteristics: (1,-1,1,-1), (1,0,-1,0), (0,1,0,-1).
const std::vector<ExponentPattern>& symmetry_basis();

/**
 * Coordinates of a zero-sum pattern in symmetry_basis(); nullopt if the sum is nonzero.
 * The generators span the zero-sum lattice over the rationals but only an index-2
 * sublattice over the integers: coordinates are half-integers when p_0 + p_2 is odd.
 */
std::optional<std::array<Rational, 3>> basis_coordinates(const ExponentPattern& pattern);

enum class SymmetryStatus {
    invariant,       // accepted pattern, every residual zero
    not_a_symmetry,  // pattern fails the window-sum constraint and a residual is nonzero
    violated,        // accepted pattern but a residual is nonzero (would falsify the theory)
    incomparable,    // a singularity cut the comparison short before any nonzero residual
};

std::string to_string(SymmetryStatus status);

struct SymmetryReport {
    ExponentPattern pattern;
    Rational t;
    bool accepted = false;  // constraint_check(pattern)
    /// residuals[i] belongs to x-index first_index + i: x-hat_k - t^{p[k mod 4]} x_k.
    std::vector<Rational> residuals;
    std::int64_t first_index = -4;
    std::optional<std::int64_t> first_failure;     // x-index of the first nonzero residual
    std::optional<std::int64_t> incomparable_from; // x-index where either trajectory stopped
    SymmetryStatus status = SymmetryStatus::invariant;

    bool all_zero() const { return !first_failure.has_value(); }
};

/**
 * Iterates the original and the scaled seeds for `steps` steps and compares
 * x-hat_k with t^{p[k mod 4]} x_k at every common index. Patterns with a nonzero
 * sum are run as well, which makes them usable as negative controls.
 */
SymmetryReport verify_group_invariance(const InitialConditions& ic, const CoefficientSpec& a,
                                       const CoefficientSpec& b, const ExponentPattern& pattern, const Rational& t,
                                       std::int64_t steps);

/// As above with a precomputed trajectory of the unscaled seeds.
SymmetryReport verify_group_invariance(const Trajectory& original, const CoefficientSpec& a,
                                       const CoefficientSpec& b, const ExponentPattern& pattern, const Rational& t,
                                       std::int64_t steps);

}  // namespace rdelab
