#pragma once

#include <array>
#include <cstdint>

#include "rdelab/model.hpp"

namespace rdelab {

/**
 * V_n = 1 / (u_n u_{n+1} u_{n+2} u_{n+3}) for every window fully inside the
 * trajectory. Throws ZeroProduct(n) on the first window containing a zero.
 */
InvariantSeq v_sequence(const Trajectory& traj);

/// V_n for a single n; ValueUnavailable if the window is not in the trajectory.
Rational v_at(const Trajectory& traj, std::int64_t n);

/// V_{n+2} - a_n V_n - b_n.
Rational v_recurrence_residual(const InvariantSeq& v, const CoefficientSpec& a, const CoefficientSpec& b,
                               std::int64_t n);

/**
 * V_{2n+j} from V_j (j in {0, 1}) without stepping the recurrence:
 *
 *     V_j prod_{k=0}^{n-1} a_{2k+j} + sum_{l=0}^{n-1} b_{2l+j} prod_{k=l+1}^{n-1} a_{2k+j}
 *
 * `v_j` is the starting value V_j of the chosen parity.
 */
Rational v_closed_form(const Rational& v_j, const CoefficientSpec& a, const CoefficientSpec& b, std::int64_t n,
                       int j);

/// Overload taking both starting values; uses V_0 or V_1 according to j.
Rational v_closed_form(const Rational& v0, const Rational& v1, const CoefficientSpec& a, const CoefficientSpec& b,
                       std::int64_t n, int j);

/**
 * Integer value of (sqrt(2) cos(pi (2m+1) / 4) + (-1)^m) / 2, which cycles
 * through 1, -1, 0, 0 with m mod 4.
 */
std::int64_t weight(std::int64_t m);

/// prod_{k=0}^{n-1} V_k^{weight(k-n)}; u_n divided by this depends only on n mod 4.
Rational weighted_product(const InvariantSeq& v, std::int64_t n);

/**
 * u_n rebuilt from the four leading values u_0..u_3 and the invariants:
 * u_{4q+r} = u_r prod_{s=0}^{q-1} V_{4s+r} / V_{4s+r+1}.
 */
Rational reconstruct_u(const std::array<Rational, 4>& leading, const InvariantSeq& v, std::int64_t n);

}  // namespace rdelab
