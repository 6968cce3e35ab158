#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdelab/model.hpp"

namespace rdelab {

/**
 * Residue-class addressing shared by every closed-form evaluator:
 *
 *     j = 0  ->  x_{4n}
 *     j = 1  ->  x_{4n-3}
 *     j = 2  ->  x_{4n-2}
 *     j = 3  ->  x_{4n-1}
 *
 * n = 0 returns a seed (x_0, x_{-3}, x_{-2}, x_{-1}).
 */
std::int64_t residue_index(std::int64_t n, int j);

/// Inverse of residue_index for x-indices >= -3: {n, j}.
std::pair<std::int64_t, int> residue_of(std::int64_t index);

/// Largest block n' with residue_index(n', j) <= 4n+3: n for j = 0, n+1 otherwise.
std::int64_t block_limit(int j, std::int64_t n);

/**
 * Which half of the coefficient data a product factor draws on.
 * lead:  a_{2k}, b_{2k} and the seed product x_{-4}x_{-3}x_{-2}x_{-1}
 * trail: a_{2k+1}, b_{2k+1} and the seed product x_{-3}x_{-2}x_{-1}x_0
 */
enum class Side { lead, trail };

std::string to_string(Side side);

/**
 * Closed-form solution for arbitrary coefficient sequences.
 *
 * The building block is, for side parity p and seed product P,
 *
 *     F(m) = prod_{k=0}^{m-1} a_{2k+p} + P sum_{l=0}^{m-1} b_{2l+p} prod_{k=l+1}^{m-1} a_{2k+p}
 *
 * and every x value is a seed, a power of x_0/x_{-4}, and a product of ratios
 * of these factors. Factors are cached, so an instance is not meant to be
 * shared between threads; x_general() is the stateless entry point.
 */
class GeneralSolution {
public:
    GeneralSolution(InitialConditions ic, CoefficientSpec a, CoefficientSpec b);

    const InitialConditions& initial_conditions() const { return ic_; }

    /// F(m) for the given side (m >= 0; F(0) = 1).
    const Rational& factor(Side side, std::int64_t m);

    /// Value at residue_index(n, j). Throws SeedZero or FormulaDenominatorZero.
    Rational x(std::int64_t n, int j);

    /// x(0, j), x(1, j), ..., x(n_max, j) via a running product.
    std::vector<Rational> residue_class(int j, std::int64_t n_max);

private:
    void require_nonzero_seeds() const;

    InitialConditions ic_;
    CoefficientSpec a_;
    CoefficientSpec b_;
    Rational lead_product_;
    Rational trail_product_;
    std::vector<Rational> lead_factors_;
    std::vector<Rational> trail_factors_;
};

Rational x_general(const InitialConditions& ic, const CoefficientSpec& a, const CoefficientSpec& b, std::int64_t n,
                   int j);

/**
 * Constant coefficients a_n = a, b_n = b. Three branches, picked by exact comparison:
 * a = 1 (arithmetic sums), a = -1 (collapsed products), otherwise geometric sums
 * (1 - a^k)/(1 - a). The printed side conditions of the chosen branch are checked
 * first and the first failure is thrown as ConditionViolated.
 */
Rational x_const_coeff(const InitialConditions& ic, const Rational& a, const Rational& b, std::int64_t n, int j);

/**
 * Two-periodic coefficients a = (a0, a1, a0, ...), b = (b0, b1, b0, ...).
 * (a0, a1) = (1, -1) and (-1, 1) use their collapsed forms; everything else
 * uses the generic two-periodic products.
 */
Rational x_two_periodic(const InitialConditions& ic, const Rational& a0, const Rational& a1, const Rational& b0,
                        const Rational& b1, std::int64_t n, int j);

/// Which printed condition list a violation comes from.
enum class ConditionFamily {
    seed_zero,
    general_denominator,
    coefficients_exhausted,
    const_geometric,         // constant a != 1, -1
    const_unit,              // constant a = 1
    const_alternating,       // constant a = -1
    two_periodic,            // generic (a0, a1)
    two_periodic_plus_minus, // (a0, a1) = (1, -1)
    two_periodic_minus_plus, // (a0, a1) = (-1, 1)
};

std::string to_string(ConditionFamily family);

/// Locates the offending factor: index s, parity i in {0,1}, and the seed-product side.
struct FactorTag {
    std::int64_t s = 0;
    int parity = 0;
    Side side = Side::lead;

    friend bool operator==(const FactorTag&, const FactorTag&) = default;
};

struct Violation {
    ConditionFamily family;
    std::optional<FactorTag> tag;
    std::string description;
};

/// Printed conditions of the constant-coefficient branch selected by `a`, for formula horizon n.
std::vector<Violation> const_coeff_conditions(const InitialConditions& ic, const Rational& a, const Rational& b,
                                              std::int64_t n);

/// Printed conditions of the two-periodic branch selected by (a0, a1), for formula horizon n.
std::vector<Violation> two_periodic_conditions(const InitialConditions& ic, const Rational& a0, const Rational& a1,
                                               const Rational& b0, const Rational& b1, std::int64_t n);

/**
 * Every violated formula condition for x-indices up to 4n+3.
 *
 * The seed_zero and general_denominator entries are exactly the obstructions
 * to x_general over that range. When both coefficient specs have period 1,
 * or period at most 2 with one of them exactly 2, the matching special-case
 * lists are appended as well.
 */
std::vector<Violation> forbidden_check(const InitialConditions& ic, const CoefficientSpec& a,
                                       const CoefficientSpec& b, std::int64_t n);

}  // namespace rdelab
