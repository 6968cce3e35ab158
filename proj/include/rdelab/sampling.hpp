#pragma once

#include <cstdint>
#include <random>

#include "rdelab/model.hpp"

namespace rdelab {

/**
 * Reproducible random source for verification campaigns.
 *
 * The raw generator is std::mt19937_64, whose output sequence is fixed by the
 * C++ standard. Range reduction is done here (rejection sampling on the raw
 * 64-bit words) rather than through std::uniform_int_distribution, whose
 * algorithm differs between standard libraries.
 */
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for trial `index` of a campaign seeded with `seed`.
    static SeededRng for_trial(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

struct SamplingOptions {
    std::int64_t numerator_bound = 9;    // numerators in [-bound, bound]
    std::int64_t denominator_bound = 9;  // denominators in [1, bound]
    std::int64_t max_period = 4;
    bool nonzero_b = false;              // draw b_n from the nonzero rationals only
};

/// numerator in [-bound, bound] (without 0 when `nonzero`), denominator in [1, den_bound].
Rational random_rational(SeededRng& rng, std::int64_t bound, std::int64_t den_bound, bool nonzero);

InitialConditions random_seeds(SeededRng& rng, const SamplingOptions& options = {});

/// Constant with probability 1/2, otherwise periodic with period uniform in [1, max_period].
CoefficientSpec random_coefficients(SeededRng& rng, const SamplingOptions& options, bool nonzero);

struct Instance {
    InitialConditions ic;
    CoefficientSpec a = CoefficientSpec::constant(Rational(1));
    CoefficientSpec b = CoefficientSpec::constant(Rational(1));
};

/// Draw order: five seeds (x_{-4} first), then a, then b.
Instance random_instance(SeededRng& rng, const SamplingOptions& options = {});

}  // namespace rdelab
