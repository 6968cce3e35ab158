#include "rdelab/sampling.hpp"

#include <limits>

#include "rdelab/errors.hpp"

namespace rdelab {

namespace {

// splitmix64 finaliser; decorrelates neighbouring trial indices.
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

SeededRng SeededRng::for_trial(std::uint64_t seed, std::uint64_t index) {
    return SeededRng(mix(mix(seed) ^ index));
}

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw Error("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw = next();
    while (draw >= limit) draw = next();
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % span);
}

Rational random_rational(SeededRng& rng, std::int64_t bound, std::int64_t den_bound, bool nonzero) {
    std::int64_t numerator = 0;
    if (nonzero) {
        // 2*bound choices: -bound..-1, 1..bound
        const std::int64_t k = rng.uniform(0, 2 * bound - 1);
        numerator = k < bound ? k - bound : k - bound + 1;
    } else {
        numerator = rng.uniform(-bound, bound);
    }
    const std::int64_t denominator = rng.uniform(1, den_bound);
    return Rational(numerator, denominator);
}

InitialConditions random_seeds(SeededRng& rng, const SamplingOptions& options) {
    std::array<Rational, 5> seeds;
    for (auto& seed : seeds) seed = random_rational(rng, options.numerator_bound, options.denominator_bound, true);
    return InitialConditions(std::move(seeds));
}

CoefficientSpec random_coefficients(SeededRng& rng, const SamplingOptions& options, bool nonzero) {
    const bool constant = rng.uniform(0, 1) == 0;
    const std::int64_t period = constant ? 1 : rng.uniform(1, options.max_period);
    std::vector<Rational> values;
    for (std::int64_t i = 0; i < period; ++i) {
        values.push_back(random_rational(rng, options.numerator_bound, options.denominator_bound, nonzero));
    }
    return constant ? CoefficientSpec::constant(values.front()) : CoefficientSpec::periodic(std::move(values));
}

Instance random_instance(SeededRng& rng, const SamplingOptions& options) {
    Instance instance;
    instance.ic = random_seeds(rng, options);
    instance.a = random_coefficients(rng, options, false);
    instance.b = random_coefficients(rng, options, options.nonzero_b);
    return instance;
}

}  // namespace rdelab
