#include <doctest.h>

#include "oracle.hpp"
#include "rdelab/engine.hpp"
#include "rdelab/sampling.hpp"

using namespace rdelab;

namespace {

Window window_of(std::int64_t v) {
    return {Rational(v), Rational(v), Rational(v), Rational(v), Rational(v)};
}

InitialConditions seeds(std::initializer_list<std::int64_t> values) {
    std::array<Rational, 5> out;
    std::size_t i = 0;
    for (auto v : values) out[i++] = Rational(v);
    return InitialConditions(out);
}

std::vector<std::string> texts(const Trajectory& traj, std::int64_t from) {
    std::vector<std::string> out;
    for (auto k = from; k <= traj.last_index(); ++k) out.push_back(traj.x(k).to_string());
    return out;
}

const auto kOne = CoefficientSpec::constant(Rational(1));

}  // namespace

TEST_CASE("step") {
    CHECK(step(window_of(1), Rational(1), Rational(0)) == Rational(1));
    CHECK(step(window_of(1), Rational(1), Rational(1)) == Rational(1, 2));
    CHECK_THROWS_AS(step(window_of(1), Rational(-1), Rational(1)), SingularityError);
    CHECK(std::get<SingularityReason>(try_step(window_of(1), Rational(-1), Rational(1))) ==
          SingularityReason::zero_bracket);

    Window w = window_of(1);
    w[4] = Rational(0);
    CHECK(std::get<SingularityReason>(try_step(w, Rational(1), Rational(1))) == SingularityReason::zero_xn);
}

TEST_CASE("iterate: all-ones with a = b = 1") {
    const auto traj = iterate(seeds({1, 1, 1, 1, 1}), kOne, kOne, 5);
    CHECK(texts(traj, 1) == std::vector<std::string>{"1/2", "1", "2/3", "1", "3/8"});
    CHECK_FALSE(traj.singularity());
    CHECK(traj.last_index() == 5);
}

TEST_CASE("iterate: bracket vanishes at n = 1") {
    const auto traj = iterate(seeds({1, 1, 1, 1, -1}), kOne, kOne, 5);
    CHECK(texts(traj, 1) == std::vector<std::string>{"-1/2"});
    REQUIRE(traj.singularity());
    CHECK(traj.singularity()->index == 2);
    CHECK(traj.singularity()->reason == SingularityReason::zero_bracket);
    CHECK(traj.last_index() == 1);
    CHECK_THROWS_AS(traj.x(2), ValueUnavailable);
}

TEST_CASE("iterate: alternating a") {
    const auto traj = iterate(seeds({1, 1, 1, 1, 2}), CoefficientSpec::periodic({Rational(1), Rational(-1)}), kOne, 4);
    CHECK(texts(traj, 1) == std::vector<std::string>{"1/4", "4", "1/6", "12"});
}

TEST_CASE("iterate: zero seeds are allowed and caught as zero_xn") {
    const auto traj = iterate(seeds({1, 1, 1, 1, 0}), kOne, kOne, 3);
    REQUIRE(traj.singularity());
    CHECK(traj.singularity()->index == 1);
    CHECK(traj.singularity()->reason == SingularityReason::zero_xn);

    // x_{-3} = 0 gives x_1 = 0, which then stalls the step forming x_2.
    const auto later = iterate(seeds({1, 0, 1, 1, 1}), kOne, kOne, 3);
    REQUIRE(later.singularity());
    CHECK(later.x(1) == Rational(0));
    CHECK(later.singularity()->index == 2);
    CHECK(later.singularity()->reason == SingularityReason::zero_xn);
}

TEST_CASE("iterate: explicit coefficients that run out") {
    const auto a = CoefficientSpec::explicit_list({Rational(1), Rational(2)});
    CHECK_NOTHROW(iterate(seeds({1, 1, 1, 1, 1}), a, kOne, 2));
    CHECK_THROWS_AS(iterate(seeds({1, 1, 1, 1, 1}), a, kOne, 3), IndexBeyondExplicitData);
    CHECK_THROWS_AS(iterate(seeds({1, 1, 1, 1, 1}), kOne, kOne, 0), Error);
}

TEST_CASE("iterate matches the reference substitution, re-substitutes, and is prefix stable") {
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        auto rng = SeededRng::for_trial(17, trial);
        auto options = SamplingOptions{};
        options.denominator_bound = 3;
        const auto inst = random_instance(rng, options);
        const auto traj = iterate(inst.ic, inst.a, inst.b, 30);
        const auto ref = oracle::iterate(inst.ic, inst.a, inst.b, 30);

        REQUIRE(traj.values().size() == ref.x.size());
        for (std::size_t i = 0; i < ref.x.size(); ++i) CHECK(traj.values()[i].to_string() == oracle::to_text(ref.x[i]));
        CHECK(traj.singularity().has_value() == ref.singular_index.has_value());
        if (traj.singularity()) {
            CHECK(traj.singularity()->index == *ref.singular_index);
            CHECK(to_string(traj.singularity()->reason) == ref.reason);
        }

        for (std::int64_t n = 0; n + 1 <= traj.last_index(); ++n) {
            CHECK(step_residual(traj, inst.a, inst.b, n).is_zero());
        }

        const auto shorter = iterate(inst.ic, inst.a, inst.b, 12);
        for (std::int64_t k = -4; k <= shorter.last_index(); ++k) CHECK(shorter.x(k) == traj.x(k));
        if (shorter.singularity()) CHECK(shorter.singularity() == traj.singularity());
        CHECK(iterate(inst.ic, inst.a, inst.b, 30) == traj);
    }
}
