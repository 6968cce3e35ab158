#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "rdelab/closedform.hpp"
#include "rdelab/engine.hpp"
#include "rdelab/errors.hpp"
#include "rdelab/sampling.hpp"

using namespace rdelab;

namespace {

const auto kOne = CoefficientSpec::constant(Rational(1));

InitialConditions seeds(std::initializer_list<std::int64_t> values) {
    std::array<Rational, 5> out;
    std::size_t i = 0;
    for (auto v : values) out[i++] = Rational(v);
    return InitialConditions(out);
}

bool contains(const std::vector<Violation>& list, ConditionFamily family, const std::string& needle) {
    return std::any_of(list.begin(), list.end(), [&](const Violation& v) {
        return v.family == family && v.description.find(needle) != std::string::npos;
    });
}

// Reference value of x_k by direct substitution, or nullopt past a singularity.
std::optional<std::string> reference(const InitialConditions& ic, const CoefficientSpec& a, const CoefficientSpec& b,
                                     std::int64_t k) {
    const auto run = oracle::iterate(ic, a, b, std::max<std::int64_t>(k, 1));
    const auto pos = static_cast<std::size_t>(k + 4);
    if (pos >= run.x.size()) return std::nullopt;
    return oracle::to_text(run.x[pos]);
}

}  // namespace

TEST_CASE("residue addressing") {
    CHECK(residue_index(0, 0) == 0);
    CHECK(residue_index(0, 1) == -3);
    CHECK(residue_index(1, 0) == 4);
    CHECK(residue_index(2, 1) == 5);
    CHECK(residue_index(25, 3) == 99);
    for (std::int64_t k = -3; k <= 200; ++k) {
        const auto [n, j] = residue_of(k);
        CHECK(residue_index(n, j) == k);
    }
    CHECK_THROWS_AS(residue_of(-4), Error);
}

TEST_CASE("x_general examples") {
    const auto ic = InitialConditions({Rational(2, 3), Rational(-5), Rational(7, 2), Rational(1, 9), Rational(-4)});
    const auto a = CoefficientSpec::periodic({Rational(3), Rational(-1, 2), Rational(5)});
    CHECK(x_general(ic, a, kOne, 0, 0) == ic.x(0));
    CHECK(x_general(ic, a, kOne, 0, 1) == ic.x(-3));
    CHECK(x_general(ic, a, kOne, 0, 2) == ic.x(-2));
    CHECK(x_general(ic, a, kOne, 0, 3) == ic.x(-1));

    CHECK(x_general(seeds({1, 1, 1, 1, 1}), kOne, kOne, 1, 0) == Rational(1));
    CHECK(x_general(seeds({1, 1, 1, 1, 1}), kOne, kOne, 2, 1) == Rational(3, 8));
}

TEST_CASE("x_general errors") {
    CHECK_THROWS_AS(x_general(seeds({1, 1, 1, 1, 0}), kOne, kOne, 1, 0), SeedZero);
    CHECK_THROWS_AS(x_general(seeds({1, 1, 0, 1, 1}), kOne, kOne, 1, 2), SeedZero);
    CHECK_THROWS_AS(x_general(seeds({1, 1, 1, 1, 1}), kOne, kOne, 1, 4), Error);

    // trail F(1) = a_1 + b_1 x_{-3}x_{-2}x_{-1}x_0 = 1 - 1 = 0 is the denominator of x_2.
    try {
        x_general(seeds({1, 1, 1, 1, -1}), kOne, kOne, 1, 2);
        FAIL("expected FormulaDenominatorZero");
    } catch (const FormulaDenominatorZero& e) {
        CHECK(e.s() == 0);
        CHECK(e.j() == 2);
        CHECK(e.factor() == "trail F(1)");
    }
}

TEST_CASE("factor F(m) against its literal double-sum definition") {
    auto rng = SeededRng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto inst = random_instance(rng);
        GeneralSolution solution(inst.ic, inst.a, inst.b);
        for (const Side side : {Side::lead, Side::trail}) {
            const int p = side == Side::lead ? 0 : 1;
            const Rational product = side == Side::lead ? inst.ic.lead_product() : inst.ic.trail_product();
            for (std::int64_t m = 0; m <= 9; ++m) {
                Rational head(1);
                for (std::int64_t k = 0; k < m; ++k) head *= inst.a.at(2 * k + p);
                Rational sum(0);
                for (std::int64_t l = 0; l < m; ++l) {
                    Rational term = inst.b.at(2 * l + p);
                    for (std::int64_t k = l + 1; k < m; ++k) term *= inst.a.at(2 * k + p);
                    sum += term;
                }
                CHECK(solution.factor(side, m) == head + product * sum);
            }
        }
    }
}

TEST_CASE("x_general equals direct substitution on random instances (all residue classes, signs mixed)") {
    int compared = 0;
    for (std::uint64_t trial = 0; trial < 60; ++trial) {
        auto rng = SeededRng::for_trial(37, trial);
        const auto inst = random_instance(rng);
        if (!forbidden_check(inst.ic, inst.a, inst.b, 6).empty()) continue;
        GeneralSolution solution(inst.ic, inst.a, inst.b);
        for (std::int64_t k = -3; k <= 27; ++k) {
            const auto expected = reference(inst.ic, inst.a, inst.b, k);
            if (!expected) break;
            const auto [n, j] = residue_of(k);
            CHECK(solution.x(n, j).to_string() == *expected);
            ++compared;
        }
        for (int j = 0; j < 4; ++j) {
            const auto cls = solution.residue_class(j, 6);
            for (std::int64_t n = 0; n <= 6; ++n) CHECK(cls[static_cast<std::size_t>(n)] == solution.x(n, j));
        }
    }
    CHECK(compared > 1000);
}

TEST_CASE("x_const_coeff examples") {
    const auto ic = seeds({1, 2, 1, 1, 1});
    CHECK(x_const_coeff(ic, Rational(-1), Rational(1), 1, 1) == Rational(2));
    for (std::int64_t n = 0; n <= 25; ++n) CHECK(x_const_coeff(ic, Rational(-1), Rational(1), n, 0) == Rational(1));
    CHECK(x_const_coeff(seeds({1, 1, 1, 1, 1}), Rational(1), Rational(1), 1, 2) == Rational(1));
}

TEST_CASE("x_const_coeff branches agree with x_general and substitution") {
    int compared = 0;
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        auto rng = SeededRng::for_trial(41, trial);
        const auto ic = random_seeds(rng);
        // Mix the special values 1 and -1 into the draw for a.
        const auto pick = rng.uniform(0, 3);
        const Rational a = pick == 0 ? Rational(1) : pick == 1 ? Rational(-1) : random_rational(rng, 9, 9, false);
        const Rational b = random_rational(rng, 9, 9, false);
        const auto as = CoefficientSpec::constant(a);
        const auto bs = CoefficientSpec::constant(b);
        const std::int64_t horizon = 5;
        if (!forbidden_check(ic, as, bs, horizon).empty()) continue;
        for (int j = 0; j < 4; ++j) {
            for (std::int64_t n = 0; n <= horizon; ++n) {
                const Rational value = x_const_coeff(ic, a, b, n, j);
                CHECK(value == x_general(ic, as, bs, n, j));
                const auto expected = reference(ic, as, bs, residue_index(n, j));
                if (expected) CHECK(value.to_string() == *expected);
                ++compared;
            }
        }
    }
    CHECK(compared > 2000);
}

TEST_CASE("a = 1 arithmetic-sum forms equal the general products at a_n = 1") {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        auto rng = SeededRng::for_trial(43, trial);
        const auto ic = random_seeds(rng);
        const Rational b = random_rational(rng, 9, 9, false);
        const auto bs = CoefficientSpec::constant(b);
        if (!forbidden_check(ic, kOne, bs, 8).empty()) continue;
        for (int j = 0; j < 4; ++j) {
            for (std::int64_t n = 0; n <= 8; ++n) CHECK(x_const_coeff(ic, Rational(1), b, n, j) == x_general(ic, kOne, bs, n, j));
        }
    }
}

TEST_CASE("x_const_coeff condition violations") {
    // b x_{-4}x_{-3}x_{-2}x_{-1} = 1 is excluded in the a = -1 branch.
    CHECK_THROWS_AS(x_const_coeff(seeds({1, 1, 1, 1, 2}), Rational(-1), Rational(1), 1, 1), ConditionViolated);
    // a = 1: (2j-1) b x_{-3}x_{-2}x_{-1}x_0 = -1 at j = 1
    try {
        x_const_coeff(seeds({1, 1, 1, 1, -1}), Rational(1), Rational(1), 1, 0);
        FAIL("expected ConditionViolated");
    } catch (const ConditionViolated& e) {
        CHECK(e.description().find("(2j-1)*b*x_{-3}x_{-2}x_{-1}x_0 = -1 at j=1") != std::string::npos);
    }
    CHECK_THROWS_AS(x_const_coeff(seeds({1, 1, 1, 1, 0}), Rational(2), Rational(1), 1, 0), SeedZero);
    // a = 2, b = -1, P = 1: a^1 + b P (1 - a)/(1 - a) = 2 - 1 = 1 is fine, but with b = -2 it vanishes.
    CHECK_THROWS_AS(x_const_coeff(seeds({1, 1, 1, 1, 1}), Rational(2), Rational(-2), 1, 1), ConditionViolated);
}

TEST_CASE("x_two_periodic examples") {
    const auto ic = seeds({1, 1, 1, 1, 2});
    CHECK(x_two_periodic(ic, Rational(1), Rational(-1), Rational(1), Rational(1), 1, 0) == Rational(12));
    CHECK(x_two_periodic(ic, Rational(1), Rational(-1), Rational(1), Rational(1), 1, 1) == Rational(1, 4));
    try {
        x_two_periodic(seeds({1, 1, 1, 1, 1}), Rational(1), Rational(-1), Rational(1), Rational(1), 1, 0);
        FAIL("expected ConditionViolated");
    } catch (const ConditionViolated& e) {
        CHECK(e.description() == "b_1*x_{-3}x_{-2}x_{-1}x_0 = 1");
    }
}

TEST_CASE("x_two_periodic branches agree with x_general and substitution") {
    int compared = 0;
    for (std::uint64_t trial = 0; trial < 300; ++trial) {
        auto rng = SeededRng::for_trial(47, trial);
        const auto ic = random_seeds(rng);
        const auto pick = rng.uniform(0, 2);
        Rational a0 = random_rational(rng, 9, 9, false);
        Rational a1 = random_rational(rng, 9, 9, false);
        if (pick == 0) a0 = Rational(1), a1 = Rational(-1);
        if (pick == 1) a0 = Rational(-1), a1 = Rational(1);
        const Rational b0 = random_rational(rng, 9, 9, false);
        const Rational b1 = random_rational(rng, 9, 9, false);
        const auto as = CoefficientSpec::periodic({a0, a1});
        const auto bs = CoefficientSpec::periodic({b0, b1});
        if (!forbidden_check(ic, as, bs, 5).empty()) continue;
        for (int j = 0; j < 4; ++j) {
            for (std::int64_t n = 0; n <= 5; ++n) {
                const Rational value = x_two_periodic(ic, a0, a1, b0, b1, n, j);
                CHECK(value == x_general(ic, as, bs, n, j));
                const auto expected = reference(ic, as, bs, residue_index(n, j));
                if (expected) CHECK(value.to_string() == *expected);
                ++compared;
            }
        }
    }
    CHECK(compared > 3000);
}

TEST_CASE("forbidden_check") {
    CHECK(forbidden_check(seeds({1, 1, 1, 1, 1}), kOne, kOne, 10).empty());

    const auto hits = forbidden_check(seeds({1, 1, 1, 1, -1}), kOne, kOne, 1);
    CHECK(contains(hits, ConditionFamily::const_unit, "(2j-1)*b*x_{-3}x_{-2}x_{-1}x_0 = -1 at j=1"));
    CHECK(contains(hits, ConditionFamily::general_denominator, "trail denominator factor F(1) = 0"));
    for (const auto& v : hits) {
        if (v.family == ConditionFamily::const_unit) {
            REQUIRE(v.tag);
            CHECK(*v.tag == FactorTag{0, 0, Side::trail});
        }
    }

    CHECK(contains(forbidden_check(seeds({1, 1, 1, 1, 0}), kOne, kOne, 1), ConditionFamily::seed_zero, "x_{0} = 0"));

    const auto explicit_a = CoefficientSpec::explicit_list({Rational(1), Rational(2)});
    CHECK(contains(forbidden_check(seeds({1, 1, 1, 1, 1}), explicit_a, kOne, 3), ConditionFamily::coefficients_exhausted,
                   "beyond explicit data"));

    const auto two = forbidden_check(seeds({1, 1, 1, 1, 1}), CoefficientSpec::periodic({Rational(1), Rational(-1)}),
                                     kOne, 2);
    CHECK(contains(two, ConditionFamily::two_periodic_plus_minus, "b_1*x_{-3}x_{-2}x_{-1}x_0 = 1"));
}

TEST_CASE("forbidden_check empty means x_general is defined up to x_{4n+3}") {
    for (std::uint64_t trial = 0; trial < 150; ++trial) {
        auto rng = SeededRng::for_trial(53, trial);
        auto options = SamplingOptions{};
        options.numerator_bound = 2;  // small values make vanishing factors common
        options.denominator_bound = 2;
        const auto inst = random_instance(rng, options);
        const std::int64_t horizon = 3;
        const auto violations = forbidden_check(inst.ic, inst.a, inst.b, horizon);
        bool general_clear = true;
        for (const auto& v : violations) {
            if (v.family == ConditionFamily::seed_zero || v.family == ConditionFamily::general_denominator) {
                general_clear = false;
            }
        }
        bool evaluated = true;
        try {
            for (std::int64_t k = -3; k <= 4 * horizon + 3; ++k) {
                const auto [n, j] = residue_of(k);
                (void)x_general(inst.ic, inst.a, inst.b, n, j);
            }
        } catch (const FormulaDenominatorZero&) {
            evaluated = false;
        }
        CHECK(general_clear == evaluated);
    }
}
