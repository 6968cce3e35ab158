#include "rdelab/closedform.hpp"

#include "rdelab/errors.hpp"

namespace rdelab {

namespace {

// Layout of the four residue-class formulas. Each one is
//   seed * (x_0/x_{-4})^{+-n} * prod_{s<n} F_num(2s + num_offset) / F_den(2s + den_offset).
struct Shape {
    Side num_side;
    int num_offset;
    Side den_side;
    int den_offset;
    bool grows;  // true: (x_0/x_{-4})^n, false: (x_{-4}/x_0)^n
    int seed;    // x-index of the leading seed
};

constexpr Shape kShapes[4] = {
    {Side::lead, 2, Side::trail, 2, true, 0},
    {Side::trail, 0, Side::lead, 1, false, -3},
    {Side::lead, 1, Side::trail, 1, true, -2},
    {Side::trail, 1, Side::lead, 2, false, -1},
};

void check_residue(std::int64_t n, int j) {
    if (j < 0 || j > 3) throw Error("residue class j must be in 0..3, got " + std::to_string(j));
    if (n < 0) throw Error("n must be nonnegative, got " + std::to_string(n));
}

void require_seeds(const InitialConditions& ic) {
    for (int m = -4; m <= 0; ++m) {
        if (ic.x(m).is_zero()) throw SeedZero(m);
    }
}

Rational seed_ratio(const InitialConditions& ic, bool grows) {
    return grows ? ic.x(0) / ic.x(-4) : ic.x(-4) / ic.x(0);
}

std::string side_product(Side side) {
    return side == Side::lead ? "x_{-4}x_{-3}x_{-2}x_{-1}" : "x_{-3}x_{-2}x_{-1}x_0";
}

FactorTag tag_for_length(Side side, std::int64_t m) {
    // m = 2s + 1 + i
    return FactorTag{(m - 1) / 2, static_cast<int>((m - 1) % 2), side};
}

// Evaluates one residue-class formula with the supplied factor function; a zero
// denominator is reported through on_zero(s, side, m), which must throw.
template <typename FactorFn, typename ZeroFn>
Rational evaluate_shape(const InitialConditions& ic, std::int64_t n, int j, FactorFn&& factor, ZeroFn&& on_zero) {
    const Shape& shape = kShapes[j];
    Rational result = ic.x(shape.seed) * seed_ratio(ic, shape.grows).pow(n);
    for (std::int64_t s = 0; s < n; ++s) {
        const std::int64_t den_m = 2 * s + shape.den_offset;
        const Rational den = factor(shape.den_side, den_m);
        if (den.is_zero()) on_zero(s, shape.den_side, den_m);
        result *= factor(shape.num_side, 2 * s + shape.num_offset);
        result /= den;
    }
    return result;
}

[[noreturn]] void throw_condition_denominator(std::int64_t s, Side side, std::int64_t m) {
    throw ConditionViolated("denominator factor on the " + to_string(side) + " side vanishes at s=" +
                            std::to_string(s) + " (m=" + std::to_string(m) + ")");
}

// --- constant coefficients -------------------------------------------------

// a^k + b P (1 - a^k)/(1 - a), a != 1
Rational geometric_factor(const Rational& a, const Rational& b, const Rational& product, std::int64_t k) {
    const Rational ak = a.pow(k);
    return ak + b * product * ((Rational(1) - ak) / (Rational(1) - a));
}

// 1 + k b P
Rational unit_factor(const Rational& b, const Rational& product, std::int64_t k) {
    return Rational(1) + Rational(k) * b * product;
}

Rational const_alternating(const InitialConditions& ic, const Rational& b, std::int64_t n, int j) {
    const Rational lead = Rational(-1) + b * ic.lead_product();
    const Rational trail = Rational(-1) + b * ic.trail_product();
    const Rational x0 = ic.x(0);
    const Rational xm4 = ic.x(-4);
    switch (j) {
        case 0: return x0.pow(n + 1) / xm4.pow(n);
        case 1: return xm4.pow(n) * ic.x(-3) / x0.pow(n) * lead.pow(-n);
        case 2: return x0.pow(n) * ic.x(-2) / xm4.pow(n) * (lead / trail).pow(n);
        default: return xm4.pow(n) * ic.x(-1) / x0.pow(n) * trail.pow(n);
    }
}

// --- two-periodic coefficients ---------------------------------------------

// c^k + d P sum_{l=0}^{k-1} c^l
Rational two_periodic_factor(const Rational& c, const Rational& d, const Rational& product, std::int64_t k) {
    Rational sum(0);
    Rational power(1);
    for (std::int64_t l = 0; l < k; ++l) {
        sum += power;
        power *= c;
    }
    return power + d * product * sum;
}

Rational plus_minus(const InitialConditions& ic, const Rational& b0, const Rational& b1, std::int64_t n, int j) {
    const Rational lead = b0 * ic.lead_product();
    const Rational shifted = Rational(-1) + b1 * ic.trail_product();
    const Rational x0 = ic.x(0);
    const Rational xm4 = ic.x(-4);
    Rational product(1);
    switch (j) {
        case 0:
            for (std::int64_t s = 0; s < n; ++s) product *= Rational(1) + Rational(2 * s + 2) * lead;
            return x0.pow(n + 1) / xm4.pow(n) * product;
        case 1:
            for (std::int64_t s = 0; s < n; ++s) product /= Rational(1) + Rational(2 * s + 1) * lead;
            return xm4.pow(n) * ic.x(-3) / x0.pow(n) * product;
        case 2:
            for (std::int64_t s = 0; s < n; ++s) product *= Rational(1) + Rational(2 * s + 1) * lead;
            return ic.x(-2) * (x0 / (xm4 * shifted)).pow(n) * product;
        default:
            for (std::int64_t s = 0; s < n; ++s) product /= Rational(1) + Rational(2 * s + 2) * lead;
            return ic.x(-1) * (xm4 * shifted / x0).pow(n) * product;
    }
}

Rational minus_plus(const InitialConditions& ic, const Rational& b0, const Rational& b1, std::int64_t n, int j) {
    const Rational trail = b1 * ic.trail_product();
    const Rational shifted = Rational(-1) + b0 * ic.lead_product();
    const Rational x0 = ic.x(0);
    const Rational xm4 = ic.x(-4);
    Rational product(1);
    switch (j) {
        case 0:
            for (std::int64_t s = 0; s < n; ++s) product /= Rational(1) + Rational(2 * s + 2) * trail;
            return x0.pow(n + 1) / xm4.pow(n) * product;
        case 1:
            for (std::int64_t s = 0; s < n; ++s) product *= Rational(1) + Rational(2 * s) * trail;
            return ic.x(-3) * (xm4 / (x0 * shifted)).pow(n) * product;
        case 2:
            for (std::int64_t s = 0; s < n; ++s) product /= Rational(1) + Rational(2 * s + 1) * trail;
            return ic.x(-2) * (x0 * shifted / xm4).pow(n) * product;
        default:
            for (std::int64_t s = 0; s < n; ++s) product *= Rational(1) + Rational(2 * s + 1) * trail;
            return xm4.pow(n) * ic.x(-1) / x0.pow(n) * product;
    }
}

bool is_value(const Rational& r, std::int64_t v) {
    return r == Rational(v);
}

}  // namespace

std::int64_t residue_index(std::int64_t n, int j) {
    return j == 0 ? 4 * n : 4 * n + j - 4;
}

std::pair<std::int64_t, int> residue_of(std::int64_t index) {
    if (index < -3) throw Error("x_" + std::to_string(index) + " is not addressed by any residue class");
    const int j = static_cast<int>(((index % 4) + 4) % 4);
    const std::int64_t n = j == 0 ? index / 4 : (index - j + 4) / 4;
    return {n, j};
}

std::int64_t block_limit(int j, std::int64_t n) {
    if (j < 0 || j > 3) throw Error("residue class j must be in 0..3, got " + std::to_string(j));
    return j == 0 ? n : n + 1;
}

std::string to_string(Side side) {
    return side == Side::lead ? "lead" : "trail";
}

GeneralSolution::GeneralSolution(InitialConditions ic, CoefficientSpec a, CoefficientSpec b)
    : ic_(std::move(ic)), a_(std::move(a)), b_(std::move(b)) {
    lead_product_ = ic_.lead_product();
    trail_product_ = ic_.trail_product();
}

const Rational& GeneralSolution::factor(Side side, std::int64_t m) {
    if (m < 0) throw Error("factor length must be nonnegative");
    auto& cache = side == Side::lead ? lead_factors_ : trail_factors_;
    const Rational& product = side == Side::lead ? lead_product_ : trail_product_;
    const std::int64_t parity = side == Side::lead ? 0 : 1;
    while (static_cast<std::int64_t>(cache.size()) <= m) {
        const auto length = static_cast<std::int64_t>(cache.size());
        // Evaluated from scratch for every length; the running tail is prod_{k=l+1}^{length-1} a_{2k+p}.
        Rational tail(1);
        Rational sum(0);
        for (std::int64_t l = length - 1; l >= 0; --l) {
            sum += b_.at(2 * l + parity) * tail;
            tail *= a_.at(2 * l + parity);
        }
        cache.push_back(tail + product * sum);
    }
    return cache[static_cast<std::size_t>(m)];
}

void GeneralSolution::require_nonzero_seeds() const {
    require_seeds(ic_);
}

Rational GeneralSolution::x(std::int64_t n, int j) {
    check_residue(n, j);
    require_nonzero_seeds();
    return evaluate_shape(
        ic_, n, j, [this](Side side, std::int64_t m) { return factor(side, m); },
        [j](std::int64_t s, Side side, std::int64_t m) {
            throw FormulaDenominatorZero(s, j, to_string(side) + " F(" + std::to_string(m) + ")");
        });
}

std::vector<Rational> GeneralSolution::residue_class(int j, std::int64_t n_max) {
    check_residue(n_max, j);
    require_nonzero_seeds();
    const Shape& shape = kShapes[j];
    const Rational ratio = seed_ratio(ic_, shape.grows);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    out.push_back(ic_.x(shape.seed));
    for (std::int64_t s = 0; s < n_max; ++s) {
        const std::int64_t den_m = 2 * s + shape.den_offset;
        const Rational& den = factor(shape.den_side, den_m);
        if (den.is_zero()) {
            throw FormulaDenominatorZero(s, j, to_string(shape.den_side) + " F(" + std::to_string(den_m) + ")");
        }
        Rational next = out.back() * ratio;
        next *= factor(shape.num_side, 2 * s + shape.num_offset);
        next /= den;
        out.push_back(std::move(next));
    }
    return out;
}

Rational x_general(const InitialConditions& ic, const CoefficientSpec& a, const CoefficientSpec& b, std::int64_t n,
                   int j) {
    GeneralSolution solution(ic, a, b);
    return solution.x(n, j);
}

std::string to_string(ConditionFamily family) {
    switch (family) {
        case ConditionFamily::seed_zero: return "seed_zero";
        case ConditionFamily::general_denominator: return "general_denominator";
        case ConditionFamily::coefficients_exhausted: return "coefficients_exhausted";
        case ConditionFamily::const_geometric: return "const_geometric";
        case ConditionFamily::const_unit: return "const_unit";
        case ConditionFamily::const_alternating: return "const_alternating";
        case ConditionFamily::two_periodic: return "two_periodic";
        case ConditionFamily::two_periodic_plus_minus: return "two_periodic_plus_minus";
        case ConditionFamily::two_periodic_minus_plus: return "two_periodic_minus_plus";
    }
    return "?";
}

std::vector<Violation> const_coeff_conditions(const InitialConditions& ic, const Rational& a, const Rational& b,
                                              std::int64_t n) {
    std::vector<Violation> out;
    const Rational lead = ic.lead_product();
    const Rational trail = ic.trail_product();

    if (is_value(a, 1)) {
        for (std::int64_t j = 1; j <= n; ++j) {
            const std::string at = " = -1 at j=" + std::to_string(j);
            const Rational odd(2 * j - 1);
            const Rational even(2 * j);
            if (is_value(even * b * lead, -1)) {
                out.push_back({ConditionFamily::const_unit, tag_for_length(Side::lead, 2 * j),
                               "2j*b*" + side_product(Side::lead) + at});
            }
            if (is_value(odd * b * lead, -1)) {
                out.push_back({ConditionFamily::const_unit, tag_for_length(Side::lead, 2 * j - 1),
                               "(2j-1)*b*" + side_product(Side::lead) + at});
            }
            if (is_value(even * b * trail, -1)) {
                out.push_back({ConditionFamily::const_unit, tag_for_length(Side::trail, 2 * j),
                               "2j*b*" + side_product(Side::trail) + at});
            }
            if (is_value(odd * b * trail, -1)) {
                out.push_back({ConditionFamily::const_unit, tag_for_length(Side::trail, 2 * j - 1),
                               "(2j-1)*b*" + side_product(Side::trail) + at});
            }
        }
        return out;
    }

    if (is_value(a, -1)) {
        if (is_value(b * lead, 1)) {
            out.push_back({ConditionFamily::const_alternating, tag_for_length(Side::lead, 1),
                           "b*" + side_product(Side::lead) + " = 1"});
        }
        if (is_value(b * trail, 1)) {
            out.push_back({ConditionFamily::const_alternating, tag_for_length(Side::trail, 1),
                           "b*" + side_product(Side::trail) + " = 1"});
        }
        return out;
    }

    const Rational one_minus_a = Rational(1) - a;
    for (std::int64_t s = 0; s < n; ++s) {
        for (int i = 0; i <= 1; ++i) {
            const std::string at = " = 0 at (i,s)=(" + std::to_string(i) + "," + std::to_string(s) + ")";
            const Rational ak = a.pow(2 * s + i);
            if ((one_minus_a * ak + (Rational(1) - ak) * b * trail).is_zero()) {
                out.push_back({ConditionFamily::const_geometric, FactorTag{s, i, Side::trail},
                               "(1-a)a^{2s+i} + (1-a^{2s+i})b*" + side_product(Side::trail) + at});
            }
            const Rational ak1 = a.pow(2 * s + 1 + i);
            if ((one_minus_a * ak1 + (Rational(1) - ak1) * b * lead).is_zero()) {
                out.push_back({ConditionFamily::const_geometric, FactorTag{s, i, Side::lead},
                               "(1-a)a^{2s+1+i} + (1-a^{2s+1+i})b*" + side_product(Side::lead) + at});
            }
        }
    }
    return out;
}

std::vector<Violation> two_periodic_conditions(const InitialConditions& ic, const Rational& a0, const Rational& a1,
                                               const Rational& b0, const Rational& b1, std::int64_t n) {
    std::vector<Violation> out;
    const Rational lead = ic.lead_product();
    const Rational trail = ic.trail_product();

    const bool plus_minus_case = is_value(a0, 1) && is_value(a1, -1);
    const bool minus_plus_case = is_value(a0, -1) && is_value(a1, 1);
    if (plus_minus_case || minus_plus_case) {
        const auto family =
            plus_minus_case ? ConditionFamily::two_periodic_plus_minus : ConditionFamily::two_periodic_minus_plus;
        // The collapsed side carries "b P != 1"; the other side carries "j b P != -1, j = 1..2n".
        const Side fixed_side = plus_minus_case ? Side::trail : Side::lead;
        const Side counted_side = plus_minus_case ? Side::lead : Side::trail;
        const Rational& fixed_b = plus_minus_case ? b1 : b0;
        const Rational& counted_b = plus_minus_case ? b0 : b1;
        const std::string fixed_name = plus_minus_case ? "b_1" : "b_0";
        const std::string counted_name = plus_minus_case ? "b_0" : "b_1";
        const Rational fixed_product = fixed_side == Side::lead ? lead : trail;
        const Rational counted_product = counted_side == Side::lead ? lead : trail;

        if (is_value(fixed_b * fixed_product, 1)) {
            out.push_back({family, tag_for_length(fixed_side, 1),
                           fixed_name + "*" + side_product(fixed_side) + " = 1"});
        }
        for (std::int64_t j = 1; j <= 2 * n; ++j) {
            if (is_value(Rational(j) * counted_b * counted_product, -1)) {
                out.push_back({family, tag_for_length(counted_side, j),
                               "j*" + counted_name + "*" + side_product(counted_side) + " = -1 at j=" +
                                   std::to_string(j)});
            }
        }
        return out;
    }

    for (std::int64_t s = 0; s < n; ++s) {
        for (int i = 0; i <= 1; ++i) {
            const std::string at = " = 0 at (i,s)=(" + std::to_string(i) + "," + std::to_string(s) + ")";
            if (two_periodic_factor(a0, b0, lead, 2 * s + 1 + i).is_zero()) {
                out.push_back({ConditionFamily::two_periodic, FactorTag{s, i, Side::lead},
                               "a_0^{2s+1+i} + b_0*" + side_product(Side::lead) + "*sum_{l=0}^{2s+i} a_0^l" + at});
            }
            if (two_periodic_factor(a1, b1, trail, 2 * s + 1 + i).is_zero()) {
                out.push_back({ConditionFamily::two_periodic, FactorTag{s, i, Side::trail},
                               "a_1^{2s+1+i} + b_1*" + side_product(Side::trail) + "*sum_{l=0}^{2s+i} a_1^l" + at});
            }
        }
    }
    return out;
}

Rational x_const_coeff(const InitialConditions& ic, const Rational& a, const Rational& b, std::int64_t n, int j) {
    check_residue(n, j);
    require_seeds(ic);
    const auto violations = const_coeff_conditions(ic, a, b, n);
    if (!violations.empty()) throw ConditionViolated(violations.front().description);

    if (is_value(a, -1)) return const_alternating(ic, b, n, j);

    const Rational lead = ic.lead_product();
    const Rational trail = ic.trail_product();
    const bool unit = is_value(a, 1);
    auto factor = [&](Side side, std::int64_t k) {
        const Rational& product = side == Side::lead ? lead : trail;
        return unit ? unit_factor(b, product, k) : geometric_factor(a, b, product, k);
    };
    return evaluate_shape(ic, n, j, factor, throw_condition_denominator);
}

Rational x_two_periodic(const InitialConditions& ic, const Rational& a0, const Rational& a1, const Rational& b0,
                        const Rational& b1, std::int64_t n, int j) {
    check_residue(n, j);
    require_seeds(ic);
    const auto violations = two_periodic_conditions(ic, a0, a1, b0, b1, n);
    if (!violations.empty()) throw ConditionViolated(violations.front().description);

    if (is_value(a0, 1) && is_value(a1, -1)) return plus_minus(ic, b0, b1, n, j);
    if (is_value(a0, -1) && is_value(a1, 1)) return minus_plus(ic, b0, b1, n, j);

    const Rational lead = ic.lead_product();
    const Rational trail = ic.trail_product();
    auto factor = [&](Side side, std::int64_t k) {
        return side == Side::lead ? two_periodic_factor(a0, b0, lead, k) : two_periodic_factor(a1, b1, trail, k);
    };
    return evaluate_shape(ic, n, j, factor, throw_condition_denominator);
}

std::vector<Violation> forbidden_check(const InitialConditions& ic, const CoefficientSpec& a,
                                       const CoefficientSpec& b, std::int64_t n) {
    if (n < 0) throw Error("horizon must be nonnegative");
    std::vector<Violation> out;
    for (int m = -4; m <= 0; ++m) {
        if (ic.x(m).is_zero()) {
            out.push_back({ConditionFamily::seed_zero, std::nullopt, "x_{" + std::to_string(m) + "} = 0"});
        }
    }

    // x-indices up to 4n+3 need lead factors F(1..2n+2) and trail factors F(1..2n+1) as denominators.
    GeneralSolution solution(ic, a, b);
    for (const Side side : {Side::lead, Side::trail}) {
        const std::int64_t top = side == Side::lead ? 2 * n + 2 : 2 * n + 1;
        for (std::int64_t m = 1; m <= top; ++m) {
            try {
                if (solution.factor(side, m).is_zero()) {
                    out.push_back({ConditionFamily::general_denominator, tag_for_length(side, m),
                                   to_string(side) + " denominator factor F(" + std::to_string(m) + ") = 0"});
                }
            } catch (const IndexBeyondExplicitData& e) {
                out.push_back({ConditionFamily::coefficients_exhausted, tag_for_length(side, m), e.what()});
                break;
            }
        }
    }

    const auto pa = a.period();
    const auto pb = b.period();
    if (pa && pb) {
        if (*pa == 1 && *pb == 1) {
            auto extra = const_coeff_conditions(ic, a.at(0), b.at(0), n + 1);
            out.insert(out.end(), extra.begin(), extra.end());
        } else if (*pa <= 2 && *pb <= 2) {
            auto extra = two_periodic_conditions(ic, a.at(0), a.at(1), b.at(0), b.at(1), n + 1);
            out.insert(out.end(), extra.begin(), extra.end());
        }
    }
    return out;
}

}  // namespace rdelab
