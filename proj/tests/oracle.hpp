#pragma once

// Test-only reference arithmetic, independent of rdelab::Rational (GMP): plain
// forward substitution carried out in boost::multiprecision::cpp_rational.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rdelab/model.hpp"

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

inline Q to_q(const rdelab::Rational& r) {
    return Q(boost::multiprecision::cpp_int(r.numerator_string()),
             boost::multiprecision::cpp_int(r.denominator_string()));
}

inline std::string to_text(const Q& q) {
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

struct Run {
    std::vector<Q> x;                   // x_{-4}, x_{-3}, ...
    std::optional<long> singular_index;  // first x-index that could not be formed
    std::string reason;
};

/// Direct substitution into x_{n+1} = x_{n-3} x_{n-4} / (x_n (a_n + b_n x_{n-1} x_{n-2} x_{n-3} x_{n-4})).
template <typename CoeffA, typename CoeffB>
Run iterate(const std::vector<Q>& seeds, CoeffA a, CoeffB b, long steps) {
    Run run{seeds, std::nullopt, {}};
    for (long n = 0; n < steps; ++n) {
        const std::size_t i = run.x.size() - 1;  // position of x_n
        const Q& xn = run.x[i];
        if (xn == 0) {
            run.singular_index = n + 1;
            run.reason = "zero_xn";
            return run;
        }
        const Q bracket = a(n) + b(n) * run.x[i - 1] * run.x[i - 2] * run.x[i - 3] * run.x[i - 4];
        if (bracket == 0) {
            run.singular_index = n + 1;
            run.reason = "zero_bracket";
            return run;
        }
        run.x.push_back(run.x[i - 3] * run.x[i - 4] / (xn * bracket));
    }
    return run;
}

inline Run iterate(const rdelab::InitialConditions& ic, const rdelab::CoefficientSpec& a,
                   const rdelab::CoefficientSpec& b, long steps) {
    std::vector<Q> seeds;
    for (const auto& s : ic.seeds()) seeds.push_back(to_q(s));
    return iterate(
        seeds, [&](long n) { return to_q(a.at(n)); }, [&](long n) { return to_q(b.at(n)); }, steps);
}

}  // namespace oracle
