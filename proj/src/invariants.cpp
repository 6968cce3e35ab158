#include "rdelab/invariants.hpp"

#include "rdelab/errors.hpp"

namespace rdelab {

InvariantSeq v_sequence(const Trajectory& traj) {
    InvariantSeq seq;
    const std::int64_t count = static_cast<std::int64_t>(traj.values().size()) - 3;
    for (std::int64_t n = 0; n < count; ++n) {
        Rational product = traj.u(n) * traj.u(n + 1);
        product *= traj.u(n + 2);
        product *= traj.u(n + 3);
        if (product.is_zero()) throw ZeroProduct(n);
        seq.entries.push_back(product.inverse());
    }
    seq.origin = InvariantSeq::Origin::trajectory;
    return seq;
}

Rational v_at(const Trajectory& traj, std::int64_t n) {
    if (n < 0) throw ValueUnavailable(n);
    const Rational product = u_view(traj, n) * u_view(traj, n + 1) * u_view(traj, n + 2) * u_view(traj, n + 3);
    if (product.is_zero()) throw ZeroProduct(n);
    return product.inverse();
}

Rational v_recurrence_residual(const InvariantSeq& v, const CoefficientSpec& a, const CoefficientSpec& b,
                               std::int64_t n) {
    return v.at(n + 2) - a.at(n) * v.at(n) - b.at(n);
}

Rational v_closed_form(const Rational& v_j, const CoefficientSpec& a, const CoefficientSpec& b, std::int64_t n,
                       int j) {
    if (j != 0 && j != 1) throw Error("parity j must be 0 or 1");
    if (n < 0) throw Error("n must be nonnegative");

    // Walk l downwards so the tail product prod_{k=l+1}^{n-1} a_{2k+j} is extended one factor at a time.
    Rational tail(1);
    Rational sum(0);
    for (std::int64_t l = n - 1; l >= 0; --l) {
        sum += b.at(2 * l + j) * tail;
        tail *= a.at(2 * l + j);
    }
    return v_j * tail + sum;
}

Rational v_closed_form(const Rational& v0, const Rational& v1, const CoefficientSpec& a, const CoefficientSpec& b,
                       std::int64_t n, int j) {
    return v_closed_form(j == 0 ? v0 : v1, a, b, n, j);
}

std::int64_t weight(std::int64_t m) {
    static constexpr std::int64_t table[4] = {1, -1, 0, 0};
    return table[((m % 4) + 4) % 4];
}

Rational weighted_product(const InvariantSeq& v, std::int64_t n) {
    Rational product(1);
    for (std::int64_t k = 0; k < n; ++k) {
        const std::int64_t w = weight(k - n);
        if (w == 1) {
            product *= v.at(k);
        } else if (w == -1) {
            product /= v.at(k);
        }
    }
    return product;
}

Rational reconstruct_u(const std::array<Rational, 4>& leading, const InvariantSeq& v, std::int64_t n) {
    if (n < 0) throw Error("n must be nonnegative");
    const std::int64_t r = n % 4;
    Rational u = leading[static_cast<std::size_t>(r)];
    for (std::int64_t s = 0; s < n / 4; ++s) {
        u *= v.at(4 * s + r);
        u /= v.at(4 * s + r + 1);
    }
    return u;
}

}  // namespace rdelab
