#pragma once

// Test-only oracle: recovers a mixed multiplicity by exact multivariate
// Lagrange interpolation of the length function over a full tensor grid,
// entirely independent of the finite-difference path in HilbertEngine.

#include <functional>
#include <vector>

#include "reesmult/monomial_ideal.hpp"
#include "reesmult/numbers.hpp"

namespace reesmult::testing {

// Coefficients (constant term first) of the 1-D Lagrange basis polynomial
// through nodes base..base+m that is 1 at node base+i and 0 elsewhere.
inline std::vector<Rat> lagrange_basis_coeffs(long long base, long long m, long long i) {
    std::vector<Rat> poly = {Rat(1)};
    Rat denom = 1;
    for (long long k = 0; k <= m; ++k) {
        if (k == i) continue;
        long long node = base + k;
        // poly *= (x - node)
        std::vector<Rat> next(poly.size() + 1, Rat(0));
        for (size_t t = 0; t < poly.size(); ++t) {
            next[t] += poly[t] * Rat(-node);
            next[t + 1] += poly[t];
        }
        poly = std::move(next);
        denom *= Rat(base + i - node);
    }
    for (auto& c : poly) c /= denom;
    poly.resize(static_cast<size_t>(m) + 1, Rat(0));
    return poly;
}

// Coefficient of prod_j r_j^{q_j} in the tensor-product interpolant of f on
// the grid [base, base+m]^g, times prod q_j!. When f agrees with its length
// polynomial on the grid this equals the mixed multiplicity exactly.
inline Int interpolated_mixed_multiplicity(
    const std::function<Int(const std::vector<long long>&)>& f, int g, long long base,
    long long m, const std::vector<long long>& q) {
    std::vector<std::vector<std::vector<Rat>>> basis(static_cast<size_t>(g));
    for (int j = 0; j < g; ++j)
        for (long long i = 0; i <= m; ++i)
            basis[static_cast<size_t>(j)].push_back(lagrange_basis_coeffs(base, m, i));

    Rat coeff = 0;
    std::vector<long long> idx(static_cast<size_t>(g), 0);
    for (;;) {
        Rat w = 1;
        std::vector<long long> point(static_cast<size_t>(g));
        for (int j = 0; j < g; ++j) {
            w *= basis[static_cast<size_t>(j)][static_cast<size_t>(idx[static_cast<size_t>(j)])]
                      [static_cast<size_t>(q[static_cast<size_t>(j)])];
            point[static_cast<size_t>(j)] = base + idx[static_cast<size_t>(j)];
        }
        if (w != 0) coeff += w * Rat(f(point));

        int j = 0;
        while (j < g) {
            if (++idx[static_cast<size_t>(j)] <= m) break;
            idx[static_cast<size_t>(j)] = 0;
            ++j;
        }
        if (j == g) break;
    }
    for (long long v : q) coeff *= Rat(factorial(v));
    if (boost::multiprecision::denominator(coeff) != 1)
        throw std::runtime_error("interpolation oracle produced a non-integer");
    return boost::multiprecision::numerator(coeff);
}

}  // namespace reesmult::testing
