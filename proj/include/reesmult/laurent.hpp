#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reesmult/rees.hpp"

namespace reesmult {

/// One term c * x^a * t^b of an element of the extended Rees algebra;
/// the ring monomial must lie in the ambient component B_b.
struct LaurentTerm {
    Rat coeff;
    Monomial mono;
    std::vector<long long> mdeg;
};

/// A finite sum of terms. Terms may sit in different multidegrees (the
/// explicit reduction families mix t_j and t_j^{-1}), but every term must
/// individually lie in the maximal homogeneous ideal N.
struct LaurentElement {
    std::vector<LaurentTerm> terms;
};

struct ReductionEquationResult {
    bool holds = false;
    std::vector<long long> fail_degree;      // set when !holds
    std::optional<Monomial> fail_monomial;   // witness outside the span
    std::string detail;
};

/// Decides whether the B-ideal J generated by `jgens` satisfies
/// J N = N^2 over the local ring at N, reported degree by degree.
///
/// The comparison is run modulo N^3: J N + N^3 contains N^2 iff J N = N^2
/// after localization (the quotient is a module over the residue field, so
/// Nakayama applies, and it is nonzero in only finitely many multidegrees).
/// That makes each degree a finite exact-rational linear-algebra problem:
/// the span of the generator multiples of a monomial basis of N/N^2 must
/// cover a monomial basis of N^2/N^3. Degrees outside `box_radius` are not
/// reported even when nonvacuous, so a passing verdict is box-relative.
ReductionEquationResult check_reduction_equation_bounded(
    const ReesInstance& inst, const std::vector<LaurentElement>& jgens,
    long long box_radius, long long box_guard = 200000);

/// The explicit generating family, over a regular base ring of dimension d
/// with the instance (m, m^r):
///   t_1^{-1},  x_1^r t_2 + t_2^{-1},  x_d t_1,
///   x_i t_1 + x_{i+1}^r t_2  for  1 <= i <= d-1.
std::vector<LaurentElement> mm_power_reduction_generators(const RingPtr& ring, long long r);

}  // namespace reesmult
