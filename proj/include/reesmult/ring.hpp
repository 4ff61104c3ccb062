#pragma once

#include <memory>
#include <string>
#include <vector>

#include "reesmult/errors.hpp"

namespace reesmult {

enum class RingKind { PolynomialLocal, NumericalSemigroup };

/// One of the two supported local ring families:
///  - PolynomialLocal(d): a polynomial ring in d variables localized at the
///    irrelevant maximal ideal (regular local, dimension d);
///  - NumericalSemigroup(a1,...,ak): the semigroup ring of <a1,...,ak> with
///    gcd 1 (a one-dimensional Cohen-Macaulay domain).
/// Immutable after construction; all derived data (conductor, gap set,
/// membership table) is precomputed.
class Ring {
public:
    static Ring polynomial_local(int dim);
    static Ring numerical_semigroup(std::vector<long long> gens);

    RingKind kind() const { return kind_; }
    int dim() const { return dim_; }

    // NumericalSemigroup only; minimal generating set, sorted.
    const std::vector<long long>& semigroup_gens() const { return gens_; }
    long long conductor() const { return conductor_; }
    const std::vector<long long>& gaps() const { return gaps_; }

    /// Membership of an integer in the numerical semigroup.
    bool semigroup_member(long long v) const;

    bool operator==(const Ring& o) const {
        return kind_ == o.kind_ && dim_ == o.dim_ && gens_ == o.gens_;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    /// Canonical descriptor, e.g. "pl:2" or "ns:4,5,7".
    std::string key() const;

private:
    Ring() = default;

    RingKind kind_ = RingKind::PolynomialLocal;
    int dim_ = 0;
    std::vector<long long> gens_;
    long long conductor_ = 0;
    std::vector<long long> gaps_;
    std::vector<bool> member_below_conductor_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring_polynomial_local(int dim);
RingPtr make_ring_numerical_semigroup(std::vector<long long> gens);

/// A monomial of a supported ring: an exponent vector for PolynomialLocal,
/// or a single semigroup value (a vector of length 1) for NumericalSemigroup.
class Monomial {
public:
    explicit Monomial(std::vector<long long> exps) : e_(std::move(exps)) {}
    static Monomial semigroup_value(long long v) { return Monomial({v}); }

    const std::vector<long long>& exponents() const { return e_; }
    long long value() const { return e_[0]; }
    long long total_degree() const;
    bool is_unit() const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    /// Graded-lexicographic order (by total degree, then lex); the canonical
    /// order of generator lists.
    bool operator<(const Monomial& o) const;

    std::string key() const;  // "2,0" / "4"

private:
    std::vector<long long> e_;
};

/// Validity of a monomial in a ring: correct arity, nonnegative entries,
/// and (semigroup case) membership of the value in the semigroup.
bool valid_monomial(const Ring& ring, const Monomial& m);

/// Divisibility order: componentwise <= for PolynomialLocal; for a
/// numerical semigroup, a | b iff b - a is a semigroup element.
bool monomial_divides(const Ring& ring, const Monomial& a, const Monomial& b);

/// Product of monomials (exponent/value sum), with overflow checking.
Monomial monomial_product(const Monomial& a, const Monomial& b);

}  // namespace reesmult
