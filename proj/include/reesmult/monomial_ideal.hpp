#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reesmult/numbers.hpp"
#include "reesmult/ring.hpp"

namespace reesmult {

/// A proper monomial ideal in canonical form: min_gens() is the unique
/// minimal generating set, sorted, a nonempty antichain under divisibility.
/// Two ideals are equal iff their canonical generator lists are identical.
/// Immutable value type; safe to share across threads.
class MonomialIdeal {
public:
    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& min_gens() const { return gens_; }

    bool operator==(const MonomialIdeal& o) const {
        return *ring_ == *o.ring_ && gens_ == o.gens_;
    }

    /// Canonical string form, e.g. "[2,0|1,1]" or "[4|10]".
    std::string key() const;

private:
    friend MonomialIdeal ideal_from_gens(RingPtr, std::vector<Monomial>);
    MonomialIdeal(RingPtr ring, std::vector<Monomial> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)) {}

    RingPtr ring_;
    std::vector<Monomial> gens_;
};

/// Canonicalize a generating set: validate, dedupe, drop generators
/// divisible by another. The generated ideal is unchanged.
MonomialIdeal ideal_from_gens(RingPtr ring, std::vector<Monomial> gens);

/// Minimal number of generators; equals dim_k(I / mI) for these rings.
long long mu(const MonomialIdeal& I);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, long long n);

/// Number of monomials of the ring outside I (the standard monomials);
/// finite iff I is m-primary, otherwise nullopt (Infinite).
std::optional<Int> colength(const MonomialIdeal& I);

/// l(outer/inner) for inner <= outer, both m-primary.
Int length_quotient(const MonomialIdeal& inner, const MonomialIdeal& outer);

bool contains(const MonomialIdeal& I, const Monomial& m);
bool equals(const MonomialIdeal& I, const MonomialIdeal& J);
bool is_subideal(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal maximal_ideal(const RingPtr& ring);

/// PolynomialLocal: a pure power of every variable occurs among the
/// generators. NumericalSemigroup: every proper nonzero ideal qualifies.
bool is_m_primary(const MonomialIdeal& I);

/// All standard monomials of an m-primary ideal (NotMPrimary otherwise).
/// Sorted in canonical monomial order.
std::vector<Monomial> standard_monomials(const MonomialIdeal& I);

}  // namespace reesmult
