#include "reesmult/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

namespace reesmult {

namespace {

void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (*I.ring() != *J.ring())
        throw Error(Errc::RingMismatch,
                    I.ring()->key() + " vs " + J.ring()->key());
}

// Sort, dedupe, then keep the divisibility antichain. A proper divisor has
// strictly smaller total degree, so one increasing pass suffices.
std::vector<Monomial> minimalize(const Ring& ring, std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const Monomial& g : gens) {
        bool divisible = false;
        for (const Monomial& h : out) {
            if (monomial_divides(ring, h, g)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) out.push_back(g);
    }
    return out;
}

}  // namespace

std::string MonomialIdeal::key() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << '|';
        os << gens_[i].key();
    }
    os << ']';
    return os.str();
}

MonomialIdeal ideal_from_gens(RingPtr ring, std::vector<Monomial> gens) {
    if (gens.empty()) throw Error(Errc::EmptySpec, "ideal needs at least one generator");
    for (const Monomial& g : gens) {
        if (!valid_monomial(*ring, g))
            throw Error(Errc::InvalidMonomial, g.key() + " in " + ring->key());
        if (g.is_unit())
            throw Error(Errc::UnitGenerator, "the unit monomial generates the unit ideal");
    }
    auto min = minimalize(*ring, std::move(gens));
    return MonomialIdeal(std::move(ring), std::move(min));
}

long long mu(const MonomialIdeal& I) {
    return static_cast<long long>(I.min_gens().size());
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    std::vector<Monomial> gens = I.min_gens();
    gens.insert(gens.end(), J.min_gens().begin(), J.min_gens().end());
    return ideal_from_gens(I.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    std::vector<Monomial> gens;
    gens.reserve(I.min_gens().size() * J.min_gens().size());
    for (const Monomial& a : I.min_gens())
        for (const Monomial& b : J.min_gens())
            gens.push_back(monomial_product(a, b));
    return ideal_from_gens(I.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, long long n) {
    if (n < 1) throw Error(Errc::ZeroPower, "the unit ideal is not representable");
    MonomialIdeal result = I;
    MonomialIdeal base = I;
    long long k = n - 1;
    while (k > 0) {
        if (k & 1) result = product(result, base);
        k >>= 1;
        if (k > 0) base = product(base, base);
    }
    return result;
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
    if (!valid_monomial(*I.ring(), m))
        throw Error(Errc::InvalidMonomial, m.key() + " in " + I.ring()->key());
    for (const Monomial& g : I.min_gens())
        if (monomial_divides(*I.ring(), g, m)) return true;
    return false;
}

bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    return I == J;
}

bool is_subideal(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    for (const Monomial& g : I.min_gens())
        if (!contains(J, g)) return false;
    return true;
}

MonomialIdeal maximal_ideal(const RingPtr& ring) {
    std::vector<Monomial> gens;
    if (ring->kind() == RingKind::PolynomialLocal) {
        int d = ring->dim();
        for (int i = 0; i < d; ++i) {
            std::vector<long long> e(static_cast<size_t>(d), 0);
            e[static_cast<size_t>(i)] = 1;
            gens.emplace_back(std::move(e));
        }
    } else {
        for (long long v : ring->semigroup_gens())
            gens.push_back(Monomial::semigroup_value(v));
    }
    return ideal_from_gens(ring, std::move(gens));
}

bool is_m_primary(const MonomialIdeal& I) {
    const Ring& ring = *I.ring();
    if (ring.kind() == RingKind::NumericalSemigroup) return true;
    int d = ring.dim();
    for (int i = 0; i < d; ++i) {
        bool pure = false;
        for (const Monomial& g : I.min_gens()) {
            const auto& e = g.exponents();
            bool ok = e[static_cast<size_t>(i)] > 0;
            for (int j = 0; ok && j < d; ++j)
                if (j != i && e[static_cast<size_t>(j)] != 0) ok = false;
            if (ok) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

namespace {

// Standard monomials of an m-primary ideal in a polynomial ring live in the
// box prod [0, B_i) with B_i the max exponent of variable i over the
// generators. Counting walks the box one column (last coordinate) at a time:
// within a column the ideal membership threshold is the least last-exponent
// among generators whose prefix divides the column's prefix.
template <typename Visit>
void scan_poly_staircase(const MonomialIdeal& I, Visit&& visit) {
    const int d = I.ring()->dim();
    const auto& gens = I.min_gens();
    std::vector<long long> bound(static_cast<size_t>(d), 0);
    for (const Monomial& g : gens)
        for (int i = 0; i < d; ++i)
            bound[static_cast<size_t>(i)] =
                std::max(bound[static_cast<size_t>(i)], g.exponents()[static_cast<size_t>(i)]);

    std::vector<long long> prefix(static_cast<size_t>(d - 1), 0);
    for (;;) {
        long long threshold = bound[static_cast<size_t>(d - 1)];
        for (const Monomial& g : gens) {
            const auto& e = g.exponents();
            bool prefix_divides = true;
            for (int i = 0; i + 1 < d; ++i) {
                if (e[static_cast<size_t>(i)] > prefix[static_cast<size_t>(i)]) {
                    prefix_divides = false;
                    break;
                }
            }
            if (prefix_divides)
                threshold = std::min(threshold, e[static_cast<size_t>(d - 1)]);
        }
        visit(prefix, threshold);

        int i = d - 2;
        while (i >= 0) {
            if (++prefix[static_cast<size_t>(i)] < bound[static_cast<size_t>(i)]) break;
            prefix[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
}

long long semigroup_scan_bound(const MonomialIdeal& I) {
    const Ring& ring = *I.ring();
    long long maxgen = 0;
    for (const Monomial& g : I.min_gens()) maxgen = std::max(maxgen, g.value());
    return std::max(ring.conductor(), maxgen) + ring.conductor();
}

}  // namespace

std::optional<Int> colength(const MonomialIdeal& I) {
    if (!is_m_primary(I)) return std::nullopt;
    const Ring& ring = *I.ring();
    Int count = 0;
    if (ring.kind() == RingKind::PolynomialLocal) {
        scan_poly_staircase(I, [&](const std::vector<long long>&, long long threshold) {
            count += threshold;
        });
    } else {
        long long bound = semigroup_scan_bound(I);
        for (long long s = 0; s < bound; ++s) {
            if (!ring.semigroup_member(s)) continue;
            if (!contains(I, Monomial::semigroup_value(s))) ++count;
        }
    }
    return count;
}

Int length_quotient(const MonomialIdeal& inner, const MonomialIdeal& outer) {
    if (!is_subideal(inner, outer))
        throw Error(Errc::NotContained, inner.key() + " is not contained in " + outer.key());
    auto ci = colength(inner);
    auto co = colength(outer);
    if (!ci || !co)
        throw Error(Errc::NotMPrimary, "length of quotient requires m-primary ideals");
    return *ci - *co;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& I) {
    if (!is_m_primary(I))
        throw Error(Errc::NotMPrimary, I.key() + " has infinitely many standard monomials");
    const Ring& ring = *I.ring();
    std::vector<Monomial> out;
    if (ring.kind() == RingKind::PolynomialLocal) {
        const int d = ring.dim();
        scan_poly_staircase(I, [&](const std::vector<long long>& prefix, long long threshold) {
            std::vector<long long> e(prefix);
            e.push_back(0);
            for (long long v = 0; v < threshold; ++v) {
                e[static_cast<size_t>(d - 1)] = v;
                out.emplace_back(e);
            }
        });
    } else {
        long long bound = semigroup_scan_bound(I);
        for (long long s = 0; s < bound; ++s) {
            if (!ring.semigroup_member(s)) continue;
            Monomial m = Monomial::semigroup_value(s);
            if (!contains(I, m)) out.push_back(std::move(m));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace reesmult
