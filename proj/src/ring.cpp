#include "reesmult/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace reesmult {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonCoprimeSemigroup: return "NonCoprimeSemigroup";
        case Errc::EmptySpec: return "EmptySpec";
        case Errc::UnitGenerator: return "UnitGenerator";
        case Errc::InvalidMonomial: return "InvalidMonomial";
        case Errc::RingMismatch: return "RingMismatch";
        case Errc::ZeroPower: return "ZeroPower";
        case Errc::NotContained: return "NotContained";
        case Errc::NotMPrimary: return "NotMPrimary";
        case Errc::QOutOfRange: return "QOutOfRange";
        case Errc::StabilizationFailure: return "StabilizationFailure";
        case Errc::NonIntegralResult: return "NonIntegralResult";
        case Errc::GuardExceeded: return "GuardExceeded";
        case Errc::OracleMismatch: return "OracleMismatch";
        case Errc::ElementNotInIdeal: return "ElementNotInIdeal";
        case Errc::NotParameterSystem: return "NotParameterSystem";
        case Errc::InhomogeneousGenerator: return "InhomogeneousGenerator";
        case Errc::BoxTooLarge: return "BoxTooLarge";
        case Errc::IoError: return "IoError";
        case Errc::FormatError: return "FormatError";
        case Errc::CacheInconsistency: return "CacheInconsistency";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::UndeclaredRing: return "UndeclaredRing";
        case Errc::UndeclaredIdeal: return "UndeclaredIdeal";
        case Errc::DuplicateName: return "DuplicateName";
        case Errc::ArityMismatch: return "ArityMismatch";
        case Errc::UsageError: return "UsageError";
        case Errc::Overflow: return "Overflow";
    }
    return "UnknownError";
}

Ring Ring::polynomial_local(int dim) {
    if (dim < 1) throw Error(Errc::EmptySpec, "polynomial_local needs dimension >= 1");
    Ring r;
    r.kind_ = RingKind::PolynomialLocal;
    r.dim_ = dim;
    return r;
}

namespace {

// Representability table for 0..bound-1 under nonnegative combinations.
std::vector<bool> representable_up_to(const std::vector<long long>& gens, long long bound) {
    std::vector<bool> rep(static_cast<size_t>(bound), false);
    rep[0] = true;
    for (long long v = 1; v < bound; ++v) {
        for (long long g : gens) {
            if (v >= g && rep[static_cast<size_t>(v - g)]) {
                rep[static_cast<size_t>(v)] = true;
                break;
            }
        }
    }
    return rep;
}

}  // namespace

Ring Ring::numerical_semigroup(std::vector<long long> gens) {
    if (gens.empty()) throw Error(Errc::EmptySpec, "numerical_semigroup needs at least one generator");
    for (long long g : gens)
        if (g <= 0) throw Error(Errc::EmptySpec, "semigroup generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    long long g = 0;
    for (long long v : gens) g = std::gcd(g, v);
    if (g != 1)
        throw Error(Errc::NonCoprimeSemigroup,
                    "gcd of semigroup generators is " + std::to_string(g));

    // Find the conductor: grow the table until the last gens[0] consecutive
    // integers are all representable (then everything beyond is too).
    long long a0 = gens[0];
    long long bound = gens.back() * a0 + a0 + 1;
    std::vector<bool> rep;
    long long conductor = -1;
    for (;;) {
        rep = representable_up_to(gens, bound);
        long long run = 0;
        for (long long v = 0; v < bound; ++v) {
            run = rep[static_cast<size_t>(v)] ? run + 1 : 0;
            if (run == a0) {
                conductor = v - a0 + 1;
                break;
            }
        }
        if (conductor >= 0) break;
        bound *= 2;  // gcd 1 guarantees termination
    }

    Ring r;
    r.kind_ = RingKind::NumericalSemigroup;
    r.dim_ = 1;
    r.conductor_ = conductor;
    for (long long v = 1; v < conductor; ++v)
        if (!rep[static_cast<size_t>(v)]) r.gaps_.push_back(v);
    r.member_below_conductor_.assign(static_cast<size_t>(conductor), false);
    for (long long v = 0; v < conductor; ++v)
        r.member_below_conductor_[static_cast<size_t>(v)] = rep[static_cast<size_t>(v)];

    // Keep only the unique minimal generating set.
    for (long long v : gens) {
        std::vector<long long> others;
        for (long long w : gens)
            if (w != v) others.push_back(w);
        bool redundant = false;
        if (!others.empty()) {
            std::vector<bool> orep = representable_up_to(others, v + 1);
            redundant = orep[static_cast<size_t>(v)];
        }
        if (!redundant) r.gens_.push_back(v);
    }
    return r;
}

bool Ring::semigroup_member(long long v) const {
    if (v < 0) return false;
    if (v >= conductor_) return true;
    return member_below_conductor_[static_cast<size_t>(v)];
}

std::string Ring::key() const {
    std::ostringstream os;
    if (kind_ == RingKind::PolynomialLocal) {
        os << "pl:" << dim_;
    } else {
        os << "ns:";
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (i) os << ',';
            os << gens_[i];
        }
    }
    return os.str();
}

RingPtr make_ring_polynomial_local(int dim) {
    return std::make_shared<const Ring>(Ring::polynomial_local(dim));
}

RingPtr make_ring_numerical_semigroup(std::vector<long long> gens) {
    return std::make_shared<const Ring>(Ring::numerical_semigroup(std::move(gens)));
}

long long Monomial::total_degree() const {
    long long s = 0;
    for (long long v : e_) s += v;
    return s;
}

bool Monomial::is_unit() const {
    for (long long v : e_)
        if (v != 0) return false;
    return true;
}

bool Monomial::operator<(const Monomial& o) const {
    long long da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    return e_ < o.e_;
}

std::string Monomial::key() const {
    std::ostringstream os;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (i) os << ',';
        os << e_[i];
    }
    return os.str();
}

bool valid_monomial(const Ring& ring, const Monomial& m) {
    const auto& e = m.exponents();
    if (ring.kind() == RingKind::PolynomialLocal) {
        if (static_cast<int>(e.size()) != ring.dim()) return false;
        for (long long v : e)
            if (v < 0) return false;
        return true;
    }
    if (e.size() != 1 || e[0] < 0) return false;
    return ring.semigroup_member(e[0]);
}

bool monomial_divides(const Ring& ring, const Monomial& a, const Monomial& b) {
    if (ring.kind() == RingKind::PolynomialLocal) {
        const auto& ea = a.exponents();
        const auto& eb = b.exponents();
        for (size_t i = 0; i < ea.size(); ++i)
            if (ea[i] > eb[i]) return false;
        return true;
    }
    return ring.semigroup_member(b.value() - a.value());
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    std::vector<long long> e(ea.size());
    for (size_t i = 0; i < ea.size(); ++i) {
        if (__builtin_add_overflow(ea[i], eb[i], &e[i]))
            throw Error(Errc::Overflow, "monomial exponent overflow");
    }
    return Monomial(std::move(e));
}

}  // namespace reesmult
