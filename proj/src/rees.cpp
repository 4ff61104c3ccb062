#include "reesmult/rees.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace reesmult {

ComponentIdeal comp_sum(const ComponentIdeal& a, const ComponentIdeal& b) {
    if (a.is_unit()) return a;
    if (b.is_unit()) return b;
    return ComponentIdeal::wrap(sum(a.ideal(), b.ideal()));
}

ComponentIdeal comp_product(const ComponentIdeal& a, const ComponentIdeal& b) {
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    return ComponentIdeal::wrap(product(a.ideal(), b.ideal()));
}

bool comp_equals(const ComponentIdeal& a, const ComponentIdeal& b) {
    if (a.is_unit() || b.is_unit()) return a.is_unit() == b.is_unit();
    return a.ideal() == b.ideal();
}

bool comp_contains(const ComponentIdeal& a, const Monomial& m) {
    return a.is_unit() || contains(a.ideal(), m);
}

Int comp_colength(const ComponentIdeal& a) {
    if (a.is_unit()) return 0;
    auto c = colength(a.ideal());
    if (!c) throw Error(Errc::NotMPrimary, "infinite graded component " + a.ideal().key());
    return *c;
}

ReesInstance ReesInstance::make(RingPtr ring, std::vector<MonomialIdeal> ideals) {
    if (ideals.empty())
        throw Error(Errc::EmptySpec, "a Rees instance needs at least one ideal");
    for (const auto& I : ideals) {
        if (*I.ring() != *ring)
            throw Error(Errc::RingMismatch, I.key() + " lives in " + I.ring()->key());
        if (!is_m_primary(I))
            throw Error(Errc::NotMPrimary, I.key());
    }
    MonomialIdeal m = maximal_ideal(ring);
    MonomialIdeal L = power(m, 2);
    for (const auto& I : ideals) L = sum(L, I);
    return ReesInstance{std::move(ring), std::move(ideals), std::move(m), std::move(L)};
}

std::string ReesInstance::key() const {
    std::ostringstream os;
    os << ring->key();
    for (const auto& I : ideals) os << ';' << I.key();
    return os.str();
}

int rees_dim(const ReesInstance& inst) { return inst.d() + inst.g(); }

Int mu_N(const ReesInstance& inst) {
    MonomialIdeal m2 = power(inst.max_ideal, 2);
    Int total = inst.g();
    total += mu(inst.max_ideal);
    for (const auto& I : inst.ideals) total += mu(I);
    total -= length_quotient(m2, inst.L);
    return total;
}

namespace {

// Compositions of `total` into `parts` nonnegative summands.
void for_each_composition(long long total, int parts, std::vector<long long>& cur,
                          const std::function<void(const std::vector<long long>&)>& fn) {
    if (parts == 0) {
        if (total == 0) fn(cur);
        return;
    }
    for (long long v = 0; v <= total; ++v) {
        cur.push_back(v);
        for_each_composition(total - v, parts - 1, cur, fn);
        cur.pop_back();
    }
}

void for_each_subset(int g, int n, int start, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == n) {
        fn(cur);
        return;
    }
    for (int i = start; i < g; ++i) {
        cur.push_back(i);
        for_each_subset(g, n, i + 1, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

Int e_N_formula(const ReesInstance& inst, HilbertEngine& engine) {
    const int d = inst.d();
    const int g = inst.g();

    Int bracket = 0;
    for (int n = 0; n <= g; ++n) {
        std::vector<int> subset;
        for_each_subset(g, n, 0, subset, [&](const std::vector<int>& idx) {
            for (long long q = 0; q <= d - 1; ++q) {
                Int factor = Int(1) << (d - 1 - q);
                std::vector<long long> comp;
                for_each_composition(d - 1 - q, n, comp, [&](const std::vector<long long>& parts) {
                    MixedQuery query;
                    query.ideals.push_back(inst.L);
                    query.weights.push_back(q + 1);
                    for (int k = 0; k < n; ++k) {
                        query.ideals.push_back(inst.ideals[static_cast<size_t>(idx[static_cast<size_t>(k)])]);
                        query.weights.push_back(parts[static_cast<size_t>(k)]);
                    }
                    bracket += factor * engine.mixed_multiplicity(query);
                });
            }
        });
    }

    Int denom = Int(1) << d;
    if (bracket % denom != 0)
        throw Error(Errc::NonIntegralResult,
                    "bracket " + bracket.str() + " not divisible by 2^" + std::to_string(d));
    return bracket / denom;
}

const ComponentIdeal& GradedPieces::ambient(const std::vector<long long>& b) {
    auto it = ambient_.find(b);
    if (it != ambient_.end()) return it->second;

    ComponentIdeal acc = ComponentIdeal::unit(inst_.ring);
    for (size_t j = 0; j < b.size(); ++j) {
        if (b[j] > 0)
            acc = comp_product(acc, ComponentIdeal::wrap(power(inst_.ideals[j], b[j])));
    }
    return ambient_.emplace(b, std::move(acc)).first->second;
}

const ComponentIdeal& GradedPieces::piece(long long n, const std::vector<long long>& b) {
    auto key = std::make_pair(n, b);
    auto it = pieces_.find(key);
    if (it != pieces_.end()) return it->second;

    const int g = inst_.g();
    // Components equal to the ambient one: N^0 = B; a coordinate <= -n is
    // absorbed by t_j^{-n}; a positive part of total >= n is reached by
    // products of the I_j t_j generators alone.
    bool is_full = (n == 0);
    long long pos = 0;
    for (long long v : b) {
        if (v <= -n) is_full = true;
        if (v > 0) pos += v;
    }
    if (pos >= n) is_full = true;
    if (is_full) return pieces_.emplace(std::move(key), ambient(b)).first->second;

    std::optional<ComponentIdeal> acc;
    auto add = [&](const ComponentIdeal& c) {
        acc = acc ? comp_sum(*acc, c) : c;
    };
    std::vector<long long> shifted = b;
    for (int j = 0; j < g; ++j) {
        // t_j^{-1} * N^{n-1}_{b+e_j}: the same R-submodule, one degree up.
        shifted[static_cast<size_t>(j)] = b[static_cast<size_t>(j)] + 1;
        add(piece(n - 1, shifted));
        // I_j t_j * N^{n-1}_{b-e_j}.
        shifted[static_cast<size_t>(j)] = b[static_cast<size_t>(j)] - 1;
        add(comp_product(ComponentIdeal::wrap(inst_.ideals[static_cast<size_t>(j)]),
                         piece(n - 1, shifted)));
        shifted[static_cast<size_t>(j)] = b[static_cast<size_t>(j)];
    }
    add(comp_product(ComponentIdeal::wrap(inst_.max_ideal), piece(n - 1, b)));

    if (comp_equals(*acc, ambient(b))) acc = ambient(b);
    return pieces_.emplace(std::move(key), std::move(*acc)).first->second;
}

bool GradedPieces::full(long long n, const std::vector<long long>& b) {
    return comp_equals(piece(n, b), ambient(b));
}

namespace {

// Sum of l(B_b / N^n_b) over all multidegrees (finitely many are nonzero).
Int length_of_power_quotient(GradedPieces& pieces, const ReesInstance& inst, long long n) {
    if (n == 0) return 0;
    const int g = inst.g();
    Int total = 0;
    std::vector<long long> b(static_cast<size_t>(g), -n + 1);
    for (;;) {
        long long pos = 0;
        for (long long v : b)
            if (v > 0) pos += v;
        if (pos < n) {
            const ComponentIdeal& piece = pieces.piece(n, b);
            const ComponentIdeal& amb = pieces.ambient(b);
            if (!comp_equals(piece, amb))
                total += comp_colength(piece) - comp_colength(amb);
        }
        int j = 0;
        while (j < g) {
            if (++b[static_cast<size_t>(j)] <= n - 1) break;
            b[static_cast<size_t>(j)] = -n + 1;
            ++j;
        }
        if (j == g) break;
    }
    return total;
}

}  // namespace

Int e_N_direct(const ReesInstance& inst, long long n_cap, int dim_guard) {
    const int dim = rees_dim(inst);
    if (dim > dim_guard)
        throw Error(Errc::GuardExceeded,
                    "dim B = " + std::to_string(dim) + " exceeds the oracle guard " +
                        std::to_string(dim_guard));
    const int window = 2;
    if (n_cap < dim + window)
        throw Error(Errc::StabilizationFailure, "n_cap too small for dim B = " + std::to_string(dim));

    GradedPieces pieces(inst);
    std::vector<Int> h;
    h.reserve(static_cast<size_t>(n_cap) + 1);
    for (long long n = 0; n <= n_cap; ++n)
        h.push_back(length_of_power_quotient(pieces, inst, n));

    for (int k = 0; k < dim; ++k)
        for (size_t i = h.size() - 1; i > 0; --i) h[i] -= h[i - 1];
    // h[dim..] now holds the dim-th forward differences (h[i] = D^dim H(i-dim)).
    const Int& last = h.back();
    for (int w = 1; w < window; ++w)
        if (h[h.size() - 1 - static_cast<size_t>(w)] != last)
            throw Error(Errc::StabilizationFailure,
                        "Hilbert function of N not yet polynomial at n_cap = " +
                            std::to_string(n_cap));
    if (last <= 0)
        throw Error(Errc::StabilizationFailure, "nonpositive leading difference");
    return last;
}

Int mu_N_direct(const ReesInstance& inst) {
    GradedPieces pieces(inst);
    const int g = inst.g();
    Int total = 0;
    std::vector<long long> b(static_cast<size_t>(g), -2);
    for (;;) {
        total += comp_colength(pieces.piece(2, b)) - comp_colength(pieces.piece(1, b));
        int j = 0;
        while (j < g) {
            if (++b[static_cast<size_t>(j)] <= 2) break;
            b[static_cast<size_t>(j)] = -2;
            ++j;
        }
        if (j == g) break;
    }
    return total;
}

std::optional<long long> reduction_number_monomial(const MonomialIdeal& I,
                                                   const MonomialIdeal& J, long long n_max) {
    if (!is_subideal(J, I))
        throw Error(Errc::NotContained, J.key() + " is not contained in " + I.key());
    if (!is_m_primary(J)) return std::nullopt;  // J I^n = I^{n+1} forces rad J = m
    if (equals(J, I)) return 0;
    MonomialIdeal p = I;  // I^n
    for (long long n = 1; n <= n_max; ++n) {
        MonomialIdeal next = product(p, I);  // I^{n+1}
        if (equals(product(J, p), next)) return n;
        p = std::move(next);
    }
    return std::nullopt;
}

long long reduction_number_dim1(const MonomialIdeal& I) {
    if (I.ring()->dim() != 1)
        throw Error(Errc::RingMismatch, "exact reduction numbers need dimension 1");
    MonomialIdeal J = ideal_from_gens(I.ring(), {I.min_gens().front()});
    auto r = reduction_number_monomial(I, J, 10000);
    if (!r) throw Error(Errc::StabilizationFailure, "principal reduction did not close");
    return *r;
}

bool joint_reduction_check(const std::vector<Monomial>& elements, const ReesInstance& inst,
                           long long n_max) {
    const int g = inst.g();
    if (static_cast<int>(elements.size()) != g)
        throw Error(Errc::ElementNotInIdeal, "need one element per ideal");
    for (int j = 0; j < g; ++j)
        if (!contains(inst.ideals[static_cast<size_t>(j)], elements[static_cast<size_t>(j)]))
            throw Error(Errc::ElementNotInIdeal,
                        elements[static_cast<size_t>(j)].key() + " not in ideal " +
                            std::to_string(j + 1));

    // K = sum_j x_j * prod_{k != j} I_k and P = prod_j I_j.
    std::vector<Monomial> k_gens;
    for (int j = 0; j < g; ++j) {
        std::optional<MonomialIdeal> partial;
        for (int k = 0; k < g; ++k) {
            if (k == j) continue;
            partial = partial ? product(*partial, inst.ideals[static_cast<size_t>(k)])
                              : inst.ideals[static_cast<size_t>(k)];
        }
        if (partial) {
            for (const Monomial& m : partial->min_gens())
                k_gens.push_back(monomial_product(elements[static_cast<size_t>(j)], m));
        } else {
            k_gens.push_back(elements[static_cast<size_t>(j)]);
        }
    }
    MonomialIdeal K = ideal_from_gens(inst.ring, std::move(k_gens));
    if (!is_m_primary(K)) return false;

    std::optional<MonomialIdeal> P;
    for (const auto& I : inst.ideals) P = P ? product(*P, I) : I;

    if (equals(K, *P)) return true;  // n = 0
    MonomialIdeal pn = *P;
    for (long long n = 1; n <= n_max; ++n) {
        MonomialIdeal next = product(pn, *P);
        if (equals(product(K, pn), next)) return true;
        pn = std::move(next);
    }
    return false;
}

ReesReport minimal_multiplicity_verdict(const ReesInstance& inst, bool with_oracle,
                                        HilbertEngine& engine) {
    ReesReport report;
    report.dim_B = rees_dim(inst);
    report.mu_n = mu_N(inst);
    report.e_n = e_N_formula(inst, engine);
    report.bound = report.mu_n - report.dim_B + 1;
    report.equation_holds = (report.e_n == report.bound);

    report.ring_mu = mu(inst.max_ideal);
    report.ring_e = engine.multiplicity(inst.max_ideal);
    report.ring_minimal_multiplicity = (report.ring_e == report.ring_mu - inst.d() + 1);

    const long long d = inst.d();
    for (const auto& I : inst.ideals) {
        PerIdealReport per;
        per.mu_count = mu(I);
        per.e_top_mixed = engine.e_q_pair(inst.max_ideal, I, d - 1);
        if (d == 1) per.reduction_number = reduction_number_dim1(I);
        report.per_ideal.push_back(std::move(per));
    }

    if (with_oracle) {
        report.e_n_oracle = e_N_direct(inst);
        if (*report.e_n_oracle != report.e_n)
            throw Error(Errc::OracleMismatch,
                        "e(N): formula " + report.e_n.str() + " vs direct " +
                            report.e_n_oracle->str() + " on " + inst.key());
        Int mu_direct = mu_N_direct(inst);
        if (mu_direct != report.mu_n)
            throw Error(Errc::OracleMismatch,
                        "mu(N): formula " + report.mu_n.str() + " vs direct " +
                            mu_direct.str() + " on " + inst.key());
    }
    return report;
}

}  // namespace reesmult
