#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reesmult/hilbert.hpp"
#include "reesmult/monomial_ideal.hpp"

namespace reesmult {

/// A monomial R-submodule of R that may be the unit ideal; graded
/// components of the Rees algebra and of powers of its maximal homogeneous
/// ideal are values of this type.
class ComponentIdeal {
public:
    static ComponentIdeal unit(RingPtr ring) { return ComponentIdeal(std::move(ring)); }
    static ComponentIdeal wrap(MonomialIdeal ideal) { return ComponentIdeal(std::move(ideal)); }

    bool is_unit() const { return !ideal_.has_value(); }
    const MonomialIdeal& ideal() const { return *ideal_; }
    const RingPtr& ring() const { return ring_; }

private:
    explicit ComponentIdeal(RingPtr ring) : ring_(std::move(ring)) {}
    explicit ComponentIdeal(MonomialIdeal ideal)
        : ring_(ideal.ring()), ideal_(std::move(ideal)) {}

    RingPtr ring_;
    std::optional<MonomialIdeal> ideal_;
};

ComponentIdeal comp_sum(const ComponentIdeal& a, const ComponentIdeal& b);
ComponentIdeal comp_product(const ComponentIdeal& a, const ComponentIdeal& b);
bool comp_equals(const ComponentIdeal& a, const ComponentIdeal& b);
bool comp_contains(const ComponentIdeal& a, const Monomial& m);
Int comp_colength(const ComponentIdeal& a);  // 0 for the unit ideal

/// The multi-graded extended Rees algebra B(I_1,...,I_g) of m-primary
/// monomial ideals, together with the derived data the analysis needs.
struct ReesInstance {
    RingPtr ring;
    std::vector<MonomialIdeal> ideals;
    MonomialIdeal max_ideal;  // m
    MonomialIdeal L;          // I_1 + ... + I_g + m^2

    static ReesInstance make(RingPtr ring, std::vector<MonomialIdeal> ideals);

    int g() const { return static_cast<int>(ideals.size()); }
    int d() const { return ring->dim(); }
    std::string key() const;
};

/// dim B = dim R + g.
int rees_dim(const ReesInstance& inst);

/// mu(N) by the graded-component comparison:
/// g + mu(m) + sum_j mu(I_j) - l(L/m^2).
Int mu_N(const ReesInstance& inst);

/// e(N) by the closed mixed-multiplicity formula; asserts the 2^d division
/// is exact (NonIntegralResult otherwise).
Int e_N_formula(const ReesInstance& inst, HilbertEngine& engine);

/// Memoized graded components of powers of the maximal homogeneous ideal
/// N = (t_1^{-1},...,t_g^{-1}, m, I_1 t_1,...,I_g t_g). piece(n, b) is the
/// multidegree-b component of N^n as an R-submodule of the ambient
/// component B_b = prod I_j^{max(b_j,0)}.
class GradedPieces {
public:
    explicit GradedPieces(const ReesInstance& inst) : inst_(inst) {}

    const ComponentIdeal& ambient(const std::vector<long long>& b);
    const ComponentIdeal& piece(long long n, const std::vector<long long>& b);
    bool full(long long n, const std::vector<long long>& b);

private:
    const ReesInstance& inst_;
    std::map<std::vector<long long>, ComponentIdeal> ambient_;
    std::map<std::pair<long long, std::vector<long long>>, ComponentIdeal> pieces_;
};

/// e(N) as the Hilbert-Samuel multiplicity of B at N, by direct lattice
/// enumeration of l(B/N^n); independent of e_N_formula.
Int e_N_direct(const ReesInstance& inst, long long n_cap = 12, int dim_guard = 4);

/// mu(N) = l(N/N^2) summed over graded pieces; independent of mu_N.
Int mu_N_direct(const ReesInstance& inst);

/// min { n <= n_max : J I^n = I^{n+1} }, or nullopt when J is not
/// m-primary or no such n was found (NotReduction).
std::optional<long long> reduction_number_monomial(const MonomialIdeal& I,
                                                   const MonomialIdeal& J,
                                                   long long n_max = 20);

/// Exact reduction number in dimension one: the principal ideal on the
/// least generator value is a minimal reduction.
long long reduction_number_dim1(const MonomialIdeal& I);

/// Whether x_1,...,x_g (x_j in I_j) form a joint reduction: K = sum_j
/// x_j * prod_{k != j} I_k satisfies K P^n = P^{n+1} for some n <= n_max,
/// with P = prod_j I_j.
bool joint_reduction_check(const std::vector<Monomial>& elements,
                           const ReesInstance& inst, long long n_max = 20);

struct PerIdealReport {
    long long mu_count = 0;
    Int e_top_mixed;  // e_{d-1}(m | I_j)
    std::optional<long long> reduction_number;  // exact only in dimension 1
};

struct ReesReport {
    int dim_B = 0;
    Int mu_n;
    Int e_n;
    std::optional<Int> e_n_oracle;
    Int bound;  // mu(N) - dim B + 1
    bool equation_holds = false;
    std::vector<PerIdealReport> per_ideal;
    // base-ring data
    Int ring_mu;
    Int ring_e;
    bool ring_minimal_multiplicity = false;
};

/// Full analysis: the minimal-multiplicity equation for N, with the direct
/// oracle cross-check when requested (OracleMismatch on disagreement).
ReesReport minimal_multiplicity_verdict(const ReesInstance& inst, bool with_oracle,
                                        HilbertEngine& engine);

}  // namespace reesmult
