#pragma once

#include <map>
#include <string>
#include <vector>

#include "reesmult/rees.hpp"

namespace reesmult {

enum class CheckMode { Inequality, Implication, Equality };

/// Outcome of one executable theorem check. `holds` reflects the named
/// relation between lhs and rhs; Implication-mode results may instead be
/// vacuously true or unknown, with the reason in `note`.
struct CheckResult {
    std::string name;
    std::string instance;
    Int lhs;
    Int rhs;
    bool holds = false;
    CheckMode mode = CheckMode::Inequality;
    std::string note;
};

const char* check_mode_name(CheckMode mode);

/// mu(I) <= e_{d-1}(m|I) + d - 1 for m-primary I over a CM base.
CheckResult check_nog(HilbertEngine& engine, const MonomialIdeal& I);

/// e(I_1^[q_1+1] | I_2^[q_2] | ... ) >= e(I_1 + ... + I_g), where the
/// composition q has sum d-1.
CheckResult check_kv2(HilbertEngine& engine, const std::vector<MonomialIdeal>& ideals,
                      const std::vector<long long>& q);

/// e(I_1 | ... | I_d) <= e(x_1,...,x_d) for elements x_i in I_i spanning an
/// m-primary parameter ideal. Equality triggers an informational joint-
/// reduction check (never asserted).
CheckResult check_isw(HilbertEngine& engine, const std::vector<MonomialIdeal>& ideals,
                      const std::vector<Monomial>& elements);

/// The two scaling identities: e(m^r) = r^d e(m) and
/// e_q(m^r | I) = r^{d-q} e_q(m | I).
std::vector<CheckResult> check_scaling(HilbertEngine& engine, const MonomialIdeal& I,
                                       long long r, long long q);

/// Strict inequality e(N) > mu(N) - dim B + 1 for g >= 3 over CM bases.
CheckResult check_equation_strict_g3(HilbertEngine& engine, const ReesInstance& inst);

/// The necessary conditions for a bigraded instance satisfying the
/// minimal-multiplicity equation; vacuously true when the equation fails.
std::vector<CheckResult> check_necessary_conditions_g2(HilbertEngine& engine,
                                                       const ReesInstance& inst);

struct ExploreConfig {
    RingKind family = RingKind::PolynomialLocal;
    int d = 2;  // semigroup rings are dimension 1 regardless
    int g = 2;
    int gen_count_min = 2;
    int gen_count_max = 4;
    long long exponent_bound = 4;
    long long trials = 100;
    unsigned long long seed = 0;
};

struct ExploreSummary {
    long long trials = 0;
    long long checks_run = 0;
    long long held = 0;
    long long violated = 0;
    long long vacuous_or_unknown = 0;
    long long stabilization_failures = 0;
    std::map<std::string, long long> per_check;  // runs by checker name
    std::vector<std::string> violations;         // full witnesses

    std::string render() const;  // deterministic under a fixed config+seed
};

/// Randomized instance explorer: every violation it finds is an
/// implementation-bug witness, not a counterexample hunt.
ExploreSummary explore_random(const ExploreConfig& config);

}  // namespace reesmult
