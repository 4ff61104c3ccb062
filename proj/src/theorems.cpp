#include "reesmult/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace reesmult {

const char* check_mode_name(CheckMode mode) {
    switch (mode) {
        case CheckMode::Inequality: return "Inequality";
        case CheckMode::Implication: return "Implication";
        case CheckMode::Equality: return "Equality";
    }
    return "?";
}

namespace {

Int int_pow(long long base, long long exp) {
    Int r = 1;
    for (long long i = 0; i < exp; ++i) r *= base;
    return r;
}

std::string describe(const RingPtr& ring, const std::vector<MonomialIdeal>& ideals,
                     const std::string& params = "") {
    std::ostringstream os;
    os << ring->key();
    for (const auto& I : ideals) os << ';' << I.key();
    if (!params.empty()) os << ';' << params;
    return os.str();
}

}  // namespace

CheckResult check_nog(HilbertEngine& engine, const MonomialIdeal& I) {
    if (!is_m_primary(I)) throw Error(Errc::NotMPrimary, I.key());
    const long long d = I.ring()->dim();
    MonomialIdeal m = maximal_ideal(I.ring());
    CheckResult res;
    res.name = "nog";
    res.instance = describe(I.ring(), {I});
    res.lhs = mu(I);
    res.rhs = engine.e_q_pair(m, I, d - 1) + (d - 1);
    res.holds = res.lhs <= res.rhs;
    res.mode = CheckMode::Inequality;
    return res;
}

CheckResult check_kv2(HilbertEngine& engine, const std::vector<MonomialIdeal>& ideals,
                      const std::vector<long long>& q) {
    if (ideals.empty() || ideals.size() != q.size())
        throw Error(Errc::QOutOfRange, "need one weight per ideal");
    const long long d = ideals.front().ring()->dim();
    long long total = std::accumulate(q.begin(), q.end(), 0LL);
    if (total != d - 1)
        throw Error(Errc::QOutOfRange, "composition must sum to d-1");

    MixedQuery query{ideals, q};
    query.weights[0] += 1;

    std::optional<MonomialIdeal> S;
    for (const auto& I : ideals) S = S ? sum(*S, I) : I;

    std::ostringstream params;
    params << "q=(";
    for (size_t i = 0; i < q.size(); ++i) params << (i ? "," : "") << q[i];
    params << ')';

    CheckResult res;
    res.name = "kv2";
    res.instance = describe(ideals.front().ring(), ideals, params.str());
    res.lhs = engine.mixed_multiplicity(query);
    res.rhs = engine.multiplicity(*S);
    res.holds = res.lhs >= res.rhs;
    res.mode = CheckMode::Inequality;
    return res;
}

CheckResult check_isw(HilbertEngine& engine, const std::vector<MonomialIdeal>& ideals,
                      const std::vector<Monomial>& elements) {
    if (ideals.empty()) throw Error(Errc::QOutOfRange, "no ideals");
    const RingPtr& ring = ideals.front().ring();
    const long long d = ring->dim();
    if (static_cast<long long>(ideals.size()) != d || elements.size() != ideals.size())
        throw Error(Errc::QOutOfRange, "need d ideals and d elements");
    for (size_t i = 0; i < ideals.size(); ++i)
        if (!contains(ideals[i], elements[i]))
            throw Error(Errc::ElementNotInIdeal,
                        elements[i].key() + " not in " + ideals[i].key());
    MonomialIdeal P = ideal_from_gens(ring, elements);
    if (!is_m_primary(P))
        throw Error(Errc::NotParameterSystem, P.key() + " is not m-primary");

    std::ostringstream params;
    params << "x=(";
    for (size_t i = 0; i < elements.size(); ++i) params << (i ? ";" : "") << elements[i].key();
    params << ')';

    CheckResult res;
    res.name = "isw";
    res.instance = describe(ring, ideals, params.str());
    res.lhs = engine.mixed_multiplicity({ideals, std::vector<long long>(ideals.size(), 1)});
    res.rhs = engine.multiplicity(P);
    res.holds = res.lhs <= res.rhs;
    res.mode = CheckMode::Inequality;
    if (res.lhs == res.rhs) {
        // Informational only: equality suggests a joint reduction.
        ReesInstance inst = ReesInstance::make(ring, ideals);
        bool joint = joint_reduction_check(elements, inst);
        res.note = std::string("equality; joint reduction check: ") + (joint ? "true" : "false");
    }
    return res;
}

std::vector<CheckResult> check_scaling(HilbertEngine& engine, const MonomialIdeal& I,
                                       long long r, long long q) {
    if (!is_m_primary(I)) throw Error(Errc::NotMPrimary, I.key());
    if (r < 1) throw Error(Errc::ZeroPower, "r must be positive");
    const long long d = I.ring()->dim();
    if (q < 0 || q > d - 1) throw Error(Errc::QOutOfRange, "q outside [0, d-1]");

    MonomialIdeal m = maximal_ideal(I.ring());
    MonomialIdeal mr = power(m, r);
    std::string params = "r=" + std::to_string(r) + ";q=" + std::to_string(q);

    std::vector<CheckResult> out;
    {
        CheckResult res;
        res.name = "scaling.power";
        res.instance = describe(I.ring(), {I}, params);
        res.lhs = engine.multiplicity(mr);
        res.rhs = int_pow(r, d) * engine.multiplicity(m);
        res.holds = res.lhs == res.rhs;
        res.mode = CheckMode::Equality;
        out.push_back(std::move(res));
    }
    {
        CheckResult res;
        res.name = "scaling.mixed";
        res.instance = describe(I.ring(), {I}, params);
        res.lhs = engine.e_q_pair(mr, I, q);
        res.rhs = int_pow(r, d - q) * engine.e_q_pair(m, I, q);
        res.holds = res.lhs == res.rhs;
        res.mode = CheckMode::Equality;
        out.push_back(std::move(res));
    }
    return out;
}

CheckResult check_equation_strict_g3(HilbertEngine& engine, const ReesInstance& inst) {
    if (inst.g() < 3)
        throw Error(Errc::QOutOfRange, "strict inequality check needs g >= 3");
    CheckResult res;
    res.name = "g3.strict";
    res.instance = inst.key();
    res.lhs = e_N_formula(inst, engine);
    res.rhs = mu_N(inst) - rees_dim(inst) + 1;
    res.holds = res.lhs > res.rhs;
    res.mode = CheckMode::Inequality;
    return res;
}

std::vector<CheckResult> check_necessary_conditions_g2(HilbertEngine& engine,
                                                       const ReesInstance& inst) {
    if (inst.g() != 2)
        throw Error(Errc::QOutOfRange, "necessary-conditions check needs g = 2");
    const long long d = inst.d();
    const std::string where = inst.key();
    const MonomialIdeal& m = inst.max_ideal;
    MonomialIdeal m2 = power(m, 2);
    Int len = length_quotient(m2, inst.L);  // l(L/m^2)

    Int e_n = e_N_formula(inst, engine);
    Int bound = mu_N(inst) - rees_dim(inst) + 1;
    bool equation = (e_n == bound);

    std::vector<CheckResult> out;
    auto push = [&](std::string name, Int lhs, Int rhs, bool holds, CheckMode mode,
                    std::string note = "") {
        out.push_back({std::move(name), where, std::move(lhs), std::move(rhs), holds, mode,
                       std::move(note)});
    };

    if (!equation) {
        // Hypothesis fails: every necessary condition is vacuously true.
        push("g2.vacuous", e_n, bound, true, CheckMode::Implication,
             "vacuous: minimal-multiplicity equation fails (e(N) != bound)");
        return out;
    }

    push("g2.length_positive", len, 1, len >= 1, CheckMode::Inequality);
    if (d == 2) push("g2.length_le_d", len, d, len <= d, CheckMode::Inequality);
    if (d >= 3) push("g2.length_eq_d", len, d, len == d, CheckMode::Equality);

    if (d >= 3) {
        push("g2.base_regular", engine.multiplicity(m), 1, engine.multiplicity(m) == 1,
             CheckMode::Equality);
        for (int j = 0; j < 2; ++j) {
            const MonomialIdeal& I = inst.ideals[static_cast<size_t>(j)];
            Int lhs = mu(I);
            Int rhs = engine.e_q_pair(m, I, d - 1) + (d - 1);
            push("g2.mu_eq_mixed.I" + std::to_string(j + 1), lhs, rhs, lhs == rhs,
                 CheckMode::Equality);
            for (long long q = 0; q <= d - 2; ++q) {
                Int v = engine.e_q_pair(inst.L, I, q);
                push("g2.unit_mixed.I" + std::to_string(j + 1) + ".q" + std::to_string(q), v, 1,
                     v == 1, CheckMode::Equality);
            }
        }
    }

    if (d == 2 && len == 2) {
        Int em = engine.multiplicity(m);
        Int mum = mu(m);
        push("g2.base_minimal_mult", em, mum - 1, em == mum - 1, CheckMode::Equality);
        for (int j = 0; j < 2; ++j) {
            const MonomialIdeal& I = inst.ideals[static_cast<size_t>(j)];
            Int lhs = mu(I);
            Int rhs = engine.e_q_pair(m, I, 1) + 1;
            push("g2.mu_eq_mixed.I" + std::to_string(j + 1), lhs, rhs, lhs == rhs,
                 CheckMode::Equality);
        }
    }

    for (int j = 0; j < 2; ++j) {
        std::string name = "g2.reduction_number.I" + std::to_string(j + 1);
        if (d == 1) {
            Int r = reduction_number_dim1(inst.ideals[static_cast<size_t>(j)]);
            push(std::move(name), r, 1, r <= 1, CheckMode::Inequality);
        } else {
            push(std::move(name), 0, 1, true, CheckMode::Implication,
                 "unknown: exact reduction numbers need dimension 1 (minimal reductions are "
                 "not monomial here)");
        }
    }
    return out;
}

namespace {

long long rand_in(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

RingPtr random_ring(std::mt19937_64& rng, const ExploreConfig& cfg) {
    if (cfg.family == RingKind::PolynomialLocal) return make_ring_polynomial_local(cfg.d);
    for (int attempt = 0; attempt < 100; ++attempt) {
        int k = static_cast<int>(rand_in(rng, 2, 3));
        std::vector<long long> gens;
        long long g = 0;
        for (int i = 0; i < k; ++i) {
            long long v = rand_in(rng, 2, 2 + cfg.exponent_bound * 2);
            gens.push_back(v);
            g = std::gcd(g, v);
        }
        if (g == 1) return make_ring_numerical_semigroup(std::move(gens));
    }
    return make_ring_numerical_semigroup({2, 3});
}

MonomialIdeal random_ideal(std::mt19937_64& rng, const RingPtr& ring, const ExploreConfig& cfg) {
    std::vector<Monomial> gens;
    long long k = rand_in(rng, cfg.gen_count_min, cfg.gen_count_max);
    if (ring->kind() == RingKind::PolynomialLocal) {
        const int d = ring->dim();
        // Pure powers of every variable force m-primariness.
        for (int i = 0; i < d; ++i) {
            std::vector<long long> e(static_cast<size_t>(d), 0);
            e[static_cast<size_t>(i)] = rand_in(rng, 1, cfg.exponent_bound);
            gens.emplace_back(std::move(e));
        }
        for (long long j = 0; j < k; ++j) {
            std::vector<long long> e(static_cast<size_t>(d), 0);
            long long total = 0;
            for (int i = 0; i < d; ++i) {
                e[static_cast<size_t>(i)] = rand_in(rng, 0, cfg.exponent_bound);
                total += e[static_cast<size_t>(i)];
            }
            if (total == 0) e[0] = 1;
            gens.emplace_back(std::move(e));
        }
    } else {
        long long lo = ring->semigroup_gens().front();
        long long hi = lo + ring->conductor() + cfg.exponent_bound * lo;
        for (long long j = 0; j < k; ++j) {
            long long v = rand_in(rng, lo, hi);
            while (!ring->semigroup_member(v)) ++v;
            gens.push_back(Monomial::semigroup_value(v));
        }
    }
    return ideal_from_gens(ring, std::move(gens));
}

// The pure-power generator of the given variable (exists: I is m-primary).
Monomial pure_power_element(const MonomialIdeal& I, int var) {
    for (const Monomial& g : I.min_gens()) {
        const auto& e = g.exponents();
        bool pure = e[static_cast<size_t>(var)] > 0;
        for (size_t i = 0; pure && i < e.size(); ++i)
            if (static_cast<int>(i) != var && e[i] != 0) pure = false;
        if (pure) return g;
    }
    throw Error(Errc::NotMPrimary, I.key());
}

}  // namespace

std::string ExploreSummary::render() const {
    std::ostringstream os;
    os << "trials: " << trials << '\n'
       << "checks run: " << checks_run << '\n'
       << "held: " << held << '\n'
       << "vacuous/unknown: " << vacuous_or_unknown << '\n'
       << "violations: " << violated << '\n'
       << "stabilization failures: " << stabilization_failures << '\n';
    for (const auto& [name, count] : per_check)
        os << "  " << name << ": " << count << '\n';
    for (const auto& v : violations) os << "VIOLATION " << v << '\n';
    return os.str();
}

ExploreSummary explore_random(const ExploreConfig& config) {
    if (config.trials < 1) throw Error(Errc::UsageError, "trials must be >= 1");
    if (config.g < 1 || config.d < 1 || config.gen_count_min < 1 ||
        config.gen_count_max < config.gen_count_min || config.exponent_bound < 1)
        throw Error(Errc::UsageError, "bad explore configuration");

    std::mt19937_64 rng(config.seed);
    HilbertEngine engine;
    ExploreSummary summary;
    summary.trials = config.trials;

    auto record = [&](const CheckResult& res) {
        ++summary.checks_run;
        ++summary.per_check[res.name];
        bool informational = res.note.rfind("vacuous", 0) == 0 || res.note.rfind("unknown", 0) == 0;
        if (informational) {
            ++summary.vacuous_or_unknown;
        } else if (res.holds) {
            ++summary.held;
        } else {
            ++summary.violated;
            summary.violations.push_back(res.name + " on " + res.instance + ": lhs=" +
                                         res.lhs.str() + " rhs=" + res.rhs.str());
        }
    };

    for (long long trial = 0; trial < config.trials; ++trial) {
        RingPtr ring = random_ring(rng, config);
        const int d = ring->dim();
        std::vector<MonomialIdeal> ideals;
        for (int j = 0; j < config.g; ++j) ideals.push_back(random_ideal(rng, ring, config));

        // The composition, scaling parameters and element choices are drawn
        // up front so a stabilization failure cannot skew the RNG stream.
        std::vector<long long> comp(static_cast<size_t>(config.g), 0);
        for (long long rem = d - 1; rem > 0; --rem)
            ++comp[static_cast<size_t>(rand_in(rng, 0, config.g - 1))];
        long long scale_r = rand_in(rng, 1, 3);
        long long scale_q = rand_in(rng, 0, d - 1);
        std::vector<int> perm(static_cast<size_t>(d));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);

        auto guarded = [&](auto&& fn) {
            try {
                fn();
            } catch (const Error& e) {
                if (e.code() == Errc::StabilizationFailure) {
                    ++summary.stabilization_failures;
                } else {
                    ++summary.checks_run;
                    ++summary.violated;
                    summary.violations.push_back(std::string("error: ") + e.what());
                }
            }
        };

        guarded([&] {
            for (const auto& I : ideals) record(check_nog(engine, I));
        });
        guarded([&] { record(check_kv2(engine, ideals, comp)); });
        guarded([&] {
            for (const auto& res : check_scaling(engine, ideals.front(), scale_r, scale_q))
                record(res);
        });
        guarded([&] {
            std::vector<MonomialIdeal> d_ideals;
            std::vector<Monomial> elements;
            for (int i = 0; i < d; ++i) {
                const MonomialIdeal& I = ideals[static_cast<size_t>(i % config.g)];
                d_ideals.push_back(I);
                elements.push_back(ring->kind() == RingKind::PolynomialLocal
                                       ? pure_power_element(I, perm[static_cast<size_t>(i)])
                                       : I.min_gens().front());
            }
            record(check_isw(engine, d_ideals, elements));
        });
        if (config.g >= 3) {
            guarded([&] {
                ReesInstance inst = ReesInstance::make(ring, ideals);
                record(check_equation_strict_g3(engine, inst));
            });
        }
        if (config.g == 2) {
            guarded([&] {
                ReesInstance inst = ReesInstance::make(ring, ideals);
                for (const auto& res : check_necessary_conditions_g2(engine, inst)) record(res);
            });
        }
    }

    std::sort(summary.violations.begin(), summary.violations.end());
    return summary;
}

}  // namespace reesmult
