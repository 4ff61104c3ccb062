#include <doctest.h>

#include "reesmult/theorems.hpp"

using namespace reesmult;

namespace {

Monomial mono(std::vector<long long> e) { return Monomial(std::move(e)); }

MonomialIdeal sg_ideal(const RingPtr& ring, std::vector<long long> values) {
    std::vector<Monomial> gens;
    for (long long v : values) gens.push_back(Monomial::semigroup_value(v));
    return ideal_from_gens(ring, std::move(gens));
}

}  // namespace

TEST_CASE("generator-count bound") {
    HilbertEngine engine;
    auto P2 = make_ring_polynomial_local(2);
    auto I = ideal_from_gens(P2, {mono({1, 0}), mono({0, 2})});
    auto res = check_nog(engine, I);
    CHECK(res.holds);
    CHECK(res.lhs == 2);
    CHECK(res.rhs == 2);  // e_1(m|I) + 1 = 1 + 1

    auto S = make_ring_numerical_semigroup({4, 5, 7});
    auto res2 = check_nog(engine, power(maximal_ideal(S), 2));
    CHECK(res2.holds);
    CHECK(res2.lhs == 4);
    CHECK(res2.rhs == 4);  // e(m) + 0

    auto res3 = check_nog(engine, maximal_ideal(P2));
    CHECK(res3.holds);
    CHECK(res3.lhs == 2);
    CHECK(res3.rhs == 2);
}

TEST_CASE("mixed multiplicity lower bound") {
    HilbertEngine engine;
    auto S = make_ring_numerical_semigroup({4, 5, 7});
    auto I1 = sg_ideal(S, {4, 10});
    auto m2 = power(maximal_ideal(S), 2);
    auto res = check_kv2(engine, {I1, m2}, {0, 0});
    CHECK(res.holds);
    CHECK(res.lhs == 4);
    CHECK(res.rhs == 4);  // e(I1 + I2) = e((4,10))

    auto P2 = make_ring_polynomial_local(2);
    auto m = maximal_ideal(P2);
    auto I = ideal_from_gens(P2, {mono({1, 0}), mono({0, 2})});
    auto res2 = check_kv2(engine, {m, I}, {0, 1});
    CHECK(res2.holds);
    CHECK(res2.lhs == 1);
    CHECK(res2.rhs == 1);

    auto res3 = check_kv2(engine, {m, m}, {1, 0});
    CHECK(res3.holds);
    CHECK(res3.lhs == 1);
    CHECK(res3.rhs == 1);

    CHECK_THROWS_WITH_AS(check_kv2(engine, {m, I}, {1, 1}),
                         doctest::Contains("QOutOfRange"), Error);
}

TEST_CASE("parameter-ideal upper bound") {
    HilbertEngine engine;
    auto P2 = make_ring_polynomial_local(2);
    auto m = maximal_ideal(P2);
    auto I = ideal_from_gens(P2, {mono({1, 0}), mono({0, 2})});

    auto res = check_isw(engine, {m, I}, {mono({0, 1}), mono({1, 0})});
    CHECK(res.holds);
    CHECK(res.lhs == 1);
    CHECK(res.rhs == 1);
    CHECK(res.note.find("joint reduction check: true") != std::string::npos);

    auto res2 = check_isw(engine, {m, I}, {mono({1, 0}), mono({0, 2})});
    CHECK(res2.holds);
    CHECK(res2.lhs == 1);
    CHECK(res2.rhs == 2);
    CHECK(res2.note.empty());

    auto res3 = check_isw(engine, {m, m}, {mono({1, 0}), mono({0, 1})});
    CHECK(res3.holds);
    CHECK(res3.lhs == 1);
    CHECK(res3.rhs == 1);

    CHECK_THROWS_WITH_AS(check_isw(engine, {m, I}, {mono({1, 0}), mono({2, 0})}),
                         doctest::Contains("NotParameterSystem"), Error);
    CHECK_THROWS_WITH_AS(check_isw(engine, {m, I}, {mono({1, 0}), mono({0, 1})}),
                         doctest::Contains("ElementNotInIdeal"), Error);
}

TEST_CASE("scaling identities") {
    HilbertEngine engine;
    auto P2 = make_ring_polynomial_local(2);
    auto I = ideal_from_gens(P2, {mono({1, 0}), mono({0, 2})});

    for (const auto& res : check_scaling(engine, I, 2, 1)) {
        CHECK(res.holds);
        CHECK(res.mode == CheckMode::Equality);
    }
    auto both = check_scaling(engine, I, 3, 0);
    CHECK(both[0].lhs == 9);  // e(m^3) = 3^2
    CHECK(both[0].holds);
    CHECK(both[1].holds);

    auto S = make_ring_numerical_semigroup({4, 5, 7});
    auto resS = check_scaling(engine, power(maximal_ideal(S), 2), 2, 0);
    CHECK(resS[0].lhs == 8);  // e(m^2) = 2 * 4
    CHECK(resS[0].holds);
    CHECK(resS[1].holds);
}

TEST_CASE("strict inequality for g >= 3") {
    HilbertEngine engine;

    auto P1 = make_ring_polynomial_local(1);
    auto m1 = maximal_ideal(P1);
    auto res = check_equation_strict_g3(engine, ReesInstance::make(P1, {m1, m1, m1}));
    CHECK(res.holds);
    CHECK(res.lhs == 4);  // 2^2 e(L), L = m
    CHECK(res.rhs == 3);  // mu(N) - dim + 1 = 6 - 4 + 1

    auto S = make_ring_numerical_semigroup({4, 5, 7});
    auto mS = maximal_ideal(S);
    auto resS = check_equation_strict_g3(engine, ReesInstance::make(S, {mS, mS, mS}));
    CHECK(resS.holds);
    CHECK(resS.lhs == 16);  // 2^2 e(m) = 16
    CHECK(resS.rhs == 9);   // mu(N) = 3 + 3 + 9 - 3 = 12, dim = 4

    auto P2 = make_ring_polynomial_local(2);
    auto m2 = maximal_ideal(P2);
    auto res2 = check_equation_strict_g3(engine, ReesInstance::make(P2, {m2, m2, m2}));
    CHECK(res2.holds);

    CHECK_THROWS_AS(check_equation_strict_g3(engine, ReesInstance::make(P1, {m1})), Error);
}

TEST_CASE("necessary conditions for g = 2") {
    HilbertEngine engine;

    auto find = [](const std::vector<CheckResult>& list, const std::string& name) {
        for (const auto& r : list)
            if (r.name == name) return r;
        FAIL("missing check ", name);
        return CheckResult{};
    };

    SUBCASE("golden semigroup instance") {
        auto S = make_ring_numerical_semigroup({4, 5, 7});
        auto m2 = power(maximal_ideal(S), 2);
        auto I1 = sum(sg_ideal(S, {4}), m2);
        auto list = check_necessary_conditions_g2(engine, ReesInstance::make(S, {I1, m2}));
        for (const auto& r : list) CHECK(r.holds);
        CHECK(find(list, "g2.length_positive").lhs == 1);
        CHECK(find(list, "g2.reduction_number.I1").lhs == 1);
        CHECK(find(list, "g2.reduction_number.I2").lhs == 1);
    }

    SUBCASE("regular base, d = 2") {
        auto P2 = make_ring_polynomial_local(2);
        auto m = maximal_ideal(P2);
        auto list = check_necessary_conditions_g2(engine, ReesInstance::make(P2, {m, m}));
        for (const auto& r : list) CHECK(r.holds);
        CHECK(find(list, "g2.length_le_d").lhs == 2);
        CHECK(find(list, "g2.base_minimal_mult").lhs == 1);
        CHECK(find(list, "g2.mu_eq_mixed.I1").rhs == 2);
        CHECK(find(list, "g2.reduction_number.I1").note.rfind("unknown", 0) == 0);
    }

    SUBCASE("regular base, d = 3") {
        auto P3 = make_ring_polynomial_local(3);
        auto m = maximal_ideal(P3);
        auto list = check_necessary_conditions_g2(engine, ReesInstance::make(P3, {m, m}));
        for (const auto& r : list) CHECK(r.holds);
        CHECK(find(list, "g2.length_eq_d").lhs == 3);
        CHECK(find(list, "g2.base_regular").lhs == 1);
        CHECK(find(list, "g2.unit_mixed.I1.q0").lhs == 1);
        CHECK(find(list, "g2.unit_mixed.I2.q1").lhs == 1);
    }

    SUBCASE("vacuous when the equation fails") {
        auto P3 = make_ring_polynomial_local(3);
        auto m = maximal_ideal(P3);
        auto list =
            check_necessary_conditions_g2(engine, ReesInstance::make(P3, {m, power(m, 2)}));
        REQUIRE(list.size() == 1);
        CHECK(list[0].name == "g2.vacuous");
        CHECK(list[0].holds);
        CHECK(list[0].note.rfind("vacuous", 0) == 0);
        CHECK(list[0].lhs == 8);
        CHECK(list[0].rhs == 7);
    }
}

TEST_CASE("random exploration") {
    ExploreConfig cfg;
    cfg.family = RingKind::PolynomialLocal;
    cfg.d = 2;
    cfg.g = 2;
    cfg.trials = 15;
    cfg.seed = 42;

    ExploreSummary a = explore_random(cfg);
    ExploreSummary b = explore_random(cfg);
    CHECK(a.render() == b.render());  // byte-for-byte deterministic
    CHECK(a.violated == 0);
    CHECK(a.checks_run > 0);

    cfg.seed = 43;
    CHECK(explore_random(cfg).violated == 0);

    ExploreConfig sg;
    sg.family = RingKind::NumericalSemigroup;
    sg.d = 1;
    sg.g = 3;
    sg.trials = 10;
    sg.seed = 7;
    ExploreSummary c = explore_random(sg);
    CHECK(c.violated == 0);

    ExploreConfig bad = cfg;
    bad.trials = 0;
    CHECK_THROWS_WITH_AS(explore_random(bad), doctest::Contains("UsageError"), Error);
}
