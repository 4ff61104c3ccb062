#include <doctest.h>

#include "reesmult/laurent.hpp"

using namespace reesmult;

namespace {

Monomial mono(std::vector<long long> e) { return Monomial(std::move(e)); }

LaurentTerm term(long long coeff, Monomial m, std::vector<long long> mdeg) {
    return {Rat(coeff), std::move(m), std::move(mdeg)};
}

ReesInstance mm_instance(int d, long long r) {
    auto P = make_ring_polynomial_local(d);
    auto m = maximal_ideal(P);
    return ReesInstance::make(P, {m, r == 1 ? m : power(m, r)});
}

}  // namespace

TEST_CASE("ordinary extended Rees algebra of (x) over k[x]") {
    auto P1 = make_ring_polynomial_local(1);
    auto inst = ReesInstance::make(P1, {maximal_ideal(P1)});
    // J = (t^{-1}, x t) spans N^2 over N
    std::vector<LaurentElement> jgens = {
        {{term(1, mono({0}), {-1})}},
        {{term(1, mono({1}), {1})}},
    };
    auto res = check_reduction_equation_bounded(inst, jgens, 3);
    CHECK(res.holds);

    // dropping x t leaves degree 0 of N^2 uncovered
    auto res2 = check_reduction_equation_bounded(inst, {jgens[0]}, 3);
    CHECK(!res2.holds);
    CHECK(!res2.fail_degree.empty());
}

TEST_CASE("explicit family for B(m, m^r) over regular bases") {
    for (int d : {1, 2}) {
        auto inst = mm_instance(d, 1);
        auto jgens = mm_power_reduction_generators(inst.ring, 1);
        CHECK(jgens.size() == static_cast<size_t>(d + 2));
        auto res = check_reduction_equation_bounded(inst, jgens, 3);
        INFO("d = ", d);
        CHECK(res.holds);

        // removing any single generator breaks the span somewhere
        for (size_t skip = 0; skip < jgens.size(); ++skip) {
            std::vector<LaurentElement> pruned;
            for (size_t i = 0; i < jgens.size(); ++i)
                if (i != skip) pruned.push_back(jgens[i]);
            auto weak = check_reduction_equation_bounded(inst, pruned, 3);
            INFO("removed generator ", skip);
            CHECK(!weak.holds);
        }
    }

    // d = 2, r = 2: the instance (m, m^2) still satisfies the equation
    auto inst22 = mm_instance(2, 2);
    auto res22 = check_reduction_equation_bounded(inst22, mm_power_reduction_generators(inst22.ring, 2), 3);
    CHECK(res22.holds);

    // d = 3, r = 1
    auto inst3 = mm_instance(3, 1);
    auto res3 = check_reduction_equation_bounded(inst3, mm_power_reduction_generators(inst3.ring, 1), 3);
    CHECK(res3.holds);
}

TEST_CASE("generator validation") {
    auto inst = mm_instance(2, 1);

    // ring monomial outside the ambient component
    std::vector<LaurentElement> bad1 = {{{term(1, mono({0, 0}), {1, 0})}}};
    CHECK_THROWS_WITH_AS(check_reduction_equation_bounded(inst, bad1, 2),
                         doctest::Contains("InhomogeneousGenerator"), Error);

    // unit term in multidegree zero is not in N
    std::vector<LaurentElement> bad2 = {{{term(1, mono({0, 0}), {0, 0})}}};
    CHECK_THROWS_WITH_AS(check_reduction_equation_bounded(inst, bad2, 2),
                         doctest::Contains("InhomogeneousGenerator"), Error);

    // terms cancelling to zero
    std::vector<LaurentElement> bad3 = {
        {{term(1, mono({1, 0}), {1, 0}), term(-1, mono({1, 0}), {1, 0})}}};
    CHECK_THROWS_WITH_AS(check_reduction_equation_bounded(inst, bad3, 2),
                         doctest::Contains("zero element"), Error);

    CHECK_THROWS_WITH_AS(
        check_reduction_equation_bounded(inst, mm_power_reduction_generators(inst.ring, 1), 600),
        doctest::Contains("BoxTooLarge"), Error);
}
