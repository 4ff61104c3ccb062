#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "interp_oracle.hpp"
#include "reesmult/hilbert.hpp"

using namespace reesmult;

namespace {

Monomial mono(std::vector<long long> e) { return Monomial(std::move(e)); }

MonomialIdeal sg_ideal(const RingPtr& ring, std::vector<long long> values) {
    std::vector<Monomial> gens;
    for (long long v : values) gens.push_back(Monomial::semigroup_value(v));
    return ideal_from_gens(ring, std::move(gens));
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/reesmult_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("sample_length") {
    HilbertEngine engine;
    auto P2 = make_ring_polynomial_local(2);
    auto m = maximal_ideal(P2);
    auto I = ideal_from_gens(P2, {mono({1, 0}), mono({0, 2})});
    CHECK(engine.sample_length({m, I}, {1, 1}) == 4);
    CHECK(engine.sample_length({m, I}, {0, 0}) == 0);

    auto S = make_ring_numerical_semigroup({4, 5, 7});
    CHECK(engine.sample_length({maximal_ideal(S)}, {3}) == 8);

    // zero exponents omit the ideal
    CHECK(engine.sample_length({m, I}, {0, 1}) == engine.sample_length({I}, {1}));
    // the eventual semigroup colength growth is linear with slope min-gen
    auto mS = maximal_ideal(S);
    for (long long n = 2; n < 8; ++n)
        CHECK(engine.sample_length({mS}, {n + 1}) - engine.sample_length({mS}, {n}) == 4);
}

TEST_CASE("sample keys are canonical and parseable") {
    auto P2 = make_ring_polynomial_local(2);
    auto m = maximal_ideal(P2);
    auto I = ideal_from_gens(P2, {mono({1, 0}), mono({0, 2})});

    CHECK(HilbertEngine::sample_key({m, I}, {2, 1}) == HilbertEngine::sample_key({I, m}, {1, 2}));
    CHECK(HilbertEngine::sample_key({m, m}, {1, 2}) == HilbertEngine::sample_key({m}, {3}));
    CHECK(HilbertEngine::sample_key({m, I}, {0, 1}) == HilbertEngine::sample_key({I}, {1}));
    CHECK(HilbertEngine::sample_key({m}, {0}) == "");

    RingPtr ring;
    std::vector<MonomialIdeal> ideals;
    std::vector<long long> r;
    parse_sample_key(HilbertEngine::sample_key({m, I}, {2, 1}), ring, ideals, r);
    CHECK(*ring == *P2);
    REQUIRE(ideals.size() == 2);
    HilbertEngine e2;
    CHECK(e2.sample_length(ideals, r) == e2.sample_length({m, I}, {2, 1}));
}

TEST_CASE("mixed multiplicity examples") {
    HilbertEngine engine;
    auto P2 = make_ring_polynomial_local(2);
    auto m = maximal_ideal(P2);
    auto I = ideal_from_gens(P2, {mono({1, 0}), mono({0, 2})});

    CHECK(engine.mixed_multiplicity({{m, I}, {1, 1}}) == 1);
    CHECK(engine.mixed_multiplicity({{m, I}, {0, 2}}) == 2);

    auto S = make_ring_numerical_semigroup({4, 5, 7});
    CHECK(engine.mixed_multiplicity({{maximal_ideal(S)}, {1}}) == 4);
}

TEST_CASE("multiplicity") {
    HilbertEngine engine;
    auto S = make_ring_numerical_semigroup({4, 5, 7});
    CHECK(engine.multiplicity(maximal_ideal(S)) == 4);
    for (int d = 1; d <= 3; ++d)
        CHECK(engine.multiplicity(maximal_ideal(make_ring_polynomial_local(d))) == 1);
    auto P2 = make_ring_polynomial_local(2);
    CHECK(engine.multiplicity(power(maximal_ideal(P2), 2)) == 4);
}

TEST_CASE("e_q_pair") {
    HilbertEngine engine;
    auto P2 = make_ring_polynomial_local(2);
    auto m = maximal_ideal(P2);
    auto I = ideal_from_gens(P2, {mono({1, 0}), mono({0, 2})});
    CHECK(engine.e_q_pair(m, I, 1) == 1);
    CHECK(engine.e_q_pair(power(m, 2), I, 1) == 2);

    auto S = make_ring_numerical_semigroup({4, 5, 7});
    auto I1 = sg_ideal(S, {4, 10});
    auto m2 = power(maximal_ideal(S), 2);
    CHECK(engine.e_q_pair(I1, m2, 0) == engine.multiplicity(I1));
    CHECK(engine.e_q_pair(I1, m2, 0) == 4);

    CHECK_THROWS_WITH_AS(engine.e_q_pair(m, I, 2), doctest::Contains("QOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(engine.e_q_pair(m, I, -1), doctest::Contains("QOutOfRange"), Error);
}

TEST_CASE("mixed multiplicity invariances") {
    HilbertEngine engine;
    auto P2 = make_ring_polynomial_local(2);
    auto m = maximal_ideal(P2);
    auto I = ideal_from_gens(P2, {mono({1, 0}), mono({0, 2})});
    auto J = ideal_from_gens(P2, {mono({2, 0}), mono({1, 1}), mono({0, 2})});

    // permutation equivariance
    CHECK(engine.mixed_multiplicity({{m, I, J}, {1, 1, 0}}) ==
          engine.mixed_multiplicity({{J, I, m}, {0, 1, 1}}));
    // a full weight on one ideal is its multiplicity
    CHECK(engine.mixed_multiplicity({{I, J}, {0, 2}}) == engine.multiplicity(J));
    CHECK(engine.mixed_multiplicity({{I, J}, {2, 0}}) == engine.multiplicity(I));

    // scaling laws
    for (long long n = 1; n <= 3; ++n)
        CHECK(engine.multiplicity(power(m, n)) == Int(n * n) * engine.multiplicity(m));
    for (long long r = 1; r <= 2; ++r)
        for (long long q = 0; q <= 1; ++q) {
            Int lhs = engine.e_q_pair(power(m, r), I, q);
            Int scale = 1;
            for (long long i = 0; i < 2 - q; ++i) scale *= r;
            CHECK(lhs == scale * engine.e_q_pair(m, I, q));
        }

    // weight-sum validation
    CHECK_THROWS_WITH_AS(engine.mixed_multiplicity({{m, I}, {1, 2}}),
                         doctest::Contains("QOutOfRange"), Error);
}

TEST_CASE("interpolation oracle agrees with finite differences") {
    HilbertEngine engine;
    auto P2 = make_ring_polynomial_local(2);
    auto m = maximal_ideal(P2);
    auto I = ideal_from_gens(P2, {mono({1, 0}), mono({0, 2})});
    auto J = ideal_from_gens(P2, {mono({2, 0}), mono({1, 1}), mono({0, 3})});

    auto check_pair = [&](const MonomialIdeal& A, const MonomialIdeal& B) {
        auto f = [&](const std::vector<long long>& r) {
            return engine.sample_length({A, B}, r);
        };
        for (long long q = 0; q <= 2; ++q) {
            Int expected = testing::interpolated_mixed_multiplicity(f, 2, 8, 2, {2 - q, q});
            CHECK(engine.mixed_multiplicity({{A, B}, {2 - q, q}}) == expected);
        }
    };
    check_pair(m, I);
    check_pair(m, J);
    check_pair(I, J);
    check_pair(power(m, 2), J);

    auto S = make_ring_numerical_semigroup({4, 5, 7});
    auto mS = maximal_ideal(S);
    auto I1 = sg_ideal(S, {4, 10});
    auto f1 = [&](const std::vector<long long>& r) {
        return engine.sample_length({mS, I1}, r);
    };
    CHECK(engine.mixed_multiplicity({{mS, I1}, {1, 0}}) ==
          testing::interpolated_mixed_multiplicity(f1, 2, 8, 1, {1, 0}));
    CHECK(engine.mixed_multiplicity({{mS, I1}, {0, 1}}) ==
          testing::interpolated_mixed_multiplicity(f1, 2, 8, 1, {0, 1}));
}

TEST_CASE("stabilization failure is surfaced") {
    HilbertEngine tight({2, 1});  // window 2, cap 1: base 1 only
    auto S = make_ring_numerical_semigroup({4, 5, 7});
    // differences of colengths 1, 4, 8: 3 then 4 -- not constant at base 1
    CHECK_THROWS_WITH_AS(tight.multiplicity(maximal_ideal(S)),
                         doctest::Contains("StabilizationFailure"), Error);
    HilbertEngine wide({2, 64});
    CHECK(wide.multiplicity(maximal_ideal(S)) == 4);
}

TEST_CASE("cache io round-trip") {
    HilbertEngine engine;
    auto P2 = make_ring_polynomial_local(2);
    auto m = maximal_ideal(P2);
    auto I = ideal_from_gens(P2, {mono({1, 0}), mono({0, 2})});
    engine.mixed_multiplicity({{m, I}, {1, 1}});
    CHECK(engine.cache().size() > 0);

    TempFile f("cache.jsonl");
    engine.cache().store(f.path);
    SampleCache loaded = SampleCache::load(f.path);
    CHECK(loaded.snapshot() == engine.cache().snapshot());
    verify_cache(loaded);

    // empty file loads as an empty cache
    TempFile empty("cache_empty.jsonl");
    std::ofstream(empty.path).close();
    CHECK(SampleCache::load(empty.path).size() == 0);

    // corrupted line is rejected with its position
    TempFile bad("cache_bad.jsonl");
    {
        std::ofstream out(bad.path);
        out << R"({"k":"v1|pl:2|[0,1|1,0]@1","v":"1"})" << '\n';
        out << "not json\n";
    }
    CHECK_THROWS_WITH_AS(SampleCache::load(bad.path), doctest::Contains(":2:"), Error);

    // tampered value is caught by verification
    TempFile tampered("cache_tampered.jsonl");
    {
        std::ofstream out(tampered.path);
        out << R"({"k":"v1|pl:2|[0,1|1,0]@1","v":"99"})" << '\n';
    }
    CHECK_THROWS_WITH_AS(verify_cache(SampleCache::load(tampered.path)),
                         doctest::Contains("CacheInconsistency"), Error);

    CHECK_THROWS_WITH_AS(SampleCache::load("/nonexistent/path/x.jsonl"),
                         doctest::Contains("IoError"), Error);
}
