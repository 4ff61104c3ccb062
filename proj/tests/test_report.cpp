#include <doctest.h>

#include "reesmult/report.hpp"

using namespace reesmult;

namespace {

MonomialIdeal sg_ideal(const RingPtr& ring, std::vector<long long> values) {
    std::vector<Monomial> gens;
    for (long long v : values) gens.push_back(Monomial::semigroup_value(v));
    return ideal_from_gens(ring, std::move(gens));
}

}  // namespace

TEST_CASE("json report round-trips its integer fields") {
    HilbertEngine engine;
    auto S = make_ring_numerical_semigroup({4, 5, 7});
    auto m2 = power(maximal_ideal(S), 2);
    auto I1 = sum(sg_ideal(S, {4}), m2);
    auto inst = ReesInstance::make(S, {I1, m2});
    ReesReport report = minimal_multiplicity_verdict(inst, true, engine);
    auto checks = check_necessary_conditions_g2(engine, inst);

    InstanceDescription desc;
    desc.ring_key = S->key();
    desc.ideals = {{"I1", I1.key()}, {"I2", m2.key()}};

    auto j = rees_report_json(report, desc, checks, 17);
    auto parsed = nlohmann::ordered_json::parse(j.dump());
    CHECK(parsed["schema"] == "reesmult/1");
    CHECK(parsed["dim"].get<long long>() == 3);
    CHECK(parsed["muN"].get<long long>() == 10);
    CHECK(parsed["eN"].get<long long>() == 8);
    CHECK(parsed["eNOracle"].get<long long>() == 8);
    CHECK(parsed["bound"].get<long long>() == 8);
    CHECK(parsed["equationHolds"].get<bool>());
    CHECK(parsed["instance"]["ring"] == "ns:4,5,7");
    CHECK(parsed["instance"]["ringMu"].get<long long>() == 3);
    CHECK(parsed["instance"]["ringE"].get<long long>() == 4);
    CHECK(parsed["perIdeal"][0]["mu"].get<long long>() == 2);
    CHECK(parsed["perIdeal"][0]["reductionNumber"].get<long long>() == 1);
    CHECK(parsed["checks"].size() == checks.size());
    CHECK(parsed["timingMs"].get<long long>() == 17);

    // oracle off serializes as null
    ReesReport no_oracle = minimal_multiplicity_verdict(inst, false, engine);
    auto j2 = rees_report_json(no_oracle, desc, {}, 0);
    CHECK(j2["eNOracle"].is_null());
    CHECK(j2["checks"].empty());

    // text mode mentions the same facts
    std::string text = rees_report_text(report, desc, checks, 17);
    CHECK(text.find("mu(N)          10") != std::string::npos);
    CHECK(text.find("e(N)           8") != std::string::npos);
    CHECK(text.find("holds") != std::string::npos);
}

TEST_CASE("big integers fall back to decimal strings") {
    Int big = Int("123456789012345678901234567890");
    auto j = int_json(big);
    CHECK(j.is_string());
    CHECK(j.get<std::string>() == "123456789012345678901234567890");
    CHECK(int_json(Int(42)).is_number());
}
