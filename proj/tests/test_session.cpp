#include <doctest.h>

#include <random>

#include "reesmult/session.hpp"

using namespace reesmult;

namespace {

const char* kGolden = R"(
# the worked instance over k[[t^4, t^5, t^7]]
ring S = numerical_semigroup(4, 5, 7);
ideal M = [4, 5, 7] in S;
ideal M2 = M ^ 2;
ideal X4 = [4] in S;
ideal I1 = X4 + M2;
ideal I2 = [8, 9, 10, 11] in S;
)";

}  // namespace

TEST_CASE("golden session parses and minimalizes") {
    Session s = parse_session(kGolden);
    REQUIRE(s.rings.count("S"));
    REQUIRE(s.ideals.count("I1"));
    CHECK(s.ideals.at("I1").key() == "[4|10]");
    CHECK(s.ideals.at("M2").key() == "[8|9|10|11]");
    CHECK(s.ideals.at("I2") == s.ideals.at("M2"));
    CHECK(s.ideal_ring_name.at("I1") == "S");

    Session p = parse_session(
        "ring R = polynomial_local(2); ideal M = [(1,0),(0,1)] in R;");
    CHECK(p.ideals.at("M").key() == "[0,1|1,0]");

    // expanded-generator input minimalizes like the direct construction
    Session q = parse_session(
        "ring S = numerical_semigroup(4,5,7); ideal I1 = [4, 8, 9, 10, 11] in S;");
    CHECK(q.ideals.at("I1").key() == "[4|10]");
}

TEST_CASE("diagnostics carry positions and codes") {
    auto expect_error = [](const char* text, Errc code, int line) {
        try {
            parse_session(text);
            FAIL("expected a parse error for: ", text);
        } catch (const ParseError& e) {
            CHECK(e.code() == code);
            CHECK(e.pos().line == line);
        }
    };

    expect_error("ideal J = [4] in X;", Errc::UndeclaredRing, 1);
    expect_error("ring R = polynomial_local(2);\nring R = polynomial_local(3);",
                 Errc::DuplicateName, 2);
    expect_error("ring R = polynomial_local(2);\nideal I = [(1,0,0)] in R;",
                 Errc::ArityMismatch, 2);
    expect_error("ring S = numerical_semigroup(4,5,7);\nideal I = [(1,0)] in S;",
                 Errc::ArityMismatch, 2);
    expect_error("ring S = numerical_semigroup(2,4);", Errc::NonCoprimeSemigroup, 1);
    expect_error("ring R = polynomial_local(2);\nideal I = [(0,0)] in R;",
                 Errc::UnitGenerator, 2);
    expect_error("ring S = numerical_semigroup(4,5,7);\nideal I = [6] in S;",
                 Errc::InvalidMonomial, 2);
    expect_error("ring R = polynomial_local(2); ideal I = [(1,0)] in R; ideal J = I ^ 0;",
                 Errc::ZeroPower, 1);
    expect_error("ideal I = J + K;", Errc::UndeclaredIdeal, 1);
    expect_error("ring in = polynomial_local(2);", Errc::SyntaxError, 1);
    expect_error("ring R = polynomial_local(99999999999999999999);", Errc::SyntaxError, 1);
    expect_error("ring R = polynomial_local(2) ideal", Errc::SyntaxError, 1);
    expect_error("@", Errc::SyntaxError, 1);

    // mixed-ring sum
    expect_error(
        "ring R = polynomial_local(2);\nring S = numerical_semigroup(2,3);\n"
        "ideal A = [(1,0)] in R;\nideal B = [2] in S;\nideal C = A + B;",
        Errc::RingMismatch, 5);

    // expected-token sets are reported
    try {
        parse_session("ring R + polynomial_local(2);");
        FAIL("expected failure");
    } catch (const ParseError& e) {
        CHECK(!e.expected().empty());
        CHECK(std::string(e.what()).find("expected") != std::string::npos);
    }
}

TEST_CASE("parser is total on fuzzed input") {
    std::mt19937_64 rng(12345);
    const std::string alphabet =
        "ring idealpolynomial_local numerical_semigroup in()[]{};,+^=0123456789 \n\t#\\\"'@$%";
    for (int t = 0; t < 2000; ++t) {
        std::string input;
        size_t len = rng() % 160;
        bool binary = (t % 7 == 0);
        for (size_t i = 0; i < len; ++i) {
            input += binary ? static_cast<char>(rng() % 256)
                            : alphabet[rng() % alphabet.size()];
        }
        try {
            parse_session(input);
        } catch (const ParseError& e) {
            CHECK(e.pos().line >= 1);  // always a positioned diagnostic
        }
    }
}
