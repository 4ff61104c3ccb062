#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "reesmult/monomial_ideal.hpp"

namespace reesmult {

struct SourcePos {
    int line = 0;
    int col = 0;
};

/// Any failure while reading a session file: lexical, syntactic or semantic
/// (undeclared names, arity mismatches, invalid generators), always carrying
/// the source position and, for syntax errors, the expected-token set.
class ParseError : public Error {
public:
    ParseError(Errc code, SourcePos pos, const std::string& msg,
               std::vector<std::string> expected = {});

    SourcePos pos() const { return pos_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    SourcePos pos_;
    std::vector<std::string> expected_;
};

/// Parsed declarations of a session file: named rings and named ideals.
struct Session {
    std::map<std::string, RingPtr> rings;
    std::map<std::string, MonomialIdeal> ideals;
    std::map<std::string, std::string> ideal_ring_name;
    std::map<std::string, SourcePos> spans;
};

/// Grammar:
///   ring NAME = polynomial_local(NAT);
///   ring NAME = numerical_semigroup(NAT {, NAT});
///   ideal NAME = [GEN {, GEN}] in NAME;
///   ideal NAME = NAME + NAME {+ NAME};     (sum of declared ideals)
///   ideal NAME = NAME ^ NAT;               (power of a declared ideal)
/// with GEN a semigroup value NAT or an exponent vector (NAT {, NAT}),
/// and '#' starting a line comment. Total: every input yields a Session
/// or a ParseError with a position.
Session parse_session(std::string_view text);

}  // namespace reesmult
