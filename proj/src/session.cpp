#include "reesmult/session.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace reesmult {

namespace {

std::string render_message(SourcePos pos, const std::string& msg,
                           const std::vector<std::string>& expected) {
    std::ostringstream os;
    os << "line " << pos.line << ", col " << pos.col << ": " << msg;
    if (!expected.empty()) {
        os << " (expected ";
        for (size_t i = 0; i < expected.size(); ++i) {
            if (i) os << ", ";
            os << expected[i];
        }
        os << ')';
    }
    return os.str();
}

enum class Tok { Ident, Number, Symbol, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;      // identifier text or single symbol character
    long long number = 0;  // Tok::Number
    SourcePos pos;

    std::string describe() const {
        switch (kind) {
            case Tok::Ident: return "identifier '" + text + "'";
            case Tok::Number: return "number " + std::to_string(number);
            case Tok::Symbol: return "'" + text + "'";
            case Tok::End: return "end of input";
        }
        return "?";
    }
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws_and_comments();
        Token t;
        t.pos = {line_, col_};
        if (i_ >= src_.size()) return t;
        char c = src_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Tok::Ident;
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                t.text += take();
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::Number;
            long long v = 0;
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
                int digit = src_[i_] - '0';
                if (v > (std::numeric_limits<long long>::max() - digit) / 10)
                    throw ParseError(Errc::SyntaxError, t.pos, "number literal too large");
                v = v * 10 + digit;
                take();
            }
            t.number = v;
            return t;
        }
        if (std::string("=;,+^()[]").find(c) != std::string::npos) {
            t.kind = Tok::Symbol;
            t.text = std::string(1, take());
            return t;
        }
        std::ostringstream os;
        os << "unexpected character '";
        if (std::isprint(static_cast<unsigned char>(c)))
            os << c;
        else
            os << "\\x" << std::hex << static_cast<int>(static_cast<unsigned char>(c));
        os << '\'';
        throw ParseError(Errc::SyntaxError, t.pos, os.str());
    }

private:
    char take() {
        char c = src_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws_and_comments() {
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (c == '#') {
                while (i_ < src_.size() && src_[i_] != '\n') take();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f') {
                take();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

const char* kKeywords[] = {"ring", "ideal", "in", "polynomial_local", "numerical_semigroup"};

bool is_keyword(const std::string& s) {
    return std::find(std::begin(kKeywords), std::end(kKeywords), s) != std::end(kKeywords);
}

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    Session run() {
        while (cur_.kind != Tok::End) declaration();
        return std::move(session_);
    }

private:
    void advance() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        throw ParseError(Errc::SyntaxError, cur_.pos, "unexpected " + cur_.describe(),
                         std::move(expected));
    }

    bool at_symbol(const char* s) const { return cur_.kind == Tok::Symbol && cur_.text == s; }
    bool at_ident(const char* s) const { return cur_.kind == Tok::Ident && cur_.text == s; }

    void expect_symbol(const char* s) {
        if (!at_symbol(s)) fail({std::string("'") + s + "'"});
        advance();
    }

    long long expect_number() {
        if (cur_.kind != Tok::Number) fail({"number"});
        long long v = cur_.number;
        advance();
        return v;
    }

    std::string expect_name() {
        if (cur_.kind != Tok::Ident) fail({"name"});
        if (is_keyword(cur_.text))
            throw ParseError(Errc::SyntaxError, cur_.pos,
                             "'" + cur_.text + "' is a reserved word");
        std::string name = cur_.text;
        advance();
        return name;
    }

    void check_fresh(const std::string& name, SourcePos pos) {
        if (session_.rings.count(name) || session_.ideals.count(name))
            throw ParseError(Errc::DuplicateName, pos, "'" + name + "' is already declared");
    }

    void declaration() {
        if (at_ident("ring")) {
            advance();
            ring_declaration();
        } else if (at_ident("ideal")) {
            advance();
            ideal_declaration();
        } else {
            fail({"'ring'", "'ideal'"});
        }
    }

    void ring_declaration() {
        SourcePos pos = cur_.pos;
        std::string name = expect_name();
        check_fresh(name, pos);
        expect_symbol("=");
        RingPtr ring;
        SourcePos body = cur_.pos;
        if (at_ident("polynomial_local")) {
            advance();
            expect_symbol("(");
            long long d = expect_number();
            expect_symbol(")");
            if (d < 1 || d > 64)
                throw ParseError(Errc::EmptySpec, body, "dimension must be in [1, 64]");
            ring = make_ring_polynomial_local(static_cast<int>(d));
        } else if (at_ident("numerical_semigroup")) {
            advance();
            expect_symbol("(");
            std::vector<long long> gens;
            gens.push_back(expect_number());
            while (at_symbol(",")) {
                advance();
                gens.push_back(expect_number());
            }
            expect_symbol(")");
            try {
                ring = make_ring_numerical_semigroup(std::move(gens));
            } catch (const Error& e) {
                throw ParseError(e.code(), body, e.what());
            }
        } else {
            fail({"'polynomial_local'", "'numerical_semigroup'"});
        }
        expect_symbol(";");
        session_.rings.emplace(name, std::move(ring));
        session_.spans.emplace(name, pos);
    }

    const MonomialIdeal& lookup_ideal(const std::string& name, SourcePos pos) {
        auto it = session_.ideals.find(name);
        if (it == session_.ideals.end())
            throw ParseError(Errc::UndeclaredIdeal, pos, "unknown ideal '" + name + "'");
        return it->second;
    }

    void ideal_declaration() {
        SourcePos pos = cur_.pos;
        std::string name = expect_name();
        check_fresh(name, pos);
        expect_symbol("=");

        if (at_symbol("[")) {
            // [GEN {, GEN}] in RING
            advance();
            SourcePos gens_pos = cur_.pos;
            // The ring is named after the generator list, so scan the raw
            // generator tokens first and validate once it is known.
            std::vector<std::pair<SourcePos, std::vector<long long>>> raw;  // tuple or scalar
            std::vector<bool> is_tuple;
            auto scan_gen = [&]() {
                SourcePos gp = cur_.pos;
                if (at_symbol("(")) {
                    advance();
                    std::vector<long long> e;
                    e.push_back(expect_number());
                    while (at_symbol(",")) {
                        advance();
                        e.push_back(expect_number());
                    }
                    expect_symbol(")");
                    raw.emplace_back(gp, std::move(e));
                    is_tuple.push_back(true);
                } else if (cur_.kind == Tok::Number) {
                    raw.emplace_back(gp, std::vector<long long>{expect_number()});
                    is_tuple.push_back(false);
                } else {
                    fail({"number", "'('"});
                }
            };
            scan_gen();
            while (at_symbol(",")) {
                advance();
                scan_gen();
            }
            expect_symbol("]");
            if (!at_ident("in")) fail({"'in'"});
            advance();
            SourcePos ring_pos = cur_.pos;
            std::string ring_name = expect_name();
            expect_symbol(";");

            auto rit = session_.rings.find(ring_name);
            if (rit == session_.rings.end())
                throw ParseError(Errc::UndeclaredRing, ring_pos,
                                 "unknown ring '" + ring_name + "'");
            const RingPtr& ring = rit->second;

            std::vector<Monomial> gens;
            for (size_t i = 0; i < raw.size(); ++i) {
                const auto& [gp, e] = raw[i];
                if (ring->kind() == RingKind::PolynomialLocal) {
                    if (!is_tuple[i] || static_cast<int>(e.size()) != ring->dim())
                        throw ParseError(Errc::ArityMismatch, gp,
                                         "generator arity does not match ring " + ring->key());
                    gens.emplace_back(e);
                } else {
                    if (is_tuple[i])
                        throw ParseError(Errc::ArityMismatch, gp,
                                         "semigroup generators are single values");
                    gens.push_back(Monomial::semigroup_value(e[0]));
                }
            }
            try {
                session_.ideals.emplace(name, ideal_from_gens(ring, std::move(gens)));
            } catch (const Error& e) {
                throw ParseError(e.code(), gens_pos, e.what());
            }
            session_.ideal_ring_name.emplace(name, ring_name);
            session_.spans.emplace(name, pos);
            return;
        }

        if (cur_.kind == Tok::Ident) {
            // NAME + NAME {+ NAME}  |  NAME ^ NAT
            SourcePos first_pos = cur_.pos;
            std::string first = expect_name();
            if (at_symbol("^")) {
                advance();
                SourcePos npos = cur_.pos;
                long long n = expect_number();
                expect_symbol(";");
                const MonomialIdeal& base = lookup_ideal(first, first_pos);
                try {
                    session_.ideals.emplace(name, power(base, n));
                } catch (const Error& e) {
                    throw ParseError(e.code(), npos, e.what());
                }
                session_.ideal_ring_name.emplace(name, session_.ideal_ring_name.at(first));
                session_.spans.emplace(name, pos);
                return;
            }
            if (at_symbol("+")) {
                MonomialIdeal acc = lookup_ideal(first, first_pos);
                while (at_symbol("+")) {
                    advance();
                    SourcePos p = cur_.pos;
                    std::string next = expect_name();
                    try {
                        acc = sum(acc, lookup_ideal(next, p));
                    } catch (const Error& e) {
                        throw ParseError(e.code(), p, e.what());
                    }
                }
                expect_symbol(";");
                session_.ideals.emplace(name, std::move(acc));
                session_.ideal_ring_name.emplace(name, session_.ideal_ring_name.at(first));
                session_.spans.emplace(name, pos);
                return;
            }
            fail({"'^'", "'+'"});
        }
        fail({"'['", "name"});
    }

    Lexer lexer_;
    Token cur_;
    Session session_;
};

}  // namespace

ParseError::ParseError(Errc code, SourcePos pos, const std::string& msg,
                       std::vector<std::string> expected)
    : Error(code, render_message(pos, msg, expected)), pos_(pos), expected_(std::move(expected)) {}

Session parse_session(std::string_view text) {
    Parser parser(text);
    return parser.run();
}

}  // namespace reesmult
