#pragma once

// Text format for polynomial mappings:
//
//   # comment to end of line
//   vars x1 x2 x3;
//   x1; x2; x1*x2*x3
//
// One header declaring the source variables, then one polynomial per
// component separated by ';' (a trailing ';' is allowed). Polynomials use
// integer literals, declared variable names, + - * ^ and parentheses.
// Exponents must be positive integer literals.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "facon/algebra.hpp"
#include "facon/errors.hpp"

namespace facon {

/// F = (F_1, ..., F_n) : C^n -> C^n with components over the source variables.
struct PolynomialMapping {
    std::size_t n = 0;
    std::vector<MultiPoly> components;
    std::string source;

    /// Canonical text; parsing it again yields identical components.
    std::string to_string() const {
        std::string out = "vars";
        for (std::size_t i = 0; i < n; ++i) out += " " + variable_name(Space::Ambient, i);
        out += ";";
        for (const auto& c : components) out += " " + c.to_string() + ";";
        return out;
    }
};

/// Largest exponent literal accepted after '^'.
inline constexpr std::uint32_t kMaxExponent = 64;

namespace detail {

enum class TokenKind { Ident, Integer, Plus, Minus, Star, Caret, LParen, RParen, Semicolon, End };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

inline std::string describe(const Token& t) {
    switch (t.kind) {
    case TokenKind::End: return "end of input";
    case TokenKind::Ident: return "identifier '" + t.text + "'";
    case TokenKind::Integer: return "integer " + t.text;
    default: return "'" + t.text + "'";
    }
}

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1, column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
        }
    };
    while (i < text.size()) {
        const unsigned char ch = static_cast<unsigned char>(text[i]);
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
            advance(1);
            continue;
        }
        const std::size_t tl = line, tc = column;
        if (std::isalpha(ch) || ch == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            tokens.push_back({TokenKind::Ident, std::string(text.substr(i, j - i)), tl, tc});
            advance(j - i);
            continue;
        }
        if (std::isdigit(ch)) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            tokens.push_back({TokenKind::Integer, std::string(text.substr(i, j - i)), tl, tc});
            advance(j - i);
            continue;
        }
        TokenKind kind;
        switch (ch) {
        case '+': kind = TokenKind::Plus; break;
        case '-': kind = TokenKind::Minus; break;
        case '*': kind = TokenKind::Star; break;
        case '^': kind = TokenKind::Caret; break;
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        case ';': kind = TokenKind::Semicolon; break;
        default: {
            if (ch >= 0x80 || !std::isprint(ch)) throw ParseError(tl, tc, "unexpected non-ASCII or control byte");
            throw ParseError(tl, tc, std::string("unexpected character '") + static_cast<char>(ch) + "'");
        }
        }
        tokens.push_back({kind, std::string(1, static_cast<char>(ch)), tl, tc});
        advance(1);
    }
    tokens.push_back({TokenKind::End, "", line, column});
    return tokens;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, Space space, std::vector<std::string> names)
        : tokens_(std::move(tokens)), space_(space), names_(std::move(names)) {}

    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    bool accept(TokenKind kind) {
        if (peek().kind != kind) return false;
        take();
        return true;
    }

    const Token& expect(TokenKind kind, const char* what) {
        if (peek().kind != kind) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
        return take();
    }

    [[noreturn]] void fail(const Token& at, const std::string& message) const {
        throw ParseError(at.line, at.column, message);
    }

    void set_names(std::vector<std::string> names) { names_ = std::move(names); }

    MultiPoly sum() {
        MultiPoly acc = product();
        while (true) {
            if (accept(TokenKind::Plus)) {
                acc += product();
            } else if (accept(TokenKind::Minus)) {
                acc -= product();
            } else {
                return acc;
            }
        }
    }

private:
    MultiPoly product() {
        MultiPoly acc = unary();
        while (accept(TokenKind::Star)) acc *= unary();
        return acc;
    }

    MultiPoly unary() {
        DepthGuard guard(*this);
        if (accept(TokenKind::Minus)) return -unary();
        if (accept(TokenKind::Plus)) return unary();
        return power();
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > kMaxNesting) parser.fail(parser.peek(), "expression nested too deeply");
        }
        ~DepthGuard() { --parser.depth_; }
        Parser& parser;
    };

    static constexpr std::size_t kMaxNesting = 512;

    MultiPoly power() {
        MultiPoly base = primary();
        if (!accept(TokenKind::Caret)) return base;
        const Token& tok = peek();
        if (tok.kind != TokenKind::Integer) fail(tok, "exponent must be a positive integer literal");
        take();
        const std::string digits = tok.text.substr(std::min(tok.text.find_first_not_of('0'), tok.text.size()));
        if (digits.empty()) fail(tok, "exponent must be a positive integer literal");
        if (digits.size() > 3 || std::stoul(digits) > kMaxExponent) {
            fail(tok, "exponent exceeds the limit of " + std::to_string(kMaxExponent));
        }
        return base.pow(static_cast<std::uint32_t>(std::stoul(digits)));
    }

    MultiPoly primary() {
        const Token& tok = peek();
        switch (tok.kind) {
        case TokenKind::Integer:
            take();
            return MultiPoly::constant(space_, names_.size(), BigRational(BigInt(tok.text, 10)));
        case TokenKind::Ident: {
            take();
            for (std::size_t i = 0; i < names_.size(); ++i) {
                if (names_[i] == tok.text) return MultiPoly::variable(space_, names_.size(), i);
            }
            fail(tok, "unknown variable " + tok.text);
        }
        case TokenKind::LParen: {
            take();
            MultiPoly inner = sum();
            expect(TokenKind::RParen, "')'");
            return inner;
        }
        default: fail(tok, "expected a number, variable or '(', found " + describe(tok));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
    Space space_;
    std::vector<std::string> names_;
};

} // namespace detail

/// Parses a mapping file. Throws ParseError carrying line and column.
inline PolynomialMapping parse_mapping(std::string_view text) {
    detail::Parser p(detail::tokenize(text), Space::Ambient, {});
    const detail::Token& head = p.peek();
    if (head.kind != detail::TokenKind::Ident || head.text != "vars") {
        p.fail(head, "expected 'vars' header, found " + detail::describe(head));
    }
    p.take();
    std::vector<std::string> names;
    while (p.peek().kind == detail::TokenKind::Ident) {
        const detail::Token& t = p.take();
        for (const auto& existing : names) {
            if (existing == t.text) p.fail(t, "variable " + t.text + " declared twice");
        }
        names.push_back(t.text);
    }
    if (names.empty()) p.fail(p.peek(), "expected at least one variable name after 'vars'");
    p.expect(detail::TokenKind::Semicolon, "';' after variable list");
    p.set_names(names);

    PolynomialMapping mapping;
    mapping.n = names.size();
    mapping.source = std::string(text);
    while (p.peek().kind != detail::TokenKind::End) {
        mapping.components.push_back(p.sum());
        if (p.peek().kind == detail::TokenKind::End) break;
        p.expect(detail::TokenKind::Semicolon, "';' or operator");
    }
    if (mapping.components.size() != mapping.n) {
        const auto& end = p.peek();
        throw ParseError(end.line, end.column,
                         "expected " + std::to_string(mapping.n) + " components, found " +
                             std::to_string(mapping.components.size()));
    }
    return mapping;
}

/// Parses a single polynomial in canonical form over `space` (variables x1.., c1.. or a1..).
inline MultiPoly parse_polynomial(std::string_view text, Space space, std::size_t nvars) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back(variable_name(space, i));
    detail::Parser p(detail::tokenize(text), space, names);
    MultiPoly out = p.sum();
    if (p.peek().kind != detail::TokenKind::End) {
        p.fail(p.peek(), "unexpected " + detail::describe(p.peek()));
    }
    return out;
}

} // namespace facon
