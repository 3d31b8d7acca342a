#include "mvplan/ltl_parser.hpp"

#include "mvplan/error.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace mvplan {

namespace {

enum class Tok { Ident, True, False, Not, Next, Eventually, Always, Until, And, Or, Implies,
                 LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::string describe(const Token& t) {
    if (t.kind == Tok::End) {
        return "end of input";
    }
    return "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        i += n;
        col += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token tok{Tok::End, std::string(1, c), line, col};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            tok.text = std::string(text.substr(i, j - i));
            if (tok.text == "true") {
                tok.kind = Tok::True;
            } else if (tok.text == "false") {
                tok.kind = Tok::False;
            } else if (tok.text == "X") {
                tok.kind = Tok::Next;
            } else if (tok.text == "F") {
                tok.kind = Tok::Eventually;
            } else if (tok.text == "G") {
                tok.kind = Tok::Always;
            } else if (tok.text == "U") {
                tok.kind = Tok::Until;
            } else {
                tok.kind = Tok::Ident;
            }
            out.push_back(tok);
            advance(j - i);
            continue;
        }
        switch (c) {
        case '!': tok.kind = Tok::Not; break;
        case '&': tok.kind = Tok::And; break;
        case '|': tok.kind = Tok::Or; break;
        case '(': tok.kind = Tok::LParen; break;
        case ')': tok.kind = Tok::RParen; break;
        case '-':
            if (i + 1 < text.size() && text[i + 1] == '>') {
                tok.kind = Tok::Implies;
                tok.text = "->";
                out.push_back(tok);
                advance(2);
                continue;
            }
            throw ParseError("expected '->'", line, col);
        default:
            throw ParseError("undeclared character '" + std::string(1, c) + "'", line, col);
        }
        out.push_back(tok);
        advance(1);
    }
    out.push_back(Token{Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Formula parse() {
        Formula f = formula();
        if (peek().kind != Tok::End) {
            fail("unexpected " + describe(peek()));
        }
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, peek().line, peek().column);
    }

    Formula formula() {
        Formula lhs = disjunction();
        if (peek().kind == Tok::Implies) {
            take();
            return Formula::implication(std::move(lhs), formula());
        }
        return lhs;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (peek().kind == Tok::Or) {
            take();
            f = Formula::disjunction(std::move(f), conjunction());
        }
        return f;
    }

    Formula conjunction() {
        Formula f = until();
        while (peek().kind == Tok::And) {
            take();
            f = Formula::conjunction(std::move(f), until());
        }
        return f;
    }

    Formula until() {
        Formula lhs = factor();
        if (peek().kind == Tok::Until) {
            take();
            return Formula::until(std::move(lhs), until());
        }
        return lhs;
    }

    Formula factor() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Not: take(); return Formula::negation(factor());
        case Tok::Next: take(); return Formula::next(factor());
        case Tok::Eventually: take(); return Formula::eventually(factor());
        case Tok::Always: take(); return Formula::always(factor());
        case Tok::True: take(); return Formula::top();
        case Tok::False: take(); return Formula::bottom();
        case Tok::Ident: return Formula::atom(take().text);
        case Tok::LParen: {
            take();
            Formula f = formula();
            if (peek().kind != Tok::RParen) {
                fail("expected ')' but found " + describe(peek()));
            }
            take();
            return f;
        }
        default:
            fail("expected a formula but found " + describe(t));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

Formula parse_formula(std::string_view text) {
    return Parser(tokenize(text)).parse();
}

} // namespace mvplan
