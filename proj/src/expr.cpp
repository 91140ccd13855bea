#include "cmf/expr.hpp"

#include <cctype>
#include <vector>

#include "cmf/errors.hpp"

namespace cmf {

namespace {

struct Token {
    enum Kind { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
    int line, col;
};

std::vector<Token> lex(const std::string& src, int line) {
    std::vector<Token> out;
    int col = 1;
    size_t i = 0;
    auto push = [&](Token::Kind k, std::string t, int c) { out.push_back({k, std::move(t), line, c}); };
    while (i < src.size()) {
        char ch = src[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++col;
            ++i;
            continue;
        }
        int c0 = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                num += src[i];
                ++i;
                ++col;
            }
            push(Token::Num, num, c0);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string id;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                id += src[i];
                ++i;
                ++col;
            }
            push(Token::Ident, id, c0);
            continue;
        }
        switch (ch) {
            case '+': push(Token::Plus, "+", c0); break;
            case '-': push(Token::Minus, "-", c0); break;
            case '*': push(Token::Star, "*", c0); break;
            case '/': push(Token::Slash, "/", c0); break;
            case '^': push(Token::Caret, "^", c0); break;
            case '(': push(Token::LParen, "(", c0); break;
            case ')': push(Token::RParen, ")", c0); break;
            default:
                throw ParseError("SyntaxError", std::string("unexpected character '") + ch + "'",
                                 line, c0);
        }
        ++i;
        ++col;
    }
    out.push_back({Token::End, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, const VarList& vars) : toks_(std::move(toks)), vars_(vars) {}

    MPoly run() {
        MPoly p = expr();
        if (cur().kind != Token::End)
            throw ParseError("SyntaxError", "unexpected trailing input '" + cur().text + "'",
                             cur().line, cur().col);
        return p;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    void advance() { ++pos_; }

    MPoly expr() {
        MPoly p = term();
        while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
            bool minus = cur().kind == Token::Minus;
            advance();
            MPoly q = term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    MPoly term() {
        MPoly p = factor();
        while (cur().kind == Token::Star || cur().kind == Token::Slash) {
            bool div = cur().kind == Token::Slash;
            Token op = cur();
            advance();
            MPoly q = factor();
            if (div) {
                if (!q.isConstant())
                    throw ParseError("SyntaxError", "division by a non-constant expression",
                                     op.line, op.col);
                Rat d = q.constantValue();
                if (d.isZero()) throw ParseError("DivisionByZero", "division by zero", op.line, op.col);
                p = p.scaled(d.inv());
            } else {
                p = p * q;
            }
        }
        return p;
    }

    MPoly factor() {
        if (cur().kind == Token::Plus) {
            advance();
            return factor();
        }
        if (cur().kind == Token::Minus) {
            advance();
            return -factor();
        }
        return power();
    }

    MPoly power() {
        MPoly base = atom();
        while (cur().kind == Token::Caret) {
            advance();
            if (cur().kind != Token::Num)
                throw ParseError("SyntaxError", "exponent must be an unsigned integer literal",
                                 cur().line, cur().col);
            long e = 0;
            for (char ch : cur().text) {
                e = e * 10 + (ch - '0');
                if (e > 10000)
                    throw ParseError("SyntaxError", "exponent too large", cur().line, cur().col);
            }
            advance();
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    MPoly atom() {
        const Token& t = cur();
        switch (t.kind) {
            case Token::Num: {
                advance();
                return MPoly::constant(vars_, Rat(mpz_class(t.text)));
            }
            case Token::Ident: {
                bool known = false;
                for (const auto& v : vars_)
                    if (v == t.text) known = true;
                if (!known)
                    throw ParseError("UnknownVariable", "unknown variable '" + t.text + "'", t.line,
                                     t.col);
                advance();
                return MPoly::var(vars_, t.text);
            }
            case Token::LParen: {
                advance();
                MPoly p = expr();
                if (cur().kind != Token::RParen)
                    throw ParseError("SyntaxError", "expected ')'", cur().line, cur().col);
                advance();
                return p;
            }
            default:
                throw ParseError("SyntaxError", "expected a number, variable, or '('", t.line,
                                 t.col);
        }
    }

    std::vector<Token> toks_;
    const VarList& vars_;
    size_t pos_ = 0;
};

} // namespace

MPoly parseExpression(const std::string& text, const VarList& vars, int line) {
    return Parser(lex(text, line), vars).run();
}

Rat parseRationalExpr(const std::string& text, int line) {
    MPoly p = parseExpression(text, VarList{}, line);
    if (!p.isConstant()) fail("SyntaxError", "expected a constant expression");
    return p.constantValue();
}

} // namespace cmf
