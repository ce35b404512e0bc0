#include <cctype>
#include <optional>
#include <vector>

#include "acfq/errors.hpp"
#include "acfq/formula.hpp"

namespace acfq {

namespace {

enum class Tok {
    End, Ident, Integer, KwTrue, KwFalse, KwExists, KwForall, KwInfMany,
    Plus, Minus, Star, Caret, Eq, Neq, Amp, Pipe, Bang, Arrow, Iff,
    LParen, RParen, Dot
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) { next(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        next();
        return t;
    }

private:
    void error(const std::string& msg) const { throw SyntaxError(msg, line_, col_); }

    void next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
        tok_.line = line_;
        tok_.col = col_;
        tok_.text.clear();
        if (i_ >= s_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        char c = s_[i_];
        if (std::islower(static_cast<unsigned char>(c))) {
            std::string id;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
                id += s_[i_];
                advance();
            }
            if (id == "true")
                tok_.kind = Tok::KwTrue;
            else if (id == "false")
                tok_.kind = Tok::KwFalse;
            else {
                tok_.kind = Tok::Ident;
                tok_.text = id;
            }
            return;
        }
        if (std::isupper(static_cast<unsigned char>(c))) {
            std::string id;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
                id += s_[i_];
                advance();
            }
            if (id == "E")
                tok_.kind = Tok::KwExists;
            else if (id == "A")
                tok_.kind = Tok::KwForall;
            else if (id == "Einf")
                tok_.kind = Tok::KwInfMany;
            else
                error("unknown keyword '" + id + "' (quantifiers are E, A, Einf)");
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Tok::Integer;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                tok_.text += s_[i_];
                advance();
            }
            return;
        }
        switch (c) {
            case '+': tok_.kind = Tok::Plus; advance(); return;
            case '-':
                advance();
                if (i_ < s_.size() && s_[i_] == '>') {
                    advance();
                    tok_.kind = Tok::Arrow;
                } else {
                    tok_.kind = Tok::Minus;
                }
                return;
            case '*': tok_.kind = Tok::Star; advance(); return;
            case '^': tok_.kind = Tok::Caret; advance(); return;
            case '=': tok_.kind = Tok::Eq; advance(); return;
            case '!':
                advance();
                if (i_ < s_.size() && s_[i_] == '=') {
                    advance();
                    tok_.kind = Tok::Neq;
                } else {
                    tok_.kind = Tok::Bang;
                }
                return;
            case '&': tok_.kind = Tok::Amp; advance(); return;
            case '|': tok_.kind = Tok::Pipe; advance(); return;
            case '(': tok_.kind = Tok::LParen; advance(); return;
            case ')': tok_.kind = Tok::RParen; advance(); return;
            case '.': tok_.kind = Tok::Dot; advance(); return;
            case '<':
                advance();
                if (i_ + 1 < s_.size() + 1 && i_ < s_.size() && s_[i_] == '-') {
                    advance();
                    if (i_ < s_.size() && s_[i_] == '>') {
                        advance();
                        tok_.kind = Tok::Iff;
                        return;
                    }
                }
                error("expected '<->'");
                return;
            default:
                error(std::string("unexpected character '") + c + "'");
        }
    }

    void advance() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

// Recursive-descent parser over a token vector, so speculative atom parses
// can backtrack by index.
class Parser {
public:
    Parser(const std::string& text, const CoeffDomain& dom) : dom_(dom) {
        Lexer lx(text);
        for (;;) {
            Token t = lx.take();
            toks_.push_back(t);
            if (t.kind == Tok::End) break;
        }
    }

    FormulaPtr parse_formula_all() {
        FormulaPtr f = parse_iff();
        expect(Tok::End, "end of input");
        return f;
    }

    MultiPoly parse_poly_all() {
        MultiPoly p = parse_poly();
        expect(Tok::End, "end of input");
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool accept(Tok k) {
        if (!at(k)) return false;
        ++pos_;
        return true;
    }
    Token expect(Tok k, const std::string& what) {
        if (!at(k)) throw SyntaxError("expected " + what, peek().line, peek().col);
        return take();
    }

    FormulaPtr parse_iff() {
        FormulaPtr f = parse_imp();
        while (accept(Tok::Iff)) {
            FormulaPtr g = parse_imp();
            // a <-> b desugars to (!a | b) & (!b | a)
            f = f_and(f_or(f_not(f), g), f_or(f_not(g), f));
        }
        return f;
    }

    FormulaPtr parse_imp() {
        FormulaPtr f = parse_or();
        if (accept(Tok::Arrow)) {
            FormulaPtr g = parse_imp();  // right-associative
            return f_or(f_not(f), g);
        }
        return f;
    }

    FormulaPtr parse_or() {
        FormulaPtr f = parse_and();
        while (accept(Tok::Pipe)) f = f_or(f, parse_and());
        return f;
    }

    FormulaPtr parse_and() {
        FormulaPtr f = parse_unary();
        while (accept(Tok::Amp)) f = f_and(f, parse_unary());
        return f;
    }

    FormulaPtr parse_unary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Bang:
                take();
                return f_not(parse_unary());
            case Tok::KwTrue:
                take();
                return f_true();
            case Tok::KwFalse:
                take();
                return f_false();
            case Tok::KwExists:
            case Tok::KwForall:
            case Tok::KwInfMany:
                return parse_quant();
            case Tok::LParen: {
                // Ambiguous: '(' may open a parenthesized formula or the
                // first polynomial of an atom.  Try the atom reading first
                // and fall back on failure.
                std::size_t save = pos_;
                try {
                    return parse_atom();
                } catch (const SyntaxError&) {
                    pos_ = save;
                }
                take();  // '('
                FormulaPtr f = parse_iff();
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::Ident:
            case Tok::Integer:
            case Tok::Minus:
                return parse_atom();
            default:
                throw SyntaxError("expected a formula", t.line, t.col);
        }
    }

    FormulaPtr parse_quant() {
        Token q = take();
        Token v = expect(Tok::Ident, "a variable after the quantifier");
        for (const auto& active : scope_)
            if (active == v.text)
                throw ShadowingError("quantifier variable '" + v.text + "' shadows an enclosing binding",
                                     v.line, v.col);
        expect(Tok::Dot, "'.' after the quantified variable");
        scope_.push_back(v.text);
        FormulaPtr body = parse_unary();
        scope_.pop_back();
        FKind k = q.kind == Tok::KwExists ? FKind::Exists
                  : q.kind == Tok::KwForall ? FKind::Forall
                                            : FKind::InfMany;
        try {
            return make_quantifier(k, v.text, body);
        } catch (const PreconditionError& e) {
            throw ShadowingError(e.what(), v.line, v.col);
        }
    }

    FormulaPtr parse_atom() {
        MultiPoly lhs = parse_poly();
        Rel rel;
        if (accept(Tok::Eq))
            rel = Rel::Eq;
        else if (accept(Tok::Neq))
            rel = Rel::Neq;
        else
            throw SyntaxError("expected '=' or '!=' in atom", peek().line, peek().col);
        MultiPoly rhs = parse_poly();
        return f_atom(lhs - rhs, rel);
    }

    MultiPoly parse_poly() {
        bool neg = accept(Tok::Minus);
        MultiPoly p = parse_term();
        if (neg) p = -p;
        for (;;) {
            if (accept(Tok::Plus))
                p = p + parse_term();
            else if (accept(Tok::Minus))
                p = p - parse_term();
            else
                break;
        }
        return p;
    }

    MultiPoly parse_term() {
        MultiPoly p = parse_factor();
        while (accept(Tok::Star)) p = p * parse_factor();
        return p;
    }

    MultiPoly parse_factor() {
        MultiPoly b = parse_base();
        if (accept(Tok::Caret)) {
            Token e = expect(Tok::Integer, "an exponent");
            long exp = 0;
            try {
                exp = std::stol(e.text);
            } catch (const std::exception&) {
                throw SyntaxError("exponent out of range", e.line, e.col);
            }
            if (exp > 1000) throw SyntaxError("exponent out of range", e.line, e.col);
            return b.pow(static_cast<int>(exp));
        }
        return b;
    }

    MultiPoly parse_base() {
        const Token& t = peek();
        if (t.kind == Tok::Integer) {
            take();
            return MultiPoly::constant(dom_, Coeff::from_integer(dom_, mpz_class(t.text)));
        }
        if (t.kind == Tok::Ident) {
            take();
            return MultiPoly::variable(dom_, t.text);
        }
        if (t.kind == Tok::LParen) {
            take();
            MultiPoly p = parse_poly();
            expect(Tok::RParen, "')'");
            return p;
        }
        throw SyntaxError("expected a polynomial", t.line, t.col);
    }

    CoeffDomain dom_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<std::string> scope_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const CoeffDomain& dom) {
    Parser p(text, dom);
    return p.parse_formula_all();
}

MultiPoly parse_poly(const std::string& text, const CoeffDomain& dom) {
    Parser p(text, dom);
    return p.parse_poly_all();
}

}  // namespace acfq
