#include "syzrank/parse.hpp"

#include <cctype>
#include <optional>

namespace syzrank {
namespace {

struct Token {
    enum class Kind { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::size_t offset;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::size_t at = pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::Kind::End, at, ""};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t b = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            tok_ = {Token::Kind::Int, at, s_.substr(b, pos_ - b)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t b = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Kind::Ident, at, s_.substr(b, pos_ - b)};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': tok_ = {Token::Kind::Plus, at, "+"}; return;
            case '-': tok_ = {Token::Kind::Minus, at, "-"}; return;
            case '*': tok_ = {Token::Kind::Star, at, "*"}; return;
            case '^': tok_ = {Token::Kind::Caret, at, "^"}; return;
            case '/': tok_ = {Token::Kind::Slash, at, "/"}; return;
            case '(': tok_ = {Token::Kind::LParen, at, "("}; return;
            case ')': tok_ = {Token::Kind::RParen, at, ")"}; return;
            default: throw parse_error(std::string("unexpected character '") + c + "'", at);
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    Token tok_{Token::Kind::End, 0, ""};
};

using QF = RationalField;
using QPoly = Polynomial<QF>;

class PolyParser {
public:
    PolyParser(const std::string& text, RingPtr<QF> ring)
        : lex_(text), ring_(std::move(ring)) {}

    QPoly run() {
        QPoly f = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End) throw parse_error("syntax error", t.offset);
        return f;
    }

private:
    QPoly expr() {
        QPoly f = term();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::Plus) {
                lex_.take();
                f = f + term();
            } else if (t.kind == Token::Kind::Minus) {
                lex_.take();
                f = f - term();
            } else {
                return f;
            }
        }
    }

    QPoly term() {
        QPoly f = factor();
        while (lex_.peek().kind == Token::Kind::Star) {
            lex_.take();
            f = f * factor();
        }
        return f;
    }

    QPoly factor() {
        bool neg = false;
        while (lex_.peek().kind == Token::Kind::Minus || lex_.peek().kind == Token::Kind::Plus) {
            if (lex_.take().kind == Token::Kind::Minus) neg = !neg;
        }
        QPoly f = primary();
        if (lex_.peek().kind == Token::Kind::Caret) {
            lex_.take();
            Token e = lex_.peek();
            if (e.kind != Token::Kind::Int)
                throw parse_error("exponent must be a non-negative integer literal", e.offset);
            lex_.take();
            unsigned long v;
            try {
                v = std::stoul(e.text);
            } catch (const std::exception&) {
                throw parse_error("exponent out of range", e.offset);
            }
            if (v > 100000) throw parse_error("exponent out of range", e.offset);
            f = f.pow(static_cast<std::uint32_t>(v));
        }
        return neg ? f.scaled(QF{}.from_int(-1)) : f;
    }

    QPoly primary() {
        Token t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::Int: {
                lex_.take();
                Integer num(t.text);
                if (lex_.peek().kind == Token::Kind::Slash) {
                    lex_.take();
                    Token d = lex_.peek();
                    if (d.kind != Token::Kind::Int)
                        throw parse_error("expected integer denominator", d.offset);
                    lex_.take();
                    Integer den(d.text);
                    if (den == 0) throw parse_error("zero denominator", d.offset);
                    return QPoly::constant(ring_, QF{}.make(num, den));
                }
                return QPoly::constant(ring_, QF{}.from_integer(num));
            }
            case Token::Kind::Ident: {
                lex_.take();
                for (std::size_t i = 0; i < ring_->arity(); ++i)
                    if (ring_->variable(i) == t.text) return QPoly::variable(ring_, i);
                throw parse_error("unknown identifier '" + t.text + "'", t.offset);
            }
            case Token::Kind::LParen: {
                lex_.take();
                QPoly f = expr();
                Token r = lex_.peek();
                if (r.kind != Token::Kind::RParen)
                    throw parse_error("expected ')'", r.offset);
                lex_.take();
                return f;
            }
            default:
                throw parse_error("syntax error", t.offset);
        }
    }

    Lexer lex_;
    RingPtr<QF> ring_;
};

Rational parse_rational_token(Lexer& lex) {
    bool neg = false;
    while (lex.peek().kind == Token::Kind::Minus || lex.peek().kind == Token::Kind::Plus) {
        if (lex.take().kind == Token::Kind::Minus) neg = !neg;
    }
    Token t = lex.peek();
    if (t.kind != Token::Kind::Int) throw parse_error("expected a rational literal", t.offset);
    lex.take();
    Integer num(t.text);
    Integer den(1);
    if (lex.peek().kind == Token::Kind::Slash) {
        lex.take();
        Token d = lex.peek();
        if (d.kind != Token::Kind::Int) throw parse_error("expected integer denominator", d.offset);
        lex.take();
        den = Integer(d.text);
        if (den == 0) throw parse_error("zero denominator", d.offset);
    }
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

}  // namespace

Polynomial<RationalField> parse_polynomial(const std::string& text,
                                           const RingPtr<RationalField>& ring) {
    return PolyParser(text, ring).run();
}

ParsedPoint parse_point(const std::string& text) {
    std::size_t b = 0;
    while (b < text.size() && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    if (b >= text.size()) throw parse_error("empty point", b);
    char open = text[b];
    if (open != '[' && open != '(')
        throw parse_error("point must start with '[' or '('", b);
    char close = open == '[' ? ']' : ')';
    char sep = open == '[' ? ':' : ',';
    std::size_t e = text.find_last_not_of(" \t\r\n");
    if (text[e] != close) throw parse_error(std::string("point must end with '") + close + "'", e);

    ParsedPoint p;
    p.kind = open == '[' ? PointKind::Projective : PointKind::Affine;
    std::string body = text.substr(b + 1, e - b - 1);
    std::size_t start = 0, base = b + 1;
    for (;;) {
        std::size_t cut = body.find(sep, start);
        std::string piece = body.substr(start, cut == std::string::npos ? cut : cut - start);
        Lexer lex(piece);
        Rational q;
        try {
            q = parse_rational_token(lex);
        } catch (const parse_error& err) {
            throw parse_error("bad coordinate", base + start + err.offset);
        }
        if (lex.peek().kind != Token::Kind::End)
            throw parse_error("bad coordinate", base + start + lex.peek().offset);
        p.coords.push_back(std::move(q));
        if (cut == std::string::npos) break;
        start = cut + 1;
    }
    if (p.kind == PointKind::Projective) {
        bool all_zero = true;
        for (const auto& c : p.coords)
            if (c != 0) all_zero = false;
        if (all_zero) throw parse_error("zero projective vector", b);
    }
    return p;
}

}  // namespace syzrank
