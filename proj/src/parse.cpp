#include "polyfact/parse.hpp"

#include <cctype>
#include <functional>
#include <optional>

namespace polyfact {

namespace {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            tok_ = {Tok::end, "", start};
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_])))
                num += src_[i_++];
            // A slash directly between digit runs is a rational literal.
            std::size_t save = i_;
            while (save < src_.size() && std::isspace(static_cast<unsigned char>(src_[save])))
                ++save;
            if (save < src_.size() && src_[save] == '/' && save + 1 < src_.size()) {
                std::size_t d = save + 1;
                while (d < src_.size() && std::isspace(static_cast<unsigned char>(src_[d]))) ++d;
                if (d < src_.size() && std::isdigit(static_cast<unsigned char>(src_[d]))) {
                    num += '/';
                    i_ = d;
                    while (i_ < src_.size() &&
                           std::isdigit(static_cast<unsigned char>(src_[i_])))
                        num += src_[i_++];
                }
            }
            tok_ = {Tok::number, num, start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (i_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[i_])))
                id += src_[i_++];
            // Blade names: a bare "e" directly followed by digits.
            if (id == "e" && i_ < src_.size() &&
                std::isdigit(static_cast<unsigned char>(src_[i_]))) {
                while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_])))
                    id += src_[i_++];
            }
            tok_ = {Tok::ident, id, start};
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Tok::plus, "+", start}; return;
            case '-': tok_ = {Tok::minus, "-", start}; return;
            case '*': tok_ = {Tok::star, "*", start}; return;
            case '^': tok_ = {Tok::caret, "^", start}; return;
            case '(': tok_ = {Tok::lparen, "(", start}; return;
            case ')': tok_ = {Tok::rparen, ")", start}; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token tok_{Tok::end, "", 0};
};

template <class T>
class Parser {
public:
    using UnitLookup = std::function<std::optional<T>(const std::string&)>;

    Parser(const std::string& src, UnitLookup units)
        : lex_(src), units_(std::move(units)) {}

    Polynomial<T> parse() {
        Polynomial<T> p = expr();
        if (lex_.peek().kind != Tok::end)
            throw ParseError("trailing input", lex_.peek().pos);
        return p;
    }

private:
    Polynomial<T> expr() {
        bool neg = false;
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            neg = true;
        } else if (lex_.peek().kind == Tok::plus) {
            lex_.take();
        }
        Polynomial<T> acc = term();
        if (neg) acc = -acc;
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            bool minus = lex_.take().kind == Tok::minus;
            Polynomial<T> rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial<T> term() {
        Polynomial<T> acc = power();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::star) {
                lex_.take();
                acc = acc * power();
            } else if (k == Tok::number || k == Tok::ident || k == Tok::lparen) {
                acc = acc * power();  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    Polynomial<T> power() {
        Polynomial<T> base = atom();
        while (lex_.peek().kind == Tok::caret) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Tok::number || e.text.find('/') != std::string::npos)
                throw ParseError("exponent must be a nonnegative integer", e.pos);
            int n = std::stoi(e.text);
            Polynomial<T> r = Polynomial<T>::one();
            for (int i = 0; i < n; ++i) r = r * base;
            base = r;
        }
        return base;
    }

    Polynomial<T> atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::number:
                return Polynomial<T>(
                    AlgebraTraits<T>::from_rational(Rational::from_string(t.text)));
            case Tok::ident: {
                if (t.text == "t")
                    return Polynomial<T>::monomial(
                        AlgebraTraits<T>::from_rational(Rational(1)), 1);
                std::optional<T> u = units_(t.text);
                if (!u)
                    throw ParseError("unit symbol '" + t.text +
                                     "' not in this algebra", t.pos);
                return Polynomial<T>(*u);
            }
            case Tok::lparen: {
                Polynomial<T> inner = expr();
                Token close = lex_.take();
                if (close.kind != Tok::rparen)
                    throw ParseError("expected ')'", close.pos);
                return inner;
            }
            case Tok::minus:
                return -atom();
            default:
                throw ParseError("expected a term", t.pos);
        }
    }

    Lexer lex_;
    UnitLookup units_;
};

std::optional<MultiVector> clifford_unit(const Signature& sig, const std::string& id) {
    if (id.size() < 2 || id[0] != 'e') return std::nullopt;
    BladeMask m = 0;
    for (std::size_t i = 1; i < id.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return std::nullopt;
        int g = id[i] - '0';
        if (g == 0) {
            if (id.size() != 2) return std::nullopt;
            return MultiVector(sig, Rational(1));  // e0 alone is the unit
        }
        if (g > sig.n()) return std::nullopt;
        BladeMask bit = BladeMask(1) << (g - 1);
        if (m & bit) return std::nullopt;  // repeated index
        m |= bit;
    }
    return MultiVector::blade(sig, m);
}

} // namespace

Polynomial<Quaternion> parse_quaternion_poly(const std::string& text) {
    Parser<Quaternion> p(text, [](const std::string& id) -> std::optional<Quaternion> {
        if (id == "i") return Quaternion::unit_i();
        if (id == "j") return Quaternion::unit_j();
        if (id == "k") return Quaternion::unit_k();
        return std::nullopt;
    });
    return p.parse();
}

Polynomial<SplitQuaternion> parse_split_poly(const std::string& text) {
    Parser<SplitQuaternion> p(text, [](const std::string& id) -> std::optional<SplitQuaternion> {
        if (id == "is") return SplitQuaternion::unit_i();
        if (id == "js") return SplitQuaternion::unit_j();
        if (id == "ks") return SplitQuaternion::unit_k();
        return std::nullopt;
    });
    return p.parse();
}

Polynomial<DualQuaternion> parse_dual_quaternion_poly(const std::string& text) {
    Parser<DualQuaternion> p(text, [](const std::string& id) -> std::optional<DualQuaternion> {
        if (id == "i") return DualQuaternion::unit_i();
        if (id == "j") return DualQuaternion::unit_j();
        if (id == "k") return DualQuaternion::unit_k();
        if (id == "eps") return DualQuaternion::unit_eps();
        return std::nullopt;
    });
    return p.parse();
}

Polynomial<MultiVector> parse_clifford_poly(const std::string& text, const Signature& sig) {
    Parser<MultiVector> p(text, [sig](const std::string& id) -> std::optional<MultiVector> {
        return clifford_unit(sig, id);
    });
    return p.parse();
}

RealPolynomial parse_real_poly(const std::string& text) {
    Parser<Rational> p(text, [](const std::string&) -> std::optional<Rational> {
        return std::nullopt;
    });
    return p.parse();
}

} // namespace polyfact
