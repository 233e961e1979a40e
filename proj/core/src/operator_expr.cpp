#include "mellin/operator_expr.hpp"

#include <cctype>
#include <sstream>

#include "mellin/errors.hpp"

namespace mellin {

namespace {

struct Token {
    enum class Kind { Plus, Minus, Star, Caret, Slash, LParen, RParen, Z, T, D, Digits, End };
    Kind kind;
    std::size_t offset;
    std::string text;  // for Digits
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::size_t at = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Token::Kind::End, at, ""};
            return;
        }
        const char c = text_[pos_];
        auto single = [&](Token::Kind k) {
            ++pos_;
            current_ = {k, at, std::string(1, c)};
        };
        switch (c) {
            case '+': single(Token::Kind::Plus); return;
            case '-': single(Token::Kind::Minus); return;
            case '*': single(Token::Kind::Star); return;
            case '^': single(Token::Kind::Caret); return;
            case '/': single(Token::Kind::Slash); return;
            case '(': single(Token::Kind::LParen); return;
            case ')': single(Token::Kind::RParen); return;
            case 'z': single(Token::Kind::Z); return;
            case 'T': single(Token::Kind::T); return;
            case 'd': single(Token::Kind::D); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
                ++end;
            current_ = {Token::Kind::Digits, at, text_.substr(pos_, end - pos_)};
            pos_ = end;
            return;
        }
        throw SyntaxError(at, {"z", "T", "d", "number", "(", ")", "+", "-", "*", "^"},
                          "unexpected character '" + std::string(1, c) + "' at offset " +
                              std::to_string(at));
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_{Token::Kind::End, 0, ""};
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    OperatorExpr run() {
        OperatorExpr e = expr();
        expect(Token::Kind::End, {"+", "-", "*", "end of input"});
        return e;
    }

  private:
    [[noreturn]] void fail(const Token& t, std::vector<std::string> expected) {
        std::ostringstream os;
        os << "syntax error at offset " << t.offset << ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i)
            os << (i ? " | " : "") << expected[i];
        throw SyntaxError(t.offset, std::move(expected), os.str());
    }

    void expect(Token::Kind kind, std::vector<std::string> names) {
        if (lex_.peek().kind != kind) fail(lex_.peek(), std::move(names));
        lex_.take();
    }

    OperatorExpr expr() {
        OperatorExpr lhs = term();
        for (;;) {
            const Token::Kind k = lex_.peek().kind;
            if (k != Token::Kind::Plus && k != Token::Kind::Minus) break;
            lex_.take();
            OperatorExpr rhs = term();
            lhs = OperatorExpr::binary(k == Token::Kind::Plus ? OperatorExpr::Node::Add
                                                              : OperatorExpr::Node::Sub,
                                       std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    OperatorExpr term() {
        OperatorExpr lhs = factor();
        while (lex_.peek().kind == Token::Kind::Star) {
            lex_.take();
            lhs = OperatorExpr::binary(OperatorExpr::Node::Mul, std::move(lhs), factor());
        }
        return lhs;
    }

    long parseIntegerToken() {
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().kind != Token::Kind::Digits)
            fail(lex_.peek(), {"integer"});
        const Token t = lex_.take();
        const long value = std::stol(t.text);
        return neg ? -value : value;
    }

    OperatorExpr factor() {
        OperatorExpr base = atom();
        if (lex_.peek().kind != Token::Kind::Caret) return base;
        lex_.take();
        const long e = parseIntegerToken();
        // Negative z-powers canonicalize through the zinv atom.
        if (base.node == OperatorExpr::Node::Atom && base.atom == OperatorExpr::AtomKind::Z &&
            e < 0) {
            OperatorExpr zinv = OperatorExpr::atomNode(OperatorExpr::AtomKind::ZInv);
            if (e == -1) return zinv;
            return OperatorExpr::power(std::move(zinv), static_cast<int>(-e));
        }
        if (e == 1) return base;
        return OperatorExpr::power(std::move(base), static_cast<int>(e));
    }

    OperatorExpr atom() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::Z:
                lex_.take();
                return OperatorExpr::atomNode(OperatorExpr::AtomKind::Z);
            case Token::Kind::T:
                lex_.take();
                return OperatorExpr::atomNode(OperatorExpr::AtomKind::T);
            case Token::Kind::D:
                lex_.take();
                return OperatorExpr::atomNode(OperatorExpr::AtomKind::D);
            case Token::Kind::LParen: {
                lex_.take();
                OperatorExpr e = expr();
                expect(Token::Kind::RParen, {")"});
                return e;
            }
            case Token::Kind::Minus:  // negative numeric literal
            case Token::Kind::Digits:
                return numberAtom();
            default:
                fail(t, {"z", "T", "d", "number", "("});
        }
    }

    OperatorExpr numberAtom() {
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().kind != Token::Kind::Digits) fail(lex_.peek(), {"number"});
        const Token num = lex_.take();
        Rational value = Rational::parse(num.text);
        if (lex_.peek().kind == Token::Kind::Slash) {
            lex_.take();
            if (lex_.peek().kind != Token::Kind::Digits) fail(lex_.peek(), {"integer"});
            const Token den = lex_.take();
            const Rational d = Rational::parse(den.text);
            if (d.isZero())
                throw SyntaxError(den.offset, {"nonzero integer"},
                                  "zero denominator at offset " + std::to_string(den.offset));
            value = value / d;
        }
        return OperatorExpr::number(neg ? -value : value);
    }

    Lexer lex_;
};

DiffOp elaborateD(const OperatorExpr& e) {
    using Node = OperatorExpr::Node;
    using AtomKind = OperatorExpr::AtomKind;
    switch (e.node) {
        case Node::Atom:
            switch (e.atom) {
                case AtomKind::Z: return DiffOp::term(Rational(1), 1, 0, Presentation::D);
                case AtomKind::ZInv: return DiffOp::term(Rational(1), -1, 0, Presentation::D);
                case AtomKind::T: return DiffOp::term(Rational(1), 1, 1, Presentation::D);
                case AtomKind::D: return DiffOp::term(Rational(1), 0, 1, Presentation::D);
                default: return DiffOp::constant(e.value, Presentation::D);
            }
        case Node::Add: return elaborateD(e.children[0]) + elaborateD(e.children[1]);
        case Node::Sub: return elaborateD(e.children[0]) - elaborateD(e.children[1]);
        case Node::Mul: return mulDiffOp(elaborateD(e.children[0]), elaborateD(e.children[1]));
        case Node::Pow: {
            const DiffOp base = elaborateD(e.children[0]);
            if (e.exponent >= 0) return powDiffOp(base, static_cast<unsigned>(e.exponent));
            // Negative powers exist only for invertible monomials c*z^r.
            if (base.terms().size() != 1 || base.terms().begin()->first.second != 0)
                throw Error("negative power of a non-invertible operator");
            const auto& [key, c] = *base.terms().begin();
            return DiffOp::term(c.inverse().pow(-e.exponent), key.first * e.exponent,
                                0, Presentation::D);
        }
    }
    throw MixedNonsenseError("unreachable expression node");
}

int precedenceOf(const OperatorExpr& e) {
    switch (e.node) {
        case OperatorExpr::Node::Add:
        case OperatorExpr::Node::Sub: return 0;
        case OperatorExpr::Node::Mul: return 1;
        case OperatorExpr::Node::Pow: return 2;
        default: return 3;
    }
}

void printTo(std::ostringstream& os, const OperatorExpr& e, int parentPrec) {
    const int prec = precedenceOf(e);
    // A negative literal re-parses as an atom only where an atom is expected;
    // under a tighter parent it needs parentheses.
    const bool negativeLiteral = e.node == OperatorExpr::Node::Atom &&
                                 e.atom == OperatorExpr::AtomKind::Number &&
                                 e.value.sign() < 0;
    const bool parens = prec < parentPrec || (negativeLiteral && parentPrec > 0);
    if (parens) os << "(";
    switch (e.node) {
        case OperatorExpr::Node::Add:
            printTo(os, e.children[0], 0);
            os << " + ";
            printTo(os, e.children[1], 1);
            break;
        case OperatorExpr::Node::Sub:
            printTo(os, e.children[0], 0);
            os << " - ";
            printTo(os, e.children[1], 1);
            break;
        case OperatorExpr::Node::Mul:
            printTo(os, e.children[0], 1);
            os << "*";
            printTo(os, e.children[1], 2);
            break;
        case OperatorExpr::Node::Pow:
            if (e.children[0].node == OperatorExpr::Node::Atom &&
                e.children[0].atom == OperatorExpr::AtomKind::ZInv) {
                // Positive powers of zinv fold back into the z^-k form; other
                // exponents need explicit grouping to re-parse.
                if (e.exponent > 0)
                    os << "z^" << -e.exponent;
                else
                    os << "(z^-1)^" << e.exponent;
                break;
            }
            printTo(os, e.children[0], 3);
            os << "^" << e.exponent;
            break;
        case OperatorExpr::Node::Atom:
            switch (e.atom) {
                case OperatorExpr::AtomKind::Z: os << "z"; break;
                case OperatorExpr::AtomKind::ZInv: os << "z^-1"; break;
                case OperatorExpr::AtomKind::T: os << "T"; break;
                case OperatorExpr::AtomKind::D: os << "d"; break;
                default: os << e.value.str(); break;
            }
            break;
    }
    if (parens) os << ")";
}

}  // namespace

OperatorExpr parseOperator(const std::string& text) {
    if (text.empty()) throw SyntaxError(0, {"expression"}, "empty input");
    return Parser(text).run();
}

DiffOp elaborate(const OperatorExpr& expr) {
    return convertPresentation(elaborateD(expr), Presentation::Theta);
}

std::string printExpr(const OperatorExpr& expr) {
    std::ostringstream os;
    printTo(os, expr, 0);
    return os.str();
}

DiffOp parseToOperator(const std::string& text) { return elaborate(parseOperator(text)); }

}  // namespace mellin
